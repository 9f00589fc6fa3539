#pragma once

#include <cstdint>
#include <vector>

#include "dfdio/comparison.hpp"
#include "dfdio/exactmath.hpp"
#include "dfdio/ints.hpp"

namespace dfdio {

// Every comparator below decides in cross-multiplied, radical-free form,
// entirely over exact integers. Nothing here touches floating point except
// screen_cmp, which returns Indeterminate rather than guess.

/// Order of n!!^(1/n) vs m!!^(1/m), decided by comparing (n!!)^m against
/// (m!!)^n exactly. Requires n, m >= 1.
Comparison cmp_dfact_root(uint64_t n, uint64_t m);

/// Order of n^(1/n) vs m^(1/m) via n^m against m^n. Requires n, m >= 1.
Comparison cmp_nth_root(uint64_t n, uint64_t m);

/// Squared form of the double-factorial ratio bound:
///   n even:  (n!!)^2 > n ((n-1)!!)^2
///   n odd: 2 (n!!)^2 > (n+1) ((n-1)!!)^2
/// Requires n >= 2.
bool check_ratio_bound(uint64_t n);

/// k^k < (k!!)^(k-1), the cross-multiplied form of k^(k/(k-1)) < k!!.
/// Only claimed for k >= 4; smaller k is rejected.
bool check_k_power_vs_dfact(uint64_t k);

/// (k+1)^k > 2^k k!, the AM-GM step. Requires k >= 2.
bool check_amgm_step(uint64_t k);

/// ((n-1)!!)^3 > 3 ((n-2)!!)^3 for odd n >= 7 (induction step of the
/// cubic case analysis).
bool check_k3_cube_ratio(uint64_t n);

/// ((n-2)!!)^3 > 2 * 3^(n-1) for odd n >= 7.
bool check_k3_cube_growth(uint64_t n);

// --- rigorous screening ------------------------------------------------

/// One factor base^exp of a formal product. base >= 1, exp >= 0; both may
/// be large (exp is never materialized as a power).
struct PowFactor {
  Nat base;
  Nat exp;
};

/// A formal product of power factors. An empty product is 1.
using ExprProduct = std::vector<PowFactor>;

/// Certified comparison of two formal products via logarithms evaluated
/// with directed rounding. Working precision starts at 128 bits and
/// doubles up to 1024; if the enclosing intervals still overlap the result
/// is Indeterminate and the caller must fall back to exact arithmetic.
/// Structurally identical products (after normalization) compare Equal.
Comparison screen_cmp(const ExprProduct& lhs, const ExprProduct& rhs);

/// A two-term side `first +- second` with non-negative terms, as appears
/// in the equation families.
struct TermPair {
  PowFactor first;
  PowFactor second;
  bool subtract = false;
};

/// Certified comparison of two such sides, same precision ladder as
/// screen_cmp but evaluated in the linear domain (so sums and differences
/// enclose correctly). Never claims Equal.
Comparison screen_cmp_sides(const TermPair& lhs, const TermPair& rhs);

}  // namespace dfdio
