#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dfdio/ints.hpp"

namespace dfdio {

/// Which exponent the A_i carry in the product b n_1!! A_1^e_1 ... :
/// e_i = n_i (plain), n_i! (fact_exponent) or n_i!! (dfact_exponent).
enum class ProductVariant { plain, fact_exponent, dfact_exponent };

std::string_view variant_name(ProductVariant v);
std::optional<ProductVariant> variant_from_string(std::string_view s);

/// Parameters of the explicit solution family for x^d = b prod n_i!! A_i^{n_i}
/// in the d <= r regime: a non-zero b, positive A_1..A_r, 1 <= d <= r and a
/// free index t >= 1 (one witness per t). When b < 0 both d and t must be
/// odd; b < 0 with even d admits no solution at all.
struct ConstructParams {
  Int b;
  std::vector<Nat> A;
  uint64_t d = 1;
  uint64_t t = 1;
};

/// A fully materialized witness. The n-tuple always has the shape
/// (m, ..., m, m+2, 1, ..., 1) with d-1 leading m's, and m + 2 = d (s + 1).
struct Witness {
  ConstructParams params;
  ProductVariant variant = ProductVariant::plain;
  Int R;        // b (A_1...A_d)^(d-2) A_d^2 A_{d+1}...A_r (sign of b included)
  Nat s;
  uint64_t m = 0;
  std::vector<Nat> n;
  Int x;
  bool checked = false;
  std::optional<Nat> y;  // free parameter of the factorial-exponent variant
};

struct ConstructLimits {
  /// Witnesses with s beyond this are rejected before m!! is touched;
  /// (Rd)^(td-1) grows doubly fast and must fail loudly, not hang.
  uint64_t s_ceiling = 1000000;
  /// Per-value materialization ceiling for the factorial-exponent variant.
  uint64_t bit_ceiling = uint64_t{1} << 25;
};

/// Builds the witness for the plain variant:
///   R  = b (A_1...A_d)^(d-2) A_d^2 A_{d+1}...A_r,
///   s  = |Rd|^(td-1) - 1,   m = d (s+1) - 2,
///   x  = (A_1...A_d)^s m!! (Rd)^t,
/// then exact-checks x^d against the defining product. For d = 1 every
/// n-tuple solves the equation directly; the witness n = (t+2, 1, ..., 1)
/// with x = b (t+2)!! A_1^{t+2} A_2...A_r is emitted so distinct t yield
/// distinct witnesses. Rejects b < 0 with even d (no solutions) and
/// parameter sets violating the branch constraints.
Witness derive_witness(const ConstructParams& p, const ConstructLimits& lim = {});

/// Witness for the variant with A_i^{n_i!} in place of A_i^{n_i} (d even,
/// b > 0): m + 2 = b^(d-1) (A_{d+1}...A_r)^(d-1) y^d, and
///   x = m!! A_1^t ... A_{d-1}^t A_d^{(m+2)(m+1)t} b A_{d+1}...A_r y
/// with t = m!/d. Rejects m <= d (y too small), odd d, and b <= 0.
Witness derive_witness_factorial_variant(const ConstructParams& p, const Nat& y,
                                         const ConstructLimits& lim = {});

/// Exact truth of x^d = b prod n_i!! A_i^{e_i} under the chosen exponent
/// variant. Lengths of A and n must match; n_i >= 1.
bool verify_solution(const Int& b, const std::vector<Nat>& A, const std::vector<Nat>& n,
                     const Int& x, uint64_t d, ProductVariant variant,
                     const ConstructLimits& lim = {});

/// One-line JSON record: {params, R, s, m, n, x, checked} with big values
/// as decimal strings.
std::string witness_to_json(const Witness& w);

}  // namespace dfdio
