#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "dfdio/comparison.hpp"
#include "dfdio/inequalities.hpp"
#include "dfdio/ints.hpp"

namespace dfdio {

/// The five equation families, all symmetric under (k, n) <-> (n, k):
///   T1: n!!^k    - n^k    = k!!^n    - k^n
///   T2: n!!^k    + n^k    = k!!^n    + k^n
///   T3: n!!^k    - n^k!!  = k!!^n    - k^n!!
///   T4: n!!^k    - n^k!   = k!!^n    - k^n!
///   T5: n!!^k!!  + n^k    = k!!^n!!  + k^n
enum class Family { t1, t2, t3, t4, t5 };

std::string_view family_name(Family f);
std::optional<Family> family_from_string(std::string_view s);

/// Default solver bound per family, sized so a full exact sweep stays
/// cheap: T1/T2 -> 12, T3/T4 -> 8, T5 -> 8.
uint64_t default_bound(Family f);

enum class Side { left, right };

/// How a reported solution was established. Diagonal pairs whose sides are
/// too large to materialize are confirmed by structural identity (both
/// sides are literally the same expression when k = n); everything else is
/// re-evaluated exactly.
enum class Verification { exact, identity };

struct SolutionRecord {
  Family family;
  uint64_t k = 0;
  uint64_t n = 0;
  Verification verification = Verification::exact;

  friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

/// One side of a family equation, as a formal two-term expression plus the
/// materialized value when the bit-size budget allowed it.
struct SideValue {
  TermPair expr;
  std::optional<Int> value;
};

struct EvalConfig {
  /// Hard per-value ceiling for exact materialization, in bits.
  uint64_t bit_ceiling = uint64_t{1} << 25;
  /// Diagonal records are exact-confirmed when both sides fit this many
  /// bits; beyond it they carry Verification::identity.
  uint64_t identity_confirm_bits = uint64_t{1} << 20;
  bool prune = true;
};

/// Config with the bit ceiling optionally overridden by the environment
/// variable DFDIO_BIT_CEILING (decimal bits, minimum 65536).
EvalConfig default_eval_config();

/// Formal expression for one side of the family equation at (k, n).
TermPair side_expression(Family f, Side side, uint64_t k, uint64_t n);

/// Exact value when the estimated bit size fits budget_bits, otherwise the
/// unevaluated expression (for screening).
SideValue eval_side(Family f, Side side, uint64_t k, uint64_t n, uint64_t budget_bits);

/// Equal iff the family equation holds at (k, n). Screens with certified
/// intervals first and falls back to exact evaluation; never returns
/// Indeterminate. Throws budget_error when the exact fallback would exceed
/// cfg.bit_ceiling.
Comparison equation_holds(Family f, uint64_t k, uint64_t n, const EvalConfig& cfg = default_eval_config());

struct SolveOutcome {
  std::vector<SolutionRecord> solutions;             // ascending (k, n)
  std::vector<std::pair<uint64_t, uint64_t>> pruned; // pairs skipped by certificates
};

/// All (k, n) with 1 <= k, n <= bound satisfying the family equation, in
/// row-major (k, n) order. With cfg.prune, pairs are skipped only when the
/// exact monotonicity certificates of the corresponding case analysis
/// prove strict domination; everything else is exact-checked.
SolveOutcome solve_family_detailed(Family f, uint64_t bound, const EvalConfig& cfg = default_eval_config());

std::vector<SolutionRecord> solve_family(Family f, uint64_t bound, const EvalConfig& cfg = default_eval_config());

}  // namespace dfdio
