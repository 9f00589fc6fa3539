#include "dfdio/equations.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace dfdio {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::t1: return "T1";
    case Family::t2: return "T2";
    case Family::t3: return "T3";
    case Family::t4: return "T4";
    default: return "T5";
  }
}

std::optional<Family> family_from_string(std::string_view s) {
  if (s == "T1" || s == "t1") return Family::t1;
  if (s == "T2" || s == "t2") return Family::t2;
  if (s == "T3" || s == "t3") return Family::t3;
  if (s == "T4" || s == "t4") return Family::t4;
  if (s == "T5" || s == "t5") return Family::t5;
  return std::nullopt;
}

uint64_t default_bound(Family f) {
  switch (f) {
    case Family::t1:
    case Family::t2: return 12;
    default: return 8;
  }
}

EvalConfig default_eval_config() {
  static const uint64_t ceiling = [] {
    uint64_t v = uint64_t{1} << 25;
    if (const char* env = std::getenv("DFDIO_BIT_CEILING")) {
      char* end = nullptr;
      unsigned long long parsed = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && parsed >= 65536) v = parsed;
    }
    return v;
  }();
  EvalConfig cfg;
  cfg.bit_ceiling = ceiling;
  return cfg;
}

namespace {

void guard_grid(uint64_t k, uint64_t n) {
  if (k < 1 || n < 1) throw std::invalid_argument("family equations need k, n >= 1");
  if (k > 1000000 || n > 1000000)
    throw budget_error("family equations beyond supported grid range", k, n);
}

Nat nat_of(uint64_t v) {
  Nat r;
  mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(v));
  return r;
}

// The side with main variable v and other variable w:
//   T1: v!!^w - v^w        T2: v!!^w + v^w      T3: v!!^w - v^(w!!)
//   T4: v!!^w - v^(w!)     T5: v!!^(w!!) + v^w
TermPair make_side(Family f, uint64_t v, uint64_t w) {
  TermPair side;
  side.first = {double_factorial(v), nat_of(w)};
  switch (f) {
    case Family::t1:
      side.second = {nat_of(v), nat_of(w)};
      side.subtract = true;
      break;
    case Family::t2:
      side.second = {nat_of(v), nat_of(w)};
      side.subtract = false;
      break;
    case Family::t3:
      side.second = {nat_of(v), double_factorial(w)};
      side.subtract = true;
      break;
    case Family::t4:
      side.second = {nat_of(v), factorial(w)};
      side.subtract = true;
      break;
    default:
      side.first = {double_factorial(v), double_factorial(w)};
      side.second = {nat_of(v), nat_of(w)};
      side.subtract = false;
      break;
  }
  return side;
}

// Upper estimate of the bit size of base^exp.
Nat term_bits(const PowFactor& t) {
  if (t.base <= 1 || sgn(t.exp) == 0) return 1;
  return t.exp * static_cast<unsigned long>(bit_length(t.base));
}

Int eval_term(const PowFactor& t) {
  if (sgn(t.exp) == 0 || t.base == 1) return 1;
  Int r;
  mpz_pow_ui(r.get_mpz_t(), t.base.get_mpz_t(), mpz_get_ui(t.exp.get_mpz_t()));
  return r;
}

// Exact certificate that the equation cannot hold at an off-diagonal pair,
// following the proofs' case analyses. Only difference families admit one;
// the sum families are exact-checked outright.
//
// For lo = min(k,n) in {1, 2} the lo-side collapses (1!!^n - 1^e = 0 and
// 2!!^n - 2^e = 2^n - 2^e), so hi!! > hi settles the sign of each side.
// For lo >= 3 the two monotone cross-comparisons must both certify, plus
// the exponent-growth comparison for T3/T4.
bool prunable(Family f, uint64_t k, uint64_t n) {
  uint64_t lo = std::min(k, n);
  uint64_t hi = std::max(k, n);
  switch (f) {
    case Family::t1:
      if (lo <= 2) return double_factorial(hi) > hi;
      return cmp_dfact_root(hi, lo) == Comparison::greater &&
             cmp_nth_root(hi, lo) == Comparison::less;
    case Family::t3:
      if (lo <= 2) return double_factorial(hi) > hi;
      return cmp_dfact_root(hi, lo) == Comparison::greater &&
             cmp_nth_root(hi, lo) == Comparison::less &&
             double_factorial(hi - 2) > double_factorial(lo - 2);
    case Family::t4:
      if (lo == 1) return double_factorial(hi) > hi;
      if (lo == 2) return double_factorial(hi) > hi && factorial(hi) > hi;
      return cmp_dfact_root(hi, lo) == Comparison::greater &&
             cmp_nth_root(hi, lo) == Comparison::less &&
             factorial(hi - 1) > factorial(lo - 1);
    default:
      return false;
  }
}

}  // namespace

TermPair side_expression(Family f, Side side, uint64_t k, uint64_t n) {
  guard_grid(k, n);
  return side == Side::left ? make_side(f, n, k) : make_side(f, k, n);
}

SideValue eval_side(Family f, Side side, uint64_t k, uint64_t n, uint64_t budget_bits) {
  SideValue out;
  out.expr = side_expression(f, side, k, n);
  Nat bits = term_bits(out.expr.first) + term_bits(out.expr.second);
  if (bits <= static_cast<unsigned long>(budget_bits)) {
    Int a = eval_term(out.expr.first);
    Int b = eval_term(out.expr.second);
    out.value = out.expr.subtract ? Int(a - b) : Int(a + b);
  }
  return out;
}

Comparison equation_holds(Family f, uint64_t k, uint64_t n, const EvalConfig& cfg) {
  guard_grid(k, n);
  if (k == n) return Comparison::equal;  // both sides are the same expression
  Comparison screened =
      screen_cmp_sides(side_expression(f, Side::left, k, n), side_expression(f, Side::right, k, n));
  if (screened != Comparison::indeterminate) return screened;
  SideValue lv = eval_side(f, Side::left, k, n, cfg.bit_ceiling);
  SideValue rv = eval_side(f, Side::right, k, n, cfg.bit_ceiling);
  if (!lv.value || !rv.value)
    throw budget_error(std::string(family_name(f)) + ": exact evaluation exceeds the bit ceiling",
                       k, n);
  return comparison_from_sign(cmp(*lv.value, *rv.value));
}

SolveOutcome solve_family_detailed(Family f, uint64_t bound, const EvalConfig& cfg) {
  if (bound < 1) throw std::invalid_argument("solve_family: bound must be >= 1");
  SolveOutcome out;
  for (uint64_t k = 1; k <= bound; ++k) {
    for (uint64_t n = 1; n <= bound; ++n) {
      if (k == n) {
        uint64_t confirm_budget = std::min(cfg.identity_confirm_bits, cfg.bit_ceiling);
        SideValue lv = eval_side(f, Side::left, k, n, confirm_budget);
        if (lv.value) {
          SideValue rv = eval_side(f, Side::right, k, n, confirm_budget);
          if (!rv.value || *lv.value != *rv.value)
            throw std::logic_error("diagonal identity failed exact confirmation");
          out.solutions.push_back({f, k, n, Verification::exact});
        } else {
          out.solutions.push_back({f, k, n, Verification::identity});
        }
        continue;
      }
      if (cfg.prune && prunable(f, k, n)) {
        out.pruned.emplace_back(k, n);
        continue;
      }
      SideValue lv = eval_side(f, Side::left, k, n, cfg.bit_ceiling);
      SideValue rv = eval_side(f, Side::right, k, n, cfg.bit_ceiling);
      if (!lv.value || !rv.value)
        throw budget_error(std::string(family_name(f)) + ": exact evaluation exceeds the bit ceiling",
                           k, n);
      if (*lv.value == *rv.value) out.solutions.push_back({f, k, n, Verification::exact});
    }
  }
  return out;
}

std::vector<SolutionRecord> solve_family(Family f, uint64_t bound, const EvalConfig& cfg) {
  return solve_family_detailed(f, bound, cfg).solutions;
}

}  // namespace dfdio
