#include "dfdio/inequalities.hpp"

#include <mpfr.h>

#include <algorithm>

namespace dfdio {

namespace {

// Materialized cross-powers stay affordable well past the certified test
// ranges; beyond that the caller gets a loud failure instead of a hang.
void guard_cross_power(uint64_t n, uint64_t m) {
  if (n > 20000 || m > 20000)
    throw budget_error("cross-multiplied comparison beyond supported range");
}

Int pow_u(const Int& base, uint64_t e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

Comparison cmp_dfact_root(uint64_t n, uint64_t m) {
  if (n < 1 || m < 1) throw std::invalid_argument("cmp_dfact_root: arguments must be >= 1");
  if (n == m) return Comparison::equal;
  guard_cross_power(n, m);
  Int lhs = pow_u(double_factorial(n), m);
  Int rhs = pow_u(double_factorial(m), n);
  return comparison_from_sign(cmp(lhs, rhs));
}

Comparison cmp_nth_root(uint64_t n, uint64_t m) {
  if (n < 1 || m < 1) throw std::invalid_argument("cmp_nth_root: arguments must be >= 1");
  if (n == m) return Comparison::equal;
  guard_cross_power(n, m);
  Int lhs = pow_u(Int(static_cast<unsigned long>(n)), m);
  Int rhs = pow_u(Int(static_cast<unsigned long>(m)), n);
  return comparison_from_sign(cmp(lhs, rhs));
}

bool check_ratio_bound(uint64_t n) {
  if (n < 2) throw std::invalid_argument("check_ratio_bound: n must be >= 2");
  Int dn = double_factorial(n);
  Int dn1 = double_factorial(n - 1);
  if (n % 2 == 0) return dn * dn > Int(static_cast<unsigned long>(n)) * dn1 * dn1;
  return 2 * dn * dn > Int(static_cast<unsigned long>(n + 1)) * dn1 * dn1;
}

bool check_k_power_vs_dfact(uint64_t k) {
  if (k < 4) throw std::invalid_argument("check_k_power_vs_dfact: only claimed for k >= 4");
  guard_cross_power(k, k);
  Int lhs = pow_u(Int(static_cast<unsigned long>(k)), k);
  Int rhs = pow_u(double_factorial(k), k - 1);
  return lhs < rhs;
}

bool check_amgm_step(uint64_t k) {
  if (k < 2) throw std::invalid_argument("check_amgm_step: k must be >= 2");
  guard_cross_power(k, k);
  Int lhs = pow_u(Int(static_cast<unsigned long>(k + 1)), k);
  Int rhs = pow_u(Int(2), k) * factorial(k);
  return lhs > rhs;
}

bool check_k3_cube_ratio(uint64_t n) {
  if (n < 7 || n % 2 == 0)
    throw std::invalid_argument("check_k3_cube_ratio: n must be odd and >= 7");
  Int a = pow_u(double_factorial(n - 1), 3);
  Int b = pow_u(double_factorial(n - 2), 3);
  return a > 3 * b;
}

bool check_k3_cube_growth(uint64_t n) {
  if (n < 7 || n % 2 == 0)
    throw std::invalid_argument("check_k3_cube_growth: n must be odd and >= 7");
  Int a = pow_u(double_factorial(n - 2), 3);
  Int b = 2 * pow_u(Int(3), n - 1);
  return a > b;
}

// --- screening ----------------------------------------------------------

namespace {

constexpr mpfr_prec_t kStartPrec = 128;
constexpr mpfr_prec_t kMaxPrec = 1024;

struct MpfrValue {
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~MpfrValue() { mpfr_clear(v); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_t v;
};

ExprProduct normalized(const ExprProduct& e) {
  ExprProduct out;
  for (const auto& f : e) {
    if (sgn(f.base) <= 0) throw std::invalid_argument("screen_cmp: bases must be >= 1");
    if (sgn(f.exp) < 0) throw std::invalid_argument("screen_cmp: exponents must be >= 0");
    if (f.base == 1 || sgn(f.exp) == 0) continue;
    out.push_back(f);
  }
  std::sort(out.begin(), out.end(),
            [](const PowFactor& a, const PowFactor& b) { return a.base < b.base; });
  ExprProduct merged;
  for (auto& f : out) {
    if (!merged.empty() && merged.back().base == f.base)
      merged.back().exp += f.exp;
    else
      merged.push_back(std::move(f));
  }
  return merged;
}

bool same_product(const ExprProduct& a, const ExprProduct& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].base != b[i].base || a[i].exp != b[i].exp) return false;
  return true;
}

// Directed bound on sum of exp * ln(base). All summands are >= 0, so one
// rounding direction bounds the whole sum.
void log_of_product(const ExprProduct& e, mpfr_t out, mpfr_rnd_t rnd, mpfr_prec_t prec) {
  mpfr_set_zero(out, 1);
  MpfrValue term(prec);
  for (const auto& f : e) {
    mpfr_set_z(term.v, f.base.get_mpz_t(), rnd);
    mpfr_log(term.v, term.v, rnd);
    mpfr_mul_z(term.v, term.v, f.exp.get_mpz_t(), rnd);
    mpfr_add(out, out, term.v, rnd);
  }
}

// Directed bound on base^exp itself (linear domain). Overflow saturates in
// the rounding direction, which keeps the enclosure valid.
void value_of_factor(const PowFactor& f, mpfr_t out, mpfr_rnd_t rnd) {
  MpfrValue base(mpfr_get_prec(out));
  mpfr_set_z(base.v, f.base.get_mpz_t(), rnd);
  mpfr_pow_z(out, base.v, f.exp.get_mpz_t(), rnd);
}

void side_bound(const TermPair& side, mpfr_t out, mpfr_rnd_t rnd, mpfr_prec_t prec) {
  MpfrValue a(prec), b(prec);
  value_of_factor(side.first, a.v, rnd);
  if (side.subtract) {
    // lower bound of a - b needs the upper bound of b, and vice versa
    mpfr_rnd_t opposite = (rnd == MPFR_RNDD) ? MPFR_RNDU : MPFR_RNDD;
    value_of_factor(side.second, b.v, opposite);
    mpfr_sub(out, a.v, b.v, rnd);
  } else {
    value_of_factor(side.second, b.v, rnd);
    mpfr_add(out, a.v, b.v, rnd);
  }
}

}  // namespace

Comparison screen_cmp(const ExprProduct& lhs, const ExprProduct& rhs) {
  ExprProduct l = normalized(lhs);
  ExprProduct r = normalized(rhs);
  if (same_product(l, r)) return Comparison::equal;
  for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
    MpfrValue llo(prec), lhi(prec), rlo(prec), rhi(prec);
    log_of_product(l, llo.v, MPFR_RNDD, prec);
    log_of_product(l, lhi.v, MPFR_RNDU, prec);
    log_of_product(r, rlo.v, MPFR_RNDD, prec);
    log_of_product(r, rhi.v, MPFR_RNDU, prec);
    if (mpfr_greater_p(llo.v, rhi.v)) return Comparison::greater;
    if (mpfr_less_p(lhi.v, rlo.v)) return Comparison::less;
  }
  return Comparison::indeterminate;
}

Comparison screen_cmp_sides(const TermPair& lhs, const TermPair& rhs) {
  for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
    MpfrValue llo(prec), lhi(prec), rlo(prec), rhi(prec);
    side_bound(lhs, llo.v, MPFR_RNDD, prec);
    side_bound(lhs, lhi.v, MPFR_RNDU, prec);
    side_bound(rhs, rlo.v, MPFR_RNDD, prec);
    side_bound(rhs, rhi.v, MPFR_RNDU, prec);
    if (mpfr_greater_p(llo.v, rhi.v)) return Comparison::greater;
    if (mpfr_less_p(lhi.v, rlo.v)) return Comparison::less;
  }
  return Comparison::indeterminate;
}

}  // namespace dfdio
