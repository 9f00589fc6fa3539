#include "dfdio/construct.hpp"

#include <json.hpp>

#include "dfdio/exactmath.hpp"

namespace dfdio {

std::string_view variant_name(ProductVariant v) {
  switch (v) {
    case ProductVariant::plain: return "plain";
    case ProductVariant::fact_exponent: return "fact_exponent";
    default: return "dfact_exponent";
  }
}

std::optional<ProductVariant> variant_from_string(std::string_view s) {
  if (s == "plain") return ProductVariant::plain;
  if (s == "fact_exponent" || s == "fact") return ProductVariant::fact_exponent;
  if (s == "dfact_exponent" || s == "dfact") return ProductVariant::dfact_exponent;
  return std::nullopt;
}

namespace {

void validate_params(const ConstructParams& p) {
  if (sgn(p.b) == 0) throw hypothesis_error("b must be non-zero");
  if (p.A.empty()) throw hypothesis_error("need at least one A_i");
  for (const Nat& a : p.A)
    if (sgn(a) <= 0) throw hypothesis_error("every A_i must be a positive integer");
  if (p.d < 1) throw hypothesis_error("d must be >= 1");
  if (p.t < 1) throw hypothesis_error("t must be >= 1");
  if (p.d > p.A.size())
    throw hypothesis_error("d > r: this regime has only finitely many solutions; use the finite search");
  if (sgn(p.b) < 0) {
    if (p.d % 2 == 0) throw hypothesis_error("no solutions: b < 0 and d even");
    if (p.t % 2 == 0) throw hypothesis_error("b < 0 requires odd t (so td stays odd)");
  }
}

// The exponent variant never materializes A^e blindly: e itself may be a
// factorial. Bounds the bit size first and fails loudly.
Int checked_pow(const Nat& base, const Nat& exp, uint64_t bit_ceiling) {
  if (base == 1 || sgn(exp) == 0) return 1;
  Nat bits = exp * static_cast<unsigned long>(bit_length(base));
  if (bits > static_cast<unsigned long>(bit_ceiling))
    throw budget_error("power factor exceeds the bit ceiling");
  return int_pow(base, exp);
}

Nat variant_exponent(uint64_t ni, ProductVariant variant, const Nat& base, uint64_t bit_ceiling) {
  switch (variant) {
    case ProductVariant::plain:
      return Nat(static_cast<unsigned long>(ni));
    case ProductVariant::fact_exponent:
      // 26! already tops 2^64 bits of output for any base >= 2.
      if (base > 1 && ni > 25) throw budget_error("A_i^(n_i!) exceeds any supported ceiling");
      return base == 1 ? Nat(0) : factorial(ni);
    default:
      if (base > 1 && ni > 41) throw budget_error("A_i^(n_i!!) exceeds any supported ceiling");
      return base == 1 ? Nat(0) : double_factorial(ni);
  }
}

}  // namespace

bool verify_solution(const Int& b, const std::vector<Nat>& A, const std::vector<Nat>& n,
                     const Int& x, uint64_t d, ProductVariant variant,
                     const ConstructLimits& lim) {
  if (A.size() != n.size()) throw std::invalid_argument("verify_solution: |A| != |n|");
  if (d < 1) throw std::invalid_argument("verify_solution: d must be >= 1");
  Int product = b;
  for (size_t i = 0; i < A.size(); ++i) {
    if (sgn(n[i]) <= 0) throw std::invalid_argument("verify_solution: every n_i must be >= 1");
    uint64_t ni = to_u64(n[i], "n_i");
    product *= double_factorial(ni);
    product *= checked_pow(A[i], variant_exponent(ni, variant, A[i], lim.bit_ceiling),
                           lim.bit_ceiling);
  }
  Int lhs = int_pow(x, Nat(static_cast<unsigned long>(d)));
  return lhs == product;
}

Witness derive_witness(const ConstructParams& p, const ConstructLimits& lim) {
  validate_params(p);
  const uint64_t r = p.A.size();
  const uint64_t d = p.d;
  Witness w;
  w.params = p;
  w.variant = ProductVariant::plain;

  if (d == 1) {
    // Every n-tuple solves x = b prod n_i!! A_i^{n_i} directly; pick
    // n_1 = t + 2 so distinct t give distinct witnesses, and keep the
    // m + 2 = d (s + 1) bookkeeping consistent (m = t, s = t + 1).
    w.m = p.t;
    w.s = Nat(static_cast<unsigned long>(p.t + 1));
    w.n.assign(r, Nat(1));
    w.n[0] = Nat(static_cast<unsigned long>(p.t + 2));
    Int R = p.b;
    for (const Nat& a : p.A) R *= a;
    w.R = R;
    Int x = p.b * double_factorial(p.t + 2);
    x *= checked_pow(p.A[0], Nat(static_cast<unsigned long>(p.t + 2)), lim.bit_ceiling);
    for (size_t i = 1; i < r; ++i) x *= p.A[i];
    w.x = x;
    w.checked = verify_solution(p.b, p.A, w.n, w.x, d, ProductVariant::plain, lim);
    return w;
  }

  Nat head = 1;  // A_1 ... A_d
  for (uint64_t i = 0; i < d; ++i) head *= p.A[i];
  Int R = p.b;
  R *= int_pow(head, Nat(static_cast<unsigned long>(d - 2)));
  R *= p.A[d - 1] * p.A[d - 1];
  for (uint64_t i = d; i < r; ++i) R *= p.A[i];
  w.R = R;

  Int rd = R * static_cast<unsigned long>(d);
  Nat abs_rd = abs(rd);
  uint64_t e = p.t * d - 1;
  // s = |Rd|^(td-1) - 1 grows doubly fast; bound it before computing.
  if (e * bit_length(abs_rd) > 64)
    throw budget_error("witness size guard: s = |Rd|^(td-1) - 1 exceeds the ceiling");
  Nat s = int_pow(abs_rd, Nat(static_cast<unsigned long>(e))) - 1;
  if (s > static_cast<unsigned long>(lim.s_ceiling))
    throw budget_error("witness size guard: s exceeds the configured ceiling");
  w.s = s;
  Nat m_z = Nat(static_cast<unsigned long>(d)) * (s + 1) - 2;
  w.m = to_u64(m_z, "m");

  w.n.assign(r, Nat(1));
  for (uint64_t i = 0; i + 1 < d; ++i) w.n[i] = Nat(static_cast<unsigned long>(w.m));
  w.n[d - 1] = Nat(static_cast<unsigned long>(w.m + 2));

  // x = (A_1...A_d)^s m!! (Rd)^t; with Rd < 0 and odd td the sign carries
  // through to x as required.
  Int x = checked_pow(head, s, uint64_t{1} << 57);
  x *= double_factorial(w.m);
  x *= int_pow(rd, Nat(static_cast<unsigned long>(p.t)));
  w.x = x;
  w.checked = verify_solution(p.b, p.A, w.n, w.x, d, ProductVariant::plain, lim);
  return w;
}

Witness derive_witness_factorial_variant(const ConstructParams& p, const Nat& y,
                                         const ConstructLimits& lim) {
  if (sgn(p.b) <= 0) throw hypothesis_error("factorial-exponent variant requires b > 0");
  if (p.d < 2 || p.d % 2 != 0)
    throw hypothesis_error("factorial-exponent variant is constructed for even d >= 2");
  if (p.d > p.A.size()) throw hypothesis_error("factorial-exponent variant requires d <= r");
  if (sgn(y) <= 0) throw hypothesis_error("y must be a positive integer");
  for (const Nat& a : p.A)
    if (sgn(a) <= 0) throw hypothesis_error("every A_i must be a positive integer");

  const uint64_t r = p.A.size();
  const uint64_t d = p.d;
  Nat tail = 1;  // A_{d+1} ... A_r
  for (uint64_t i = d; i < r; ++i) tail *= p.A[i];

  // m + 2 = b^(d-1) (A_{d+1}...A_r)^(d-1) y^d
  Nat m2 = Nat(int_pow(p.b, Nat(static_cast<unsigned long>(d - 1))));
  m2 *= int_pow(tail, Nat(static_cast<unsigned long>(d - 1)));
  m2 *= checked_pow(y, Nat(static_cast<unsigned long>(d)), uint64_t{1} << 40);
  if (m2 <= static_cast<unsigned long>(d + 2))
    throw hypothesis_error("y too small: the construction needs m > d");
  Nat m_z = m2 - 2;
  if (m_z > static_cast<unsigned long>(lim.s_ceiling))
    throw budget_error("witness size guard: m exceeds the configured ceiling");
  uint64_t m = to_u64(m_z, "m");

  Witness w;
  w.params = p;
  w.variant = ProductVariant::fact_exponent;
  w.y = y;
  w.m = m;
  Int R = p.b * tail;  // the factor whose (d-1) power scales y^d into m + 2
  w.R = R;

  // t with m! = t d; d <= m guarantees divisibility.
  Nat t = factorial(m);
  mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(d));
  w.s = t;

  w.n.assign(r, Nat(1));
  for (uint64_t i = 0; i + 1 < d; ++i) w.n[i] = Nat(static_cast<unsigned long>(m));
  w.n[d - 1] = Nat(static_cast<unsigned long>(m + 2));

  // x = m!! A_1^t ... A_{d-1}^t A_d^((m+2)(m+1)t) b A_{d+1}...A_r y
  Int x = double_factorial(m);
  for (uint64_t i = 0; i + 1 < d; ++i) x *= checked_pow(p.A[i], t, lim.bit_ceiling);
  Nat big_exp = t * static_cast<unsigned long>(m + 2);
  big_exp *= static_cast<unsigned long>(m + 1);
  x *= checked_pow(p.A[d - 1], big_exp, lim.bit_ceiling);
  x *= p.b;
  x *= tail;
  x *= y;
  w.x = x;
  w.checked = verify_solution(p.b, p.A, w.n, w.x, d, ProductVariant::fact_exponent, lim);
  return w;
}

std::string witness_to_json(const Witness& w) {
  nlohmann::json j;
  nlohmann::json params;
  params["b"] = w.params.b.get_str();
  params["A"] = nlohmann::json::array();
  for (const Nat& a : w.params.A) params["A"].push_back(a.get_str());
  params["d"] = w.params.d;
  params["t"] = w.params.t;
  j["params"] = params;
  j["variant"] = std::string(variant_name(w.variant));
  j["R"] = w.R.get_str();
  j["s"] = w.s.get_str();
  j["m"] = w.m;
  j["n"] = nlohmann::json::array();
  for (const Nat& v : w.n) j["n"].push_back(v.get_str());
  j["x"] = w.x.get_str();
  j["checked"] = w.checked;
  if (w.y) j["y"] = w.y->get_str();
  return j.dump();
}

}  // namespace dfdio
