#include "dfdio/obstruction.hpp"

#include <json.hpp>

#include <algorithm>

#include "dfdio/exactmath.hpp"

namespace dfdio {

std::string_view cert_case_name(CertCase c) {
  switch (c) {
    case CertCase::odd_n: return "odd_n";
    case CertCase::even_n: return "even_n";
    case CertCase::r2_case1: return "r2_case1";
    case CertCase::r2_case2: return "r2_case2";
    default: return "r2_case3";
  }
}

namespace {

void validate_inputs(const Int& b, const std::vector<Nat>& A) {
  if (sgn(b) == 0) throw std::invalid_argument("b must be non-zero");
  if (A.empty()) throw std::invalid_argument("need at least one A_i");
  for (const Nat& a : A)
    if (sgn(a) <= 0) throw std::invalid_argument("every A_i must be a positive integer");
}

uint64_t max_component(const Int& b, const std::vector<Nat>& A) {
  Nat m = abs(b);
  for (const Nat& a : A) m = std::max(m, a);
  return to_u64(m, "max{A_i, |b|}");
}

uint64_t vp_u64(uint64_t p, const Int& v) {
  Int tmp;
  Int pz(static_cast<unsigned long>(p));
  return mpz_remove(tmp.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t());
}

// Picks the largest interval prime that exceeds `floor_above` and whose
// exponent in the product is positive and below d.
std::optional<ObstructionCertificate> pick_prime(
    uint64_t n_witnessed, uint64_t interval_lo, uint64_t interval_hi, uint64_t floor_above,
    uint64_t threshold, CertCase tag, uint64_t d, const Int& b, const std::vector<Nat>& A,
    const std::vector<uint64_t>& tuple) {
  std::vector<uint64_t> ps = primes_in_interval(interval_lo, interval_hi);
  for (auto it = ps.rbegin(); it != ps.rend(); ++it) {
    if (*it <= floor_above) continue;
    uint64_t e = exponent_in_product(*it, b, A, tuple);
    if (e >= 1 && e < d) return ObstructionCertificate{n_witnessed, *it, e, threshold, tag};
  }
  return std::nullopt;
}

std::optional<ObstructionCertificate> pair_certificate(uint64_t n, uint64_t m, const Int& b,
                                                       const std::vector<Nat>& A, uint64_t d) {
  uint64_t mx = max_component(b, A);
  CertCase tag = (n > m) ? CertCase::r2_case1 : (n < m) ? CertCase::r2_case2 : CertCase::r2_case3;
  uint64_t c = (tag == CertCase::r2_case2) ? m : n;  // the witnessing coordinate
  if (c % 2 == 1) {
    uint64_t thr = 2 * mx;
    if (c <= thr) return std::nullopt;
    return pick_prime(c, c / 2, c, mx, thr, tag, d, b, A, {n, m});
  }
  uint64_t l = c / 2;
  uint64_t mx2 = std::max<uint64_t>(mx, 2);
  uint64_t thr = 2 * mx2;
  if (l <= thr) return std::nullopt;
  return pick_prime(c, l / 2, l, mx2, thr, tag, d, b, A, {n, m});
}

}  // namespace

uint64_t exponent_in_product(uint64_t p, const Int& b, const std::vector<Nat>& A,
                             const std::vector<uint64_t>& n) {
  if (!is_prime(p)) throw std::invalid_argument("exponent_in_product: p is not prime");
  if (A.size() != n.size()) throw std::invalid_argument("exponent_in_product: |A| != |n|");
  validate_inputs(b, A);
  uint64_t e = vp_u64(p, b);
  for (size_t i = 0; i < A.size(); ++i) {
    e += vp_double_factorial(p, n[i]);
    e += n[i] * vp_u64(p, A[i]);
  }
  return e;
}

std::optional<ObstructionCertificate> certificate_for(uint64_t n, const Int& b,
                                                      const std::vector<Nat>& A, uint64_t d) {
  validate_inputs(b, A);
  if (A.size() != 1)
    throw std::invalid_argument("certificate_for is the single-coordinate (r = 1) certificate");
  if (d <= A.size()) throw hypothesis_error("certificate_for requires d > r");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  uint64_t mx = max_component(b, A);
  if (n % 2 == 1) {
    uint64_t thr = 2 * mx;
    if (n <= thr) return std::nullopt;
    return pick_prime(n, n / 2, n, mx, thr, CertCase::odd_n, d, b, A, {n});
  }
  uint64_t l = n / 2;
  uint64_t mx2 = std::max<uint64_t>(mx, 2);
  uint64_t thr = 2 * mx2;
  if (l <= thr) return std::nullopt;
  return pick_prime(n, l / 2, l, mx2, thr, CertCase::even_n, d, b, A, {n});
}

SearchReport finite_search(const Int& b, const std::vector<Nat>& A, uint64_t d, uint64_t slack) {
  validate_inputs(b, A);
  const uint64_t r = A.size();
  if (d <= r)
    throw hypothesis_error("d <= r: infinitely many solutions exist; use the construct command");
  if (r > 2)
    throw hypothesis_error(
        "finite search implemented for r in {1, 2}; the threshold formula 2 max{A_i, |b|, 2} "
        "applies for any r");

  SearchReport report;
  report.b = b;
  report.A = A;
  report.d = d;
  uint64_t thr = 2 * std::max<uint64_t>(max_component(b, A), 2) + slack;
  report.threshold = thr;
  const uint64_t sweep = 2 * thr;

  std::vector<uint64_t> tuple(r, 1);
  for (;;) {
    Int product = b;
    for (size_t i = 0; i < r; ++i) {
      product *= double_factorial(tuple[i]);
      product *= int_pow(A[i], Nat(static_cast<unsigned long>(tuple[i])));
    }
    if (auto root = is_perfect_dth_power(product, d))
      report.solutions.emplace_back(tuple, *root);
    if (r == 1) {
      if (auto cert = certificate_for(tuple[0], b, A, d)) report.certificates.push_back(*cert);
    } else {
      if (auto cert = pair_certificate(tuple[0], tuple[1], b, A, d))
        report.certificates.push_back(*cert);
    }
    // next tuple, last coordinate fastest
    size_t i = r;
    while (i > 0) {
      --i;
      if (tuple[i] < sweep) {
        ++tuple[i];
        std::fill(tuple.begin() + i + 1, tuple.end(), 1);
        break;
      }
      if (i == 0) return report;
    }
  }
}

std::string report_to_json(const SearchReport& r) {
  nlohmann::json j;
  j["b"] = r.b.get_str();
  j["A"] = nlohmann::json::array();
  for (const Nat& a : r.A) j["A"].push_back(a.get_str());
  j["d"] = r.d;
  j["threshold"] = r.threshold;
  j["sweep_bound"] = 2 * r.threshold;
  j["solutions"] = nlohmann::json::array();
  for (const auto& [tuple, x] : r.solutions) {
    nlohmann::json s;
    s["n"] = tuple;
    s["x"] = x.get_str();
    j["solutions"].push_back(s);
  }
  j["certificates"] = nlohmann::json::array();
  for (const auto& c : r.certificates) {
    nlohmann::json cj;
    cj["n"] = c.n_witnessed;
    cj["prime"] = c.prime;
    cj["exponent"] = c.exponent_in_product;
    cj["threshold"] = c.threshold;
    cj["case"] = std::string(cert_case_name(c.case_tag));
    j["certificates"].push_back(cj);
  }
  return j.dump();
}

}  // namespace dfdio
