#include "dfdio/abccert.hpp"

#include <json.hpp>
#include <mpfr.h>

#include <algorithm>
#include <set>

#include "dfdio/exactmath.hpp"

namespace dfdio {

Rat RatPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly parse_poly(std::string_view text) {
  RatPoly out;
  std::vector<Rat> descending;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string token(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
    // trim
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
      token.erase(token.begin());
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
      token.pop_back();
    if (token.empty()) throw std::invalid_argument("polynomial: empty coefficient");
    Rat c;
    if (mpq_set_str(c.get_mpq_t(), token.c_str(), 10) != 0)
      throw std::invalid_argument("polynomial: bad coefficient '" + token + "'");
    if (sgn(Int(c.get_den())) == 0) throw std::invalid_argument("polynomial: zero denominator");
    c.canonicalize();
    descending.push_back(c);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  // strip leading zeros so degree() is the true degree
  size_t first = 0;
  while (first + 1 < descending.size() && sgn(descending[first]) == 0) ++first;
  out.coeffs.assign(descending.rbegin(), descending.rend() - first);
  return out;
}

namespace {

using RatVec = std::vector<Rat>;  // ascending coefficients

size_t true_degree(const RatVec& p) {
  size_t d = p.size();
  while (d > 0 && sgn(p[d - 1]) == 0) --d;
  return d == 0 ? 0 : d - 1;
}

RatVec derivative(const RatVec& p) {
  RatVec out;
  for (size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<unsigned long>(i));
  return out;
}

// Euclidean remainder over Q; inputs need not be normalized.
RatVec poly_rem(RatVec a, const RatVec& b) {
  size_t db = true_degree(b);
  Rat lead_b = b[db];
  while (true) {
    size_t da = true_degree(a);
    if ((da == 0 && sgn(a[0]) == 0) || da < db) break;
    Rat q = a[da] / lead_b;
    for (size_t i = 0; i <= db; ++i) a[da - db + i] -= q * b[i];
    a[da] = 0;
    a.resize(true_degree(a) + 1);
    if (a.size() == 1 && sgn(a[0]) == 0) break;
  }
  return a;
}

size_t gcd_degree(RatVec a, RatVec b) {
  if (true_degree(b) > true_degree(a)) std::swap(a, b);
  while (!(b.size() == 1 && sgn(b[0]) == 0)) {
    RatVec r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return true_degree(a);
}

void validate_hypotheses(const RatPoly& f) {
  uint64_t d = f.degree();
  if (d < 2) throw hypothesis_error("polynomial must have degree >= 2");
  if (sgn(f.coeffs.back()) == 0) throw std::logic_error("leading coefficient vanished");
  bool monomial = true;
  for (size_t i = 0; i + 1 < f.coeffs.size(); ++i)
    if (sgn(f.coeffs[i]) != 0) monomial = false;
  if (monomial) throw hypothesis_error("monomial polynomials are excluded");
  // at least two distinct roots <=> squarefree part has degree >= 2
  size_t g = gcd_degree(f.coeffs, derivative(f.coeffs));
  if (d - g < 2) throw hypothesis_error("polynomial must have at least two distinct roots");
}

Int pow_u(const Int& base, uint64_t e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

std::string mpfr_to_string(mpfr_t v) {
  char buf[96];
  mpfr_snprintf(buf, sizeof buf, "%.50Rg", v);
  return buf;
}

// log max(|A|,|B|,|C|) / log N(ABC) at `prec` bits.
void quality_value(const Int& a, const Int& b, const Int& c, const Nat& rad, mpfr_t out) {
  Nat mx = abs(a);
  mx = std::max(mx, Nat(abs(b)));
  mx = std::max(mx, Nat(abs(c)));
  mpfr_t num, den;
  mpfr_init2(num, mpfr_get_prec(out));
  mpfr_init2(den, mpfr_get_prec(out));
  mpfr_set_z(num, mx.get_mpz_t(), MPFR_RNDN);
  mpfr_log(num, num, MPFR_RNDN);
  mpfr_set_z(den, rad.get_mpz_t(), MPFR_RNDN);
  mpfr_log(den, den, MPFR_RNDN);
  mpfr_div(out, num, den, MPFR_RNDN);
  mpfr_clears(num, den, (mpfr_ptr) nullptr);
}

// Distinct-prime support of c prod n_i!! A_i^{n_i}, without materializing
// the double factorials.
Nat radical_of_product(const Int& c, const std::vector<Nat>& A, const std::vector<uint64_t>& n) {
  std::set<Nat> support;
  for (const auto& [p, e] : factorize(abs(c)).factors) support.insert(p);
  for (const Nat& a : A)
    if (a > 1)
      for (const auto& [p, e] : factorize(a).factors) support.insert(p);
  for (uint64_t ni : n)
    for (uint64_t p : primes_in_interval(1, ni + 1))
      if (vp_double_factorial(p, ni) > 0) support.insert(Nat(static_cast<unsigned long>(p)));
  Nat r = 1;
  for (const Nat& p : support) r *= p;
  return r;
}

}  // namespace

Int DepressedPoly::eval(const Int& z) const {
  Int acc = 0;
  for (const Int& c : cs) acc = acc * z + c;
  return acc;
}

DepressedPoly normalize(const RatPoly& f, const Int& b) {
  if (sgn(b) == 0) throw hypothesis_error("b must be non-zero");
  validate_hypotheses(f);
  const uint64_t d = f.degree();

  // clear denominators: g = N f has integer coefficients
  Int N = 1;
  for (const Rat& c : f.coeffs) {
    Int den(c.get_den());
    mpz_lcm(N.get_mpz_t(), N.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<Int> g(d + 1);  // ascending
  for (size_t i = 0; i <= d; ++i) {
    Rat scaled = f.coeffs[i] * Rat(N);
    g[i] = Int(scaled.get_num());  // exact: denominator divides N
  }
  Int a0 = g[d];
  Int a1 = g[d - 1];

  // monic form in y = a0 d x: P(y) = y^d + sum b_i y^(d-i), b_i = d^i a_i a0^(i-1)
  std::vector<Int> p_asc(d + 1);
  p_asc[d] = 1;
  for (uint64_t i = 1; i <= d; ++i) {
    Int bi = pow_u(Int(static_cast<unsigned long>(d)), i) * g[d - i];
    if (i >= 2) bi *= pow_u(a0, i - 1);
    p_asc[d - i] = bi;
  }

  // Taylor shift y = z - a1 (the substitution z = y + b_1/d with b_1/d = a1)
  Int s = -a1;
  for (size_t i = 0; i < d; ++i)
    for (size_t j = d - 1; j + 1 > i; --j) p_asc[j] += s * p_asc[j + 1];

  DepressedPoly out;
  out.d = d;
  out.cs.resize(d + 1);
  for (uint64_t i = 0; i <= d; ++i) out.cs[i] = p_asc[d - i];
  if (out.cs[0] != 1 || out.cs[1] != 0)
    throw std::logic_error("depression did not produce a monic polynomial with zero z^(d-1) term");
  bool has_tail = false;
  for (uint64_t i = 2; i <= d; ++i)
    if (sgn(out.cs[i]) != 0) has_tail = true;
  if (!has_tail) throw std::logic_error("depressed polynomial degenerated to z^d");
  out.scale = a0 * static_cast<unsigned long>(d);
  out.shift = a1;
  out.c_multiplier = N * b * pow_u(Int(static_cast<unsigned long>(d)), d) * pow_u(a0, d - 1);
  out.clear_factor = N;
  out.lead = a0;
  return out;
}

uint64_t j_index(const DepressedPoly& p) {
  for (uint64_t i = p.d; i >= 2; --i)
    if (sgn(p.cs[i]) != 0) return i;
  throw std::logic_error("no non-zero c_i: polynomial violates the two-roots hypothesis");
}

Int eval_r1(const DepressedPoly& p, uint64_t j, const Int& z) {
  // R_1(z) = c_2 z^(j-2) + ... + c_j; for j = 2 this is just c_2
  Int acc = 0;
  for (uint64_t i = 2; i <= j; ++i) acc = acc * z + p.cs[i];
  return acc;
}

AbcTriple triple_for_solution(const DepressedPoly& p, const Int& z, const Nat& rhs_product,
                              const std::vector<Nat>& A, const std::vector<uint64_t>& n) {
  if (sgn(z) == 0) throw hypothesis_error("z = 0 does not yield a triple");
  Int qz = p.eval(z);
  Int target = p.c_multiplier * rhs_product;
  if (qz != target) throw hypothesis_error("depressed equation does not hold at (z, product)");
  uint64_t j = j_index(p);
  Int r1 = eval_r1(p, j, z);
  if (sgn(r1) == 0) throw hypothesis_error("degenerate: R1(z) = 0");

  AbcTriple t;
  t.z = z;
  t.j = j;
  t.n = n;
  Int zj = pow_u(z, j);
  Nat D;
  mpz_gcd(D.get_mpz_t(), zj.get_mpz_t(), r1.get_mpz_t());
  t.d_gcd = D;
  t.a = zj / D;
  t.b = r1 / D;
  Int zdj = pow_u(z, p.d - j);
  if (!mpz_divisible_p(target.get_mpz_t(), zdj.get_mpz_t()))
    throw std::logic_error("z^(d-j) does not divide the right-hand side");
  Int c = target / zdj;
  if (!mpz_divisible_p(c.get_mpz_t(), D.get_mpz_t()))
    throw std::logic_error("D does not divide the right-hand side term");
  c /= D;
  t.c = c;
  if (t.a + t.b != t.c) throw std::logic_error("A + B != C after division by D");
  Int g1, g2, g3;
  mpz_gcd(g1.get_mpz_t(), t.a.get_mpz_t(), t.b.get_mpz_t());
  mpz_gcd(g2.get_mpz_t(), t.a.get_mpz_t(), t.c.get_mpz_t());
  mpz_gcd(g3.get_mpz_t(), t.b.get_mpz_t(), t.c.get_mpz_t());
  if (g1 != 1 || g2 != 1 || g3 != 1) throw std::logic_error("triple is not pairwise coprime");

  t.radical_abc = radical(t.a * t.b * t.c);
  mpfr_t q;
  mpfr_init2(q, 256);
  quality_value(t.a, t.b, t.c, t.radical_abc, q);
  t.quality = mpfr_to_string(q);
  mpfr_clear(q);

  // N(c prod) < N(c) prod N(A_i) 4^(sum n_i), all exact
  Nat lhs_rad = radical_of_product(p.c_multiplier, A, n);
  Nat rhs_rad = radical(p.c_multiplier);
  uint64_t n_sum = 0;
  for (size_t i = 0; i < A.size(); ++i) {
    rhs_rad *= radical(Int(A[i]));
    n_sum += n[i];
  }
  Nat four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 2, static_cast<unsigned long>(2 * n_sum));
  t.finsler_ok = lhs_rad < rhs_rad * four_pow;

  t.eq9_ok = radical(t.a) <= abs(z);

  // |z|^d / 2 < |Q(z)| < 2 |z|^d, checked only above the explicit
  // threshold where the tail sum is provably dominated.
  Nat zabs = abs(z);
  Int zd = pow_u(Int(zabs), p.d);
  Int tail = 0;
  for (uint64_t i = 2; i <= p.d; ++i) tail += abs(p.cs[i]) * pow_u(Int(zabs), p.d - i);
  if (2 * tail < zd) {
    Nat qabs = abs(qz);
    t.size_bracket_ok = (zd < 2 * qabs) && (qabs < 2 * zd);
  }
  return t;
}

std::vector<std::pair<std::vector<uint64_t>, Int>> brute_solutions(
    const RatPoly& f, const Int& b, const std::vector<Nat>& A, uint64_t n_bound,
    uint64_t x_bound) {
  if (n_bound < 1 || A.empty()) throw std::invalid_argument("need n_bound >= 1 and r >= 1");
  for (const Nat& a : A)
    if (sgn(a) <= 0) throw std::invalid_argument("every A_i must be a positive integer");
  DepressedPoly dp = normalize(f, b);

  const size_t r = A.size();
  std::vector<std::pair<std::vector<uint64_t>, Int>> out;
  const bool sweep_x = (x_bound <= 50000);

  Int zs = 1;
  for (uint64_t i = 2; i <= dp.d; ++i) zs += abs(dp.cs[i]);

  std::vector<uint64_t> tuple(r, 1);
  for (;;) {
    Nat rhs_product = 1;
    for (size_t i = 0; i < r; ++i) {
      rhs_product *= double_factorial(tuple[i]);
      rhs_product *= int_pow(A[i], Nat(static_cast<unsigned long>(tuple[i])));
    }
    Int target = dp.c_multiplier * rhs_product;

    std::vector<Int> xs;
    if (sweep_x) {
      for (Int x = -Int(static_cast<unsigned long>(x_bound));
           x <= Int(static_cast<unsigned long>(x_bound)); ++x)
        if (dp.eval(dp.z_of_x(x)) == target) xs.push_back(x);
    } else {
      // integer roots of Q(z) = target: small |z| by sweep, then one
      // binary search per monotone outer branch
      if (zs > 10000000) throw budget_error("coefficient sum too large for root extraction");
      std::vector<Int> roots;
      for (Int z = -zs; z <= zs; ++z)
        if (dp.eval(z) == target) roots.push_back(z);
      auto search_branch = [&](bool negative) {
        // parametrized by w >= zs + 1 with z = w or z = -w; |Q| is strictly
        // monotone in w on each branch
        Int lo = zs + 1;
        Int hi = lo;
        auto value = [&](const Int& w) { return dp.eval(negative ? Int(-w) : w); };
        bool increasing = !negative || (dp.d % 2 == 0);
        auto too_small = [&](const Int& w) {
          return increasing ? value(w) < target : value(w) > target;
        };
        if (!too_small(lo) && value(lo) == target) {
          roots.push_back(negative ? Int(-lo) : lo);
          return;
        }
        int guard = 0;
        while (too_small(hi)) {
          hi *= 2;
          if (++guard > 4096) return;
        }
        while (lo < hi) {
          Int mid = (lo + hi) / 2;
          if (too_small(mid))
            lo = mid + 1;
          else
            hi = mid;
        }
        if (value(lo) == target) roots.push_back(negative ? Int(-lo) : lo);
      };
      search_branch(false);
      search_branch(true);
      for (const Int& z : roots) {
        Int num = z - dp.shift;
        if (!mpz_divisible_p(num.get_mpz_t(), dp.scale.get_mpz_t())) continue;
        Int x = num / dp.scale;
        if (abs(x) <= Nat(static_cast<unsigned long>(x_bound))) xs.push_back(x);
      }
      std::sort(xs.begin(), xs.end());
      xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    }
    for (const Int& x : xs) out.emplace_back(tuple, x);

    size_t i = r;
    bool done = true;
    while (i > 0) {
      --i;
      if (tuple[i] < n_bound) {
        ++tuple[i];
        std::fill(tuple.begin() + i + 1, tuple.end(), 1);
        done = false;
        break;
      }
      tuple[i] = 1;
    }
    if (done) break;
  }
  return out;
}

QualitySummary quality_report(const std::vector<AbcTriple>& triples) {
  QualitySummary s;
  s.count = triples.size();
  if (triples.empty()) return s;
  mpfr_t q, mx, sum;
  mpfr_init2(q, 256);
  mpfr_init2(mx, 256);
  mpfr_init2(sum, 256);
  mpfr_set_zero(sum, 1);
  mpfr_set_inf(mx, -1);
  for (const AbcTriple& t : triples) {
    quality_value(t.a, t.b, t.c, t.radical_abc, q);
    mpfr_add(sum, sum, q, MPFR_RNDN);
    if (mpfr_greater_p(q, mx)) mpfr_set(mx, q, MPFR_RNDN);
    s.all_finsler_ok = s.all_finsler_ok && t.finsler_ok;
    s.all_eq9_ok = s.all_eq9_ok && t.eq9_ok;
  }
  s.max_quality = mpfr_to_string(mx);
  mpfr_div_ui(sum, sum, static_cast<unsigned long>(triples.size()), MPFR_RNDN);
  s.mean_quality = mpfr_to_string(sum);
  mpfr_clears(q, mx, sum, (mpfr_ptr) nullptr);
  return s;
}

std::string triple_to_json(const AbcTriple& t) {
  nlohmann::json j;
  j["n"] = t.n;
  j["z"] = t.z.get_str();
  j["j"] = t.j;
  j["D"] = t.d_gcd.get_str();
  j["A"] = t.a.get_str();
  j["B"] = t.b.get_str();
  j["C"] = t.c.get_str();
  j["radical"] = t.radical_abc.get_str();
  j["quality"] = t.quality;
  j["finsler_ok"] = t.finsler_ok;
  j["eq9_ok"] = t.eq9_ok;
  if (t.size_bracket_ok)
    j["size_bracket"] = *t.size_bracket_ok ? "ok" : "violated";
  else
    j["size_bracket"] = "skipped";
  return j.dump();
}

}  // namespace dfdio
