#include "dfdio/exactmath.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <shared_mutex>

namespace dfdio {

uint64_t to_u64(const Int& v, const char* what) {
  if (sgn(v) < 0 || !v.fits_ulong_p())
    throw std::overflow_error(std::string(what) + ": value out of uint64 range");
  return mpz_get_ui(v.get_mpz_t());
}

namespace {

uint64_t isqrt_u64(uint64_t v) {
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// Grow-only segmented sieve shared by the whole process. Growth re-derives
// base primes up to sqrt(target) and sieves only the new segments, so the
// stored prime list is append-only and queries under a shared lock stay
// consistent.
class PrimeSieve {
 public:
  void ensure(uint64_t limit) {
    {
      std::shared_lock rd(mu_);
      if (limit <= limit_) return;
    }
    std::unique_lock wr(mu_);
    if (limit <= limit_) return;
    uint64_t target = std::max<uint64_t>({limit, 2 * limit_, 1024});
    grow_to(target);
  }

  std::vector<uint64_t> open_interval(uint64_t lo, uint64_t hi) {
    ensure(hi);
    std::shared_lock rd(mu_);
    auto first = std::upper_bound(primes_.begin(), primes_.end(), lo);
    auto last = std::lower_bound(first, primes_.end(), hi);
    return std::vector<uint64_t>(first, last);
  }

  bool contains(uint64_t v) {
    ensure(v);
    std::shared_lock rd(mu_);
    return std::binary_search(primes_.begin(), primes_.end(), v);
  }

  // Primes up to bound, for trial division.
  std::vector<uint64_t> primes_up_to(uint64_t bound) {
    ensure(bound);
    std::shared_lock rd(mu_);
    auto last = std::upper_bound(primes_.begin(), primes_.end(), bound);
    return std::vector<uint64_t>(primes_.begin(), last);
  }

 private:
  void grow_to(uint64_t target) {
    uint64_t root = isqrt_u64(target);
    std::vector<char> small(root + 1, 1);
    std::vector<uint64_t> base;
    for (uint64_t i = 2; i <= root; ++i) {
      if (!small[i]) continue;
      base.push_back(i);
      for (uint64_t j = i * i; j <= root; j += i) small[j] = 0;
    }
    constexpr uint64_t kSeg = uint64_t{1} << 16;
    std::vector<char> seg;
    for (uint64_t low = limit_ + 1; low <= target; low += kSeg) {
      uint64_t high = std::min(low + kSeg - 1, target);
      seg.assign(high - low + 1, 1);
      for (uint64_t p : base) {
        uint64_t start = std::max(p * p, ((low + p - 1) / p) * p);
        for (uint64_t j = start; j <= high; j += p) seg[j - low] = 0;
      }
      for (uint64_t v = std::max<uint64_t>(low, 2); v <= high; ++v)
        if (seg[v - low]) primes_.push_back(v);
    }
    limit_ = target;
  }

  mutable std::shared_mutex mu_;
  std::vector<uint64_t> primes_;
  uint64_t limit_ = 0;
};

PrimeSieve& sieve() {
  static PrimeSieve s;
  return s;
}

}  // namespace

namespace {

// ~50e6 is already a multi-hundred-megabit value; refuse to go further.
void guard_factorial_arg(uint64_t n) {
  if (n > 50000000) throw budget_error("factorial argument beyond supported range");
}

}  // namespace

Nat double_factorial(uint64_t n) {
  guard_factorial_arg(n);
  Nat r;
  mpz_2fac_ui(r.get_mpz_t(), n);
  return r;
}

Nat factorial(uint64_t n) {
  guard_factorial_arg(n);
  Nat r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int int_pow(const Int& base, const Nat& exp) {
  if (sgn(exp) < 0) throw std::invalid_argument("int_pow: negative exponent");
  if (sgn(exp) == 0) return 1;
  if (sgn(base) == 0) return 0;
  if (base == 1) return 1;
  if (base == -1) return mpz_odd_p(exp.get_mpz_t()) ? -1 : 1;
  if (!exp.fits_ulong_p())
    throw budget_error("int_pow: exponent too large to materialize");
  uint64_t e = mpz_get_ui(exp.get_mpz_t());
  // 2^57 output bits is already past anything this library materializes.
  if (bit_length(base) * e > (uint64_t{1} << 57))
    throw budget_error("int_pow: result would exceed 2^57 bits");
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::optional<Int> is_perfect_dth_power(const Int& v, uint64_t d) {
  if (d == 0) throw std::invalid_argument("is_perfect_dth_power: d must be >= 1");
  if (d == 1) return v;
  if (sgn(v) < 0 && d % 2 == 0) return std::nullopt;
  Int root;
  mpz_root(root.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(d));
  // Decide by exact re-powering, not by the root routine's rounding.
  Int back;
  mpz_pow_ui(back.get_mpz_t(), root.get_mpz_t(), static_cast<unsigned long>(d));
  if (back == v) return root;
  return std::nullopt;
}

std::vector<uint64_t> primes_in_interval(uint64_t lo, uint64_t hi) {
  if (lo >= hi) {
    if (lo > hi) throw std::invalid_argument("primes_in_interval: lo must be < hi");
    return {};
  }
  return sieve().open_interval(lo, hi);
}

bool is_prime(uint64_t v) {
  if (v < 2) return false;
  uint64_t root = isqrt_u64(v);
  if (v <= (uint64_t{1} << 22)) return sieve().contains(v);
  for (uint64_t p : sieve().primes_up_to(root))
    if (v % p == 0) return false;
  return true;
}

uint64_t vp_factorial(uint64_t p, uint64_t n) {
  uint64_t total = 0;
  for (uint64_t q = p; q <= n; q *= p) {
    total += n / q;
    if (q > n / p) break;  // next q would overflow
  }
  return total;
}

uint64_t vp_double_factorial(uint64_t p, uint64_t n) {
  if (!is_prime(p)) throw std::invalid_argument("vp_double_factorial: p is not prime");
  if (n % 2 == 0) {
    uint64_t l = n / 2;
    if (p == 2) return l + vp_factorial(2, l);
    return vp_factorial(p, l);
  }
  if (p == 2) return 0;  // odd n!! is odd
  // Count odd multiples of p^i up to n: the multiplier must be odd, and
  // since p^i is odd that is ceil(floor(n/p^i) / 2) of them.
  uint64_t total = 0;
  for (uint64_t q = p; q <= n; q *= p) {
    total += (n / q + 1) / 2;
    if (q > n / p) break;
  }
  return total;
}

Nat Factorization::value() const {
  Nat v = 1;
  for (const auto& [p, e] : factors) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    v *= pe;
  }
  return v;
}

Nat Factorization::radical() const {
  Nat r = 1;
  for (const auto& [p, e] : factors) r *= p;
  return r;
}

Factorization factorize(const Nat& v) {
  if (sgn(v) <= 0) throw std::invalid_argument("factorize: argument must be positive");
  constexpr uint64_t kTrialCap = uint64_t{1} << 26;
  Factorization out;
  Nat rest = v;
  uint64_t tested = 1;  // all primes <= tested have been tried against rest
  uint64_t block = 1024;
  while (rest > 1) {
    if (Nat(static_cast<unsigned long>(tested)) * static_cast<unsigned long>(tested) >= rest) {
      out.factors.emplace_back(rest, 1);  // no factor up to sqrt: prime
      break;
    }
    bool progressed = false;
    for (uint64_t p : sieve().primes_up_to(block)) {
      if (p <= tested) continue;
      tested = p;
      if (Nat(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p) > rest) break;
      if (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p))) {
        uint64_t e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p))) {
          mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(p));
          ++e;
        }
        out.factors.emplace_back(Nat(static_cast<unsigned long>(p)), e);
        progressed = true;
      }
    }
    if (rest > 1 && !progressed &&
        Nat(static_cast<unsigned long>(tested)) * static_cast<unsigned long>(tested) < rest) {
      if (block >= kTrialCap)
        throw std::domain_error("factorize: cofactor beyond supported trial-division range");
      block = std::min(block * 8, kTrialCap);
    }
  }
  return out;
}

Nat radical(const Int& a) {
  if (sgn(a) == 0) throw std::invalid_argument("radical: undefined at 0");
  Nat mag = abs(a);
  if (mag == 1) return 1;
  return factorize(mag).radical();
}

Nat radical_double_factorial(uint64_t n) {
  Nat r = 1;
  for (uint64_t p : sieve().primes_up_to(n))
    if (vp_double_factorial(p, n) > 0) r *= static_cast<unsigned long>(p);
  return r;
}

}  // namespace dfdio
