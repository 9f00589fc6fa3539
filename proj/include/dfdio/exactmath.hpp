#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dfdio/ints.hpp"

namespace dfdio {

/// n!! = n (n-2) (n-4) ... down to 1 or 2. Empty-product convention:
/// 0!! = 1!! = 1.
Nat double_factorial(uint64_t n);

/// n!, with 0! = 1.
Nat factorial(uint64_t n);

/// Exact power by repeated squaring. 0^0 = 1. Throws budget_error when the
/// result would be absurdly large (exponent does not fit a machine word and
/// |base| > 1).
Int int_pow(const Int& base, const Nat& exp);

/// The x with x^d = v, if one exists. For even d, v must be non-negative
/// and the non-negative root is returned; for odd d the sign of v carries
/// over. The root is re-powered and compared exactly before being accepted.
std::optional<Int> is_perfect_dth_power(const Int& v, uint64_t d);

/// All primes p with lo < p < hi (both ends exclusive), ascending.
/// Sieve-backed; the sieve is cached per process and only ever grows.
std::vector<uint64_t> primes_in_interval(uint64_t lo, uint64_t hi);

/// Deterministic primality at sieve scale (trial division by cached
/// primes up to sqrt(v)).
bool is_prime(uint64_t v);

/// Exponent of p in n! (Legendre: sum of floor(n/p^i)).
uint64_t vp_factorial(uint64_t p, uint64_t n);

/// Exact exponent of the prime p in n!!, computed without materializing
/// n!!. For odd n this counts odd multiples of p^i below n; for even
/// n = 2l it uses n!! = 2^l l!.
uint64_t vp_double_factorial(uint64_t p, uint64_t n);

/// Prime factorization of a positive integer, primes strictly increasing,
/// exponents >= 1. Trial division by cached sieve primes; throws
/// std::domain_error if a cofactor resists (beyond desk scale).
struct Factorization {
  std::vector<std::pair<Nat, uint64_t>> factors;

  /// Multiplies the factorization back together.
  Nat value() const;
  /// Product of the distinct primes.
  Nat radical() const;
};

Factorization factorize(const Nat& v);

/// Algebraic radical: product of the distinct primes dividing |a|;
/// radical(+-1) = 1. Rejects a = 0.
Nat radical(const Int& a);

/// Radical of n!! computed from prime support (no materialization).
Nat radical_double_factorial(uint64_t n);

}  // namespace dfdio
