#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dfdio {

// All arithmetic in this library is exact. Int is an arbitrary-precision
// signed integer; Nat is the same representation restricted by convention
// to non-negative values (checked at API boundaries). Rat is an exact
// rational.
using Int = mpz_class;
using Nat = mpz_class;
using Rat = mpq_class;

/// Number of bits in |v|; 0 for v = 0.
inline uint64_t bit_length(const Int& v) {
  if (sgn(v) == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

/// Checked narrowing to uint64_t. Throws std::overflow_error if v is
/// negative or does not fit.
uint64_t to_u64(const Int& v, const char* what);

/// Thrown when an exact evaluation would exceed the configured bit ceiling.
/// Carries the offending context so callers can report it.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
  budget_error(const std::string& msg, uint64_t k, uint64_t n)
      : std::runtime_error(msg), k_(k), n_(n), has_pair_(true) {}
  bool has_pair() const { return has_pair_; }
  uint64_t k() const { return k_; }
  uint64_t n() const { return n_; }

 private:
  uint64_t k_ = 0;
  uint64_t n_ = 0;
  bool has_pair_ = false;
};

/// Thrown when inputs violate a hypothesis of the underlying statement
/// (as opposed to a malformed call). The CLI maps this to exit code 3.
class hypothesis_error : public std::runtime_error {
 public:
  explicit hypothesis_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dfdio
