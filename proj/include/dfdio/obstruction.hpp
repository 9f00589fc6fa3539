#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dfdio/ints.hpp"

namespace dfdio {

/// Which branch of the finiteness argument produced a certificate.
enum class CertCase { odd_n, even_n, r2_case1, r2_case2, r2_case3 };

std::string_view cert_case_name(CertCase c);

/// A prime whose exponent in b prod n_i!! A_i^{n_i} is positive but smaller
/// than d, so the product cannot be a d-th power. The prime comes from the
/// interval (n/2, n) for odd n, or (l/2, l) with l = n/2 for even n, and
/// exceeds every A_i and |b| (checked explicitly, not inferred from the
/// interval bound).
struct ObstructionCertificate {
  uint64_t n_witnessed = 0;
  uint64_t prime = 0;
  uint64_t exponent_in_product = 0;
  uint64_t threshold = 0;  // the bound n (odd case) or l (even case) had to clear
  CertCase case_tag = CertCase::odd_n;
};

struct SearchReport {
  Int b;
  std::vector<Nat> A;
  uint64_t d = 0;
  uint64_t threshold = 0;  // 2 max{A_i, |b|, 2} + slack
  /// Every solution with all n_i <= 2 * threshold, exhaustively exact-checked.
  /// For even d, x is the non-negative root (solutions come in +- pairs).
  std::vector<std::pair<std::vector<uint64_t>, Int>> solutions;
  std::vector<ObstructionCertificate> certificates;
};

/// Single-coordinate certificate (r = 1): for odd n above 2 max{A, |b|}
/// (or even n = 2l with l above 2 max{A, |b|, 2}) picks the largest
/// qualifying interval prime and records its exact exponent in b n!! A^n.
/// Empty when n is below threshold or no interval prime qualifies.
std::optional<ObstructionCertificate> certificate_for(uint64_t n, const Int& b,
                                                      const std::vector<Nat>& A, uint64_t d);

/// Exhaustive search for x^d = b prod n_i!! A_i^{n_i} in the d > r regime,
/// r in {1, 2}. Sweeps every n_i <= 2 * threshold and attaches certificates
/// for the points above threshold. Rejects d <= r (that regime has the
/// explicit infinite families instead).
SearchReport finite_search(const Int& b, const std::vector<Nat>& A, uint64_t d, uint64_t slack);

/// Exact p-adic valuation of b prod n_i!! A_i^{n_i}.
uint64_t exponent_in_product(uint64_t p, const Int& b, const std::vector<Nat>& A,
                             const std::vector<uint64_t>& n);

/// Report as a single JSON document, big values as decimal strings.
std::string report_to_json(const SearchReport& r);

}  // namespace dfdio
