#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dfdio/ints.hpp"

namespace dfdio {

/// A rational polynomial, coefficients ascending (coeffs[i] is the x^i
/// coefficient). To qualify for the certificate pipeline it must have
/// degree >= 2, not be a monomial, and have at least two distinct roots.
struct RatPoly {
  std::vector<Rat> coeffs;

  uint64_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  Rat eval(const Rat& x) const;
};

/// Parses the "c_d,...,c_1,c_0" coefficient format, exact rationals as
/// "p/q". Throws std::invalid_argument on malformed input.
RatPoly parse_poly(std::string_view text);

/// Integer-coefficient depressed form of the equation b prod = f(x):
/// clearing denominators (factor N) and multiplying by d^d a_0^(d-1) turns
/// f into the monic Q(z) = z^d + c_2 z^(d-2) + ... + c_d under the affine
/// substitution z = a_0 d x + a_1, and the equation into
/// Q(z) = c_multiplier * prod, with c_multiplier = N b d^d a_0^(d-1).
struct DepressedPoly {
  uint64_t d = 0;
  /// cs[i] is the z^(d-i) coefficient: cs[0] = 1, cs[1] = 0, cs[i] = c_i.
  std::vector<Int> cs;
  Int scale;         // a_0 d
  Int shift;         // a_1 (the b_1/d of the substitution, always integral here)
  Int c_multiplier;  // N b d^d a_0^(d-1)
  Int clear_factor;  // N
  Int lead;          // a_0

  Int eval(const Int& z) const;
  /// z-image of an integer x under the recorded substitution.
  Int z_of_x(const Int& x) const { return scale * x + shift; }
};

/// Validates the hypotheses and produces the depressed form. Throws
/// hypothesis_error for monomials, fewer than two distinct roots, degree
/// < 2, or b = 0.
DepressedPoly normalize(const RatPoly& f, const Int& b);

/// Largest j <= d with c_j != 0. At least one exists for any polynomial
/// that passed normalize.
uint64_t j_index(const DepressedPoly& p);

/// R_1(z) = c_2 z^(j-2) + ... + c_j (for j = 2 this is the constant c_2).
Int eval_r1(const DepressedPoly& p, uint64_t j, const Int& z);

/// The ABC triple attached to one solution (z, prod):
///   A = z^j / D,  B = R_1(z) / D,  C = c prod / (z^(d-j) D),
/// with D = gcd(z^j, R_1(z)). A + B = C exactly and A, B are coprime after
/// the division.
struct AbcTriple {
  Int a;
  Int b;
  Int c;
  Nat d_gcd;
  Int z;
  uint64_t j = 0;
  Nat radical_abc;
  std::string quality;        // log max(|A|,|B|,|C|) / log N(ABC), 50 digits
  bool finsler_ok = false;    // N(c prod) < N(c) prod N(A_i) 4^(sum n_i), exact
  bool eq9_ok = false;        // N(z^j / D) <= |z|, exact
  std::optional<bool> size_bracket_ok;  // |z|^d/2 < |Q(z)| < 2|z|^d; absent when
                                        // |z| is below the computable threshold
  std::vector<uint64_t> n;    // solution context
};

/// Builds and fully checks the triple. rhs_product is prod n_i!! A_i^{n_i}
/// (without b). Throws hypothesis_error when the depressed equation fails
/// at (z, rhs_product), when z = 0, or when R_1(z) = 0 (degenerate; callers
/// report those separately).
AbcTriple triple_for_solution(const DepressedPoly& p, const Int& z, const Nat& rhs_product,
                              const std::vector<Nat>& A, const std::vector<uint64_t>& n);

/// All exact solutions of b prod n_i!! A_i^{n_i} = f(x) with n_i <= n_bound
/// and |x| <= x_bound, ascending by (n-tuple, x). Uses a direct x sweep when
/// the window is small and per-tuple integer root extraction on the
/// depressed form otherwise.
std::vector<std::pair<std::vector<uint64_t>, Int>> brute_solutions(
    const RatPoly& f, const Int& b, const std::vector<Nat>& A, uint64_t n_bound,
    uint64_t x_bound);

struct QualitySummary {
  uint64_t count = 0;
  std::string max_quality;   // empty when count == 0
  std::string mean_quality;  // arithmetic mean of the qualities
  bool all_finsler_ok = true;
  bool all_eq9_ok = true;
};

QualitySummary quality_report(const std::vector<AbcTriple>& triples);

std::string triple_to_json(const AbcTriple& t);

}  // namespace dfdio
