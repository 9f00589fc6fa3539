#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "dfdio/equations.hpp"

using namespace dfdio;

namespace {

// Test-side oracle: evaluate both sides directly, no screening, no
// identity shortcut, no pruning.
Int oracle_side(Family f, uint64_t v, uint64_t w) {
  auto pw = [](const Int& base, const Nat& e) { return int_pow(base, e); };
  Nat wv(static_cast<unsigned long>(w));
  switch (f) {
    case Family::t1: return pw(double_factorial(v), wv) - pw(v, wv);
    case Family::t2: return pw(double_factorial(v), wv) + pw(v, wv);
    case Family::t3: return pw(double_factorial(v), wv) - pw(v, double_factorial(w));
    case Family::t4: return pw(double_factorial(v), wv) - pw(v, factorial(w));
    default: return pw(double_factorial(v), double_factorial(w)) + pw(v, wv);
  }
}

bool oracle_holds(Family f, uint64_t k, uint64_t n) {
  return oracle_side(f, n, k) == oracle_side(f, k, n);
}

std::vector<std::pair<uint64_t, uint64_t>> oracle_solutions(Family f, uint64_t bound) {
  std::vector<std::pair<uint64_t, uint64_t>> out;
  for (uint64_t k = 1; k <= bound; ++k)
    for (uint64_t n = 1; n <= bound; ++n)
      if (oracle_holds(f, k, n)) out.emplace_back(k, n);
  return out;
}

std::string records_as_text(const std::vector<SolutionRecord>& records) {
  std::ostringstream os;
  for (const auto& r : records)
    os << family_name(r.family) << ' ' << r.k << ' ' << r.n << ' '
       << (r.verification == Verification::exact ? "exact" : "identity") << '\n';
  return os.str();
}

const Family kAll[] = {Family::t1, Family::t2, Family::t3, Family::t4, Family::t5};

}  // namespace

TEST_CASE("eval_side fixtures") {
  auto v = eval_side(Family::t1, Side::left, 2, 3, 1 << 20);
  REQUIRE(v.value.has_value());
  CHECK(*v.value == 0);  // 3!!^2 - 3^2

  v = eval_side(Family::t2, Side::left, 2, 2, 1 << 20);
  REQUIRE(v.value.has_value());
  CHECK(*v.value == 8);  // 2!!^2 + 2^2

  v = eval_side(Family::t5, Side::left, 3, 3, 1 << 20);
  REQUIRE(v.value.has_value());
  CHECK(*v.value == 54);  // 3!!^3!! + 3^3 = 27 + 27

  // beyond budget: expression only (the k^(n!) term at n = 14)
  v = eval_side(Family::t4, Side::right, 3, 14, 1 << 20);
  CHECK_FALSE(v.value.has_value());
}

TEST_CASE("equation_holds fixtures") {
  CHECK(equation_holds(Family::t1, 2, 3) == Comparison::equal);
  CHECK(equation_holds(Family::t2, 2, 3) != Comparison::equal);
  CHECK(equation_holds(Family::t1, 4, 5) != Comparison::equal);
  CHECK(equation_holds(Family::t1, 7, 7) == Comparison::equal);
}

TEST_CASE("equation_holds agrees with the oracle on the small grid") {
  for (Family f : kAll)
    for (uint64_t k = 1; k <= 8; ++k)
      for (uint64_t n = 1; n <= 8; ++n) {
        CAPTURE(family_name(f));
        CAPTURE(k);
        CAPTURE(n);
        CHECK((equation_holds(f, k, n) == Comparison::equal) == oracle_holds(f, k, n));
      }
}

TEST_CASE("solver reports budget exhaustion instead of guessing") {
  EvalConfig cfg;
  cfg.bit_ceiling = 1 << 16;
  cfg.prune = false;
  // without pruning, 2^(12!) at (2, 12) wants ~5e8 bits
  CHECK_THROWS_AS(solve_family(Family::t4, 12, cfg), budget_error);
  // the certificate prune settles that pair without materializing it
  cfg.prune = true;
  CHECK_NOTHROW(solve_family(Family::t4, 12, cfg));
}

TEST_CASE("diagonal holds for every family up to 30") {
  for (Family f : kAll)
    for (uint64_t k = 1; k <= 30; ++k) CHECK(equation_holds(f, k, k) == Comparison::equal);
}

TEST_CASE("symmetry under swapping k and n") {
  for (Family f : kAll)
    for (uint64_t k = 1; k <= 8; ++k)
      for (uint64_t n = 1; n <= 8; ++n)
        CHECK((equation_holds(f, k, n) == Comparison::equal) ==
              (equation_holds(f, n, k) == Comparison::equal));
}

TEST_CASE("solver matches the no-prune oracle byte for byte at bound 8") {
  for (Family f : kAll) {
    EvalConfig pruned = default_eval_config();
    EvalConfig no_prune = default_eval_config();
    no_prune.prune = false;
    auto with_prune = solve_family(f, 8, pruned);
    auto without = solve_family(f, 8, no_prune);
    CHECK(records_as_text(with_prune) == records_as_text(without));

    // and both match the independent oracle's solution set
    auto expected = oracle_solutions(f, 8);
    REQUIRE(with_prune.size() == expected.size());
    for (size_t i = 0; i < expected.size(); ++i) {
      CHECK(with_prune[i].k == expected[i].first);
      CHECK(with_prune[i].n == expected[i].second);
    }
  }
}

TEST_CASE("every pruned pair is a non-solution at bound 8") {
  for (Family f : kAll) {
    auto outcome = solve_family_detailed(f, 8, default_eval_config());
    for (auto [k, n] : outcome.pruned) {
      CAPTURE(family_name(f));
      CAPTURE(k);
      CAPTURE(n);
      CHECK_FALSE(oracle_holds(f, k, n));
    }
  }
}

TEST_CASE("T1 solution set at bound 10") {
  auto records = solve_family(Family::t1, 10);
  std::vector<std::pair<uint64_t, uint64_t>> off;
  uint64_t diagonal = 0;
  for (const auto& r : records) {
    if (r.k == r.n)
      ++diagonal;
    else
      off.emplace_back(r.k, r.n);
  }
  CHECK(diagonal == 10);
  CHECK(off == std::vector<std::pair<uint64_t, uint64_t>>{
                   {1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}});
}

TEST_CASE("T2 and T5 are diagonal-only") {
  for (Family f : {Family::t2, Family::t5}) {
    auto records = solve_family(f, f == Family::t2 ? 10 : 8);
    for (const auto& r : records) CHECK(r.k == r.n);
  }
}

TEST_CASE("large diagonals use the identity verification") {
  auto records = solve_family(Family::t4, 12);
  bool saw_identity = false;
  for (const auto& r : records)
    if (r.k == r.n && r.k >= 11) {
      CHECK(r.verification == Verification::identity);
      saw_identity = true;
    }
  CHECK(saw_identity);
}

TEST_CASE("k = 2 rewrite of the sum family is an exact identity") {
  // n!!^2 + n^2 = n^2 (((n-2)!!)^2 + 1) for even n, and the second factor
  // is odd, so the sum is never a power of two past n = 2
  for (uint64_t n = 4; n <= 40; n += 2) {
    Int lhs = int_pow(double_factorial(n), 2) + Int(static_cast<unsigned long>(n * n));
    Int cofactor = int_pow(double_factorial(n - 2), 2) + 1;
    CHECK(lhs == Int(static_cast<unsigned long>(n * n)) * cofactor);
    CHECK(mpz_odd_p(cofactor.get_mpz_t()));
  }
}

TEST_CASE("family parsing and defaults") {
  CHECK(family_from_string("T3") == Family::t3);
  CHECK(family_from_string("t5") == Family::t5);
  CHECK_FALSE(family_from_string("T9").has_value());
  CHECK(default_bound(Family::t1) == 12);
  CHECK(default_bound(Family::t4) == 8);
}
