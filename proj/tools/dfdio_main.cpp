#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "dfdio/abccert.hpp"
#include "dfdio/construct.hpp"
#include "dfdio/equations.hpp"
#include "dfdio/inequalities.hpp"
#include "dfdio/obstruction.hpp"

namespace {

using dfdio::Int;
using dfdio::Nat;
using json = nlohmann::json;

std::vector<Nat> parse_nat_list(const std::string& text) {
  std::vector<Nat> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string token = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (token.empty()) throw std::invalid_argument("empty entry in integer list");
    out.emplace_back(token);  // throws std::invalid_argument on junk
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

struct Options {
  bool table = false;
  uint64_t bit_ceiling = 0;  // 0: keep the default / env value

  // solve
  std::string family;
  uint64_t bound = 0;
  bool no_prune = false;

  // construct / obstruct / abc
  std::string b_text = "1";
  std::string a_text = "1";
  uint64_t d = 2;
  uint64_t t = 1;
  std::string variant = "plain";
  std::string y_text = "1";
  uint64_t s_ceiling = 1000000;
  uint64_t slack = 8;
  std::string poly;
  uint64_t n_bound = 10;
  uint64_t x_bound = 1000;

  // check
  uint64_t max_n = 500;
  uint64_t seed = 12345;
};

dfdio::EvalConfig eval_config(const Options& o) {
  dfdio::EvalConfig cfg = dfdio::default_eval_config();
  if (o.bit_ceiling) cfg.bit_ceiling = o.bit_ceiling;
  cfg.prune = !o.no_prune;
  return cfg;
}

int cmd_solve(const Options& o) {
  auto family = dfdio::family_from_string(o.family);
  if (!family) throw std::invalid_argument("unknown family '" + o.family + "' (expected T1..T5)");
  uint64_t bound = o.bound ? o.bound : dfdio::default_bound(*family);
  auto records = dfdio::solve_family(*family, bound, eval_config(o));
  if (o.table) {
    std::cout << "family  k  n  verification\n";
    for (const auto& r : records)
      std::cout << dfdio::family_name(r.family) << "  " << r.k << "  " << r.n << "  "
                << (r.verification == dfdio::Verification::exact ? "exact" : "identity") << "\n";
    std::cout << records.size() << " solutions within bound " << bound << "\n";
    return 0;
  }
  for (const auto& r : records) {
    json j;
    j["family"] = std::string(dfdio::family_name(r.family));
    j["k"] = r.k;
    j["n"] = r.n;
    j["verification"] =
        r.verification == dfdio::Verification::exact ? "exact" : "identity";
    std::cout << j.dump() << "\n";
  }
  return 0;
}

int cmd_construct(const Options& o) {
  dfdio::ConstructParams params;
  params.b = Int(o.b_text);
  params.A = parse_nat_list(o.a_text);
  params.d = o.d;
  params.t = o.t;
  dfdio::ConstructLimits lim;
  lim.s_ceiling = o.s_ceiling;
  if (o.bit_ceiling) lim.bit_ceiling = o.bit_ceiling;
  auto v = dfdio::variant_from_string(o.variant);
  if (!v) throw std::invalid_argument("unknown variant '" + o.variant + "'");
  dfdio::Witness w = (*v == dfdio::ProductVariant::fact_exponent)
                         ? dfdio::derive_witness_factorial_variant(params, Nat(o.y_text), lim)
                         : dfdio::derive_witness(params, lim);
  if (o.table) {
    std::cout << "m = " << w.m << ", s = " << w.s.get_str() << ", R = " << w.R.get_str() << "\n";
    std::cout << "n = (";
    for (size_t i = 0; i < w.n.size(); ++i) std::cout << (i ? "," : "") << w.n[i].get_str();
    std::cout << ")\nx = " << w.x.get_str() << "\nchecked = " << (w.checked ? "true" : "false")
              << "\n";
  } else {
    std::cout << dfdio::witness_to_json(w) << "\n";
  }
  return w.checked ? 0 : 1;
}

int cmd_obstruct(const Options& o) {
  Int b(o.b_text);
  auto A = parse_nat_list(o.a_text);
  auto report = dfdio::finite_search(b, A, o.d, o.slack);
  if (o.table) {
    std::cout << "threshold = " << report.threshold << " (sweep to " << 2 * report.threshold
              << ")\n";
    for (const auto& [tuple, x] : report.solutions) {
      std::cout << "solution n = (";
      for (size_t i = 0; i < tuple.size(); ++i) std::cout << (i ? "," : "") << tuple[i];
      std::cout << "), x = " << x.get_str() << "\n";
    }
    std::cout << report.solutions.size() << " solutions, " << report.certificates.size()
              << " certificates\n";
  } else {
    std::cout << dfdio::report_to_json(report) << "\n";
  }
  return 0;
}

int cmd_abc(const Options& o) {
  dfdio::RatPoly f = dfdio::parse_poly(o.poly);
  Int b(o.b_text);
  auto A = parse_nat_list(o.a_text);
  dfdio::DepressedPoly dp = dfdio::normalize(f, b);
  auto sols = dfdio::brute_solutions(f, b, A, o.n_bound, o.x_bound);

  std::vector<json> solution_lines;
  std::vector<json> degenerate_lines;
  std::vector<dfdio::AbcTriple> triples;
  std::map<std::string, bool> seen;
  uint64_t j = dfdio::j_index(dp);
  for (const auto& [tuple, x] : sols) {
    json s;
    s["record"] = "solution";
    s["n"] = tuple;
    s["x"] = x.get_str();
    solution_lines.push_back(s);

    Nat rhs = 1;
    for (size_t i = 0; i < tuple.size(); ++i) {
      rhs *= dfdio::double_factorial(tuple[i]);
      rhs *= dfdio::int_pow(A[i], Nat(static_cast<unsigned long>(tuple[i])));
    }
    Int z = dp.z_of_x(x);
    if (sgn(z) == 0 || sgn(dfdio::eval_r1(dp, j, z)) == 0) {
      json dg;
      dg["record"] = "degenerate";
      dg["n"] = tuple;
      dg["x"] = x.get_str();
      dg["z"] = z.get_str();
      degenerate_lines.push_back(dg);
      continue;
    }
    dfdio::AbcTriple triple = dfdio::triple_for_solution(dp, z, rhs, A, tuple);
    std::string key =
        triple.a.get_str() + "|" + triple.b.get_str() + "|" + triple.c.get_str();
    if (!seen.count(key)) {
      seen[key] = true;
      triples.push_back(std::move(triple));
    }
  }
  dfdio::QualitySummary summary = dfdio::quality_report(triples);

  if (o.table) {
    std::cout << sols.size() << " solutions, " << triples.size() << " distinct triples, "
              << degenerate_lines.size() << " degenerate\n";
    for (const auto& t : triples)
      std::cout << "z = " << t.z.get_str() << ": (" << t.a.get_str() << ") + (" << t.b.get_str()
                << ") = " << t.c.get_str() << ", radical " << t.radical_abc.get_str()
                << ", quality " << t.quality << "\n";
    if (summary.count) std::cout << "max quality = " << summary.max_quality << "\n";
    return 0;
  }
  for (const auto& s : solution_lines) std::cout << s.dump() << "\n";
  for (const auto& s : degenerate_lines) std::cout << s.dump() << "\n";
  for (const auto& t : triples) {
    json tj = json::parse(dfdio::triple_to_json(t));
    tj["record"] = "triple";
    std::cout << tj.dump() << "\n";
  }
  json sj;
  sj["record"] = "summary";
  sj["solutions"] = sols.size();
  sj["triples"] = triples.size();
  sj["degenerate"] = degenerate_lines.size();
  sj["max_quality"] = summary.max_quality;
  sj["mean_quality"] = summary.mean_quality;
  sj["all_finsler_ok"] = summary.all_finsler_ok;
  sj["all_eq9_ok"] = summary.all_eq9_ok;
  std::cout << sj.dump() << "\n";
  return 0;
}

struct Suite {
  std::string name;
  uint64_t from;
  uint64_t to;
  uint64_t failures;
};

int cmd_check(const Options& o) {
  std::vector<Suite> suites;
  auto run = [&](const std::string& name, uint64_t from, uint64_t to, uint64_t step, auto&& pred) {
    Suite s{name, from, to, 0};
    for (uint64_t v = from; v <= to; v += step)
      if (!pred(v)) ++s.failures;
    suites.push_back(s);
  };

  run("dfact_root_monotone", 3, o.max_n, 1,
      [](uint64_t n) { return dfdio::cmp_dfact_root(n, n - 1) == dfdio::Comparison::greater; });
  run("dfact_root_step_2_3", 3, 3, 1,
      [](uint64_t) { return dfdio::cmp_dfact_root(3, 2) == dfdio::Comparison::greater; });
  run("nth_root_decreasing", 3, o.max_n, 1,
      [](uint64_t n) { return dfdio::cmp_nth_root(n, n + 1) == dfdio::Comparison::greater; });
  run("ratio_bound", 2, o.max_n, 1, [](uint64_t n) { return dfdio::check_ratio_bound(n); });
  if (o.max_n >= 4)
    run("k_power_vs_dfact", 4, o.max_n, 1,
        [](uint64_t k) { return dfdio::check_k_power_vs_dfact(k); });
  run("amgm_step", 2, o.max_n, 1, [](uint64_t k) { return dfdio::check_amgm_step(k); });
  if (o.max_n >= 7) {
    run("k3_cube_ratio", 7, o.max_n, 2,
        [](uint64_t n) { return dfdio::check_k3_cube_ratio(n); });
    run("k3_cube_growth", 7, o.max_n, 2,
        [](uint64_t n) { return dfdio::check_k3_cube_growth(n); });
  }

  // screened comparisons must agree with exact ones whenever they decide
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<uint64_t> base_dist(1, 60);
  std::uniform_int_distribution<uint64_t> exp_dist(0, 40);
  std::uniform_int_distribution<int> len_dist(1, 3);
  Suite screen{"screen_consistency", 1, 2000, 0};
  for (int iter = 0; iter < 2000; ++iter) {
    auto gen = [&] {
      dfdio::ExprProduct e;
      int len = len_dist(rng);
      for (int i = 0; i < len; ++i)
        e.push_back({Nat(static_cast<unsigned long>(base_dist(rng))),
                     Nat(static_cast<unsigned long>(exp_dist(rng)))});
      return e;
    };
    auto exact_value = [](const dfdio::ExprProduct& e) {
      Int v = 1;
      for (const auto& f : e) v *= dfdio::int_pow(f.base, f.exp);
      return v;
    };
    dfdio::ExprProduct l = gen(), r = gen();
    dfdio::Comparison sc = dfdio::screen_cmp(l, r);
    if (sc == dfdio::Comparison::indeterminate) continue;
    int ex = cmp(exact_value(l), exact_value(r));
    if (sc != dfdio::comparison_from_sign(ex)) ++screen.failures;
  }
  suites.push_back(screen);

  uint64_t total_failures = 0;
  for (const auto& s : suites) {
    total_failures += s.failures;
    if (o.table) {
      std::cout << s.name << " [" << s.from << ".." << s.to << "]: "
                << (s.failures ? "FAIL" : "ok") << " (" << s.failures << " failures)\n";
    } else {
      json j;
      j["suite"] = s.name;
      j["from"] = s.from;
      j["to"] = s.to;
      j["failures"] = s.failures;
      std::cout << j.dump() << "\n";
    }
  }
  return total_failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solvers and certificates for double-factorial diophantine equations"};
  app.require_subcommand(1);
  Options o;

  app.add_flag("--table", o.table, "human-readable tables instead of JSON lines");
  app.add_option("--bit-ceiling", o.bit_ceiling, "per-value bit ceiling for exact evaluation")
      ->check(CLI::Range(uint64_t{65536}, uint64_t{1} << 40));

  auto* solve = app.add_subcommand("solve", "enumerate solutions of an equation family");
  solve->add_option("--family", o.family, "family tag, T1..T5")->required();
  solve->add_option("--bound", o.bound, "grid bound (default depends on family)")
      ->check(CLI::Range(uint64_t{1}, uint64_t{100000}));
  solve->add_flag("--no-prune", o.no_prune, "exact-check every pair (oracle mode)");

  auto* construct = app.add_subcommand("construct", "derive an explicit witness (d <= r)");
  construct->add_option("--b", o.b_text, "non-zero integer b")->required();
  construct->add_option("--A", o.a_text, "comma-separated positive integers A_1..A_r")->required();
  construct->add_option("--d", o.d, "power d")->required()->check(CLI::PositiveNumber);
  construct->add_option("--t", o.t, "free index t >= 1")->check(CLI::PositiveNumber);
  construct->add_option("--variant", o.variant, "plain | fact_exponent | dfact_exponent");
  construct->add_option("--y", o.y_text, "free parameter for the fact_exponent variant");
  construct->add_option("--s-ceiling", o.s_ceiling, "reject witnesses with s beyond this");

  auto* obstruct = app.add_subcommand("obstruct", "finite search plus certificates (d > r)");
  obstruct->add_option("--b", o.b_text, "non-zero integer b")->required();
  obstruct->add_option("--A", o.a_text, "comma-separated positive integers")->required();
  obstruct->add_option("--d", o.d, "power d")->required()->check(CLI::PositiveNumber);
  obstruct->add_option("--slack", o.slack, "extra width added to the threshold (default 8)");

  auto* abc = app.add_subcommand("abc", "solutions and ABC triples for b prod = f(x)");
  abc->add_option("--poly", o.poly, "coefficients c_d,...,c_0 (exact rationals)")->required();
  abc->add_option("--b", o.b_text, "non-zero integer b");
  abc->add_option("--A", o.a_text, "comma-separated positive integers");
  abc->add_option("--n-bound", o.n_bound, "bound on every n_i")->check(CLI::PositiveNumber);
  abc->add_option("--x-bound", o.x_bound, "bound on |x|")->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "run the inequality certification suites");
  check->add_option("--max-n", o.max_n, "upper end of the certified ranges (default 500)")
      ->check(CLI::Range(uint64_t{2}, uint64_t{2000}));
  check->add_option("--seed", o.seed, "seed for the randomized screening sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (solve->parsed()) return cmd_solve(o);
    if (construct->parsed()) return cmd_construct(o);
    if (obstruct->parsed()) return cmd_obstruct(o);
    if (abc->parsed()) return cmd_abc(o);
    if (check->parsed()) return cmd_check(o);
  } catch (const dfdio::budget_error& e) {
    std::cerr << "budget exceeded: " << e.what();
    if (e.has_pair()) std::cerr << " at (k, n) = (" << e.k() << ", " << e.n() << ")";
    std::cerr << "\n";
    return 2;
  } catch (const dfdio::hypothesis_error& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  }
  return 0;
}
