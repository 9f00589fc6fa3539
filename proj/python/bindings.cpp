#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "dfdio/abccert.hpp"
#include "dfdio/construct.hpp"
#include "dfdio/equations.hpp"
#include "dfdio/inequalities.hpp"
#include "dfdio/obstruction.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// mpz_class <-> python int, via decimal strings (exact in both directions).
template <>
struct type_caster<mpz_class> {
 public:
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    PyObject* s = PyObject_Str(src.ptr());
    if (!s) return false;
    const char* text = PyUnicode_AsUTF8(s);
    bool ok = text && mpz_set_str(value.get_mpz_t(), text, 10) == 0;
    Py_DECREF(s);
    return ok;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

using dfdio::Int;
using dfdio::Nat;

py::dict witness_dict(const dfdio::Witness& w) {
  py::dict d;
  d["b"] = w.params.b;
  py::list a;
  for (const Nat& v : w.params.A) a.append(v);
  d["A"] = a;
  d["d"] = w.params.d;
  d["t"] = w.params.t;
  d["variant"] = std::string(dfdio::variant_name(w.variant));
  d["R"] = w.R;
  d["s"] = w.s;
  d["m"] = w.m;
  py::list n;
  for (const Nat& v : w.n) n.append(v);
  d["n"] = n;
  d["x"] = w.x;
  d["checked"] = w.checked;
  if (w.y) d["y"] = *w.y;
  return d;
}

py::dict triple_dict(const dfdio::AbcTriple& t) {
  py::dict d;
  d["A"] = t.a;
  d["B"] = t.b;
  d["C"] = t.c;
  d["D"] = t.d_gcd;
  d["z"] = t.z;
  d["j"] = t.j;
  d["radical"] = t.radical_abc;
  d["quality"] = t.quality;
  d["finsler_ok"] = t.finsler_ok;
  d["eq9_ok"] = t.eq9_ok;
  if (t.size_bracket_ok)
    d["size_bracket"] = *t.size_bracket_ok ? "ok" : "violated";
  else
    d["size_bracket"] = "skipped";
  d["n"] = t.n;
  return d;
}

}  // namespace

PYBIND11_MODULE(dfdio, m) {
  m.doc() = "exact arithmetic for double-factorial diophantine equations";

  py::enum_<dfdio::Comparison>(m, "Comparison")
      .value("LESS", dfdio::Comparison::less)
      .value("EQUAL", dfdio::Comparison::equal)
      .value("GREATER", dfdio::Comparison::greater)
      .value("INDETERMINATE", dfdio::Comparison::indeterminate);

  py::register_exception<dfdio::budget_error>(m, "BudgetError");
  py::register_exception<dfdio::hypothesis_error>(m, "HypothesisError");

  m.def("double_factorial", &dfdio::double_factorial, py::arg("n"));
  m.def("factorial", &dfdio::factorial, py::arg("n"));
  m.def("int_pow", &dfdio::int_pow, py::arg("base"), py::arg("exp"));
  m.def(
      "is_perfect_dth_power",
      [](const Int& v, uint64_t d) -> std::optional<Int> {
        return dfdio::is_perfect_dth_power(v, d);
      },
      py::arg("v"), py::arg("d"));
  m.def("primes_in_interval", &dfdio::primes_in_interval, py::arg("lo"), py::arg("hi"));
  m.def("is_prime", &dfdio::is_prime, py::arg("v"));
  m.def("vp_factorial", &dfdio::vp_factorial, py::arg("p"), py::arg("n"));
  m.def("vp_double_factorial", &dfdio::vp_double_factorial, py::arg("p"), py::arg("n"));
  m.def("radical", &dfdio::radical, py::arg("a"));

  m.def("cmp_dfact_root", &dfdio::cmp_dfact_root, py::arg("n"), py::arg("m"));
  m.def("cmp_nth_root", &dfdio::cmp_nth_root, py::arg("n"), py::arg("m"));
  m.def("check_ratio_bound", &dfdio::check_ratio_bound, py::arg("n"));
  m.def("check_k_power_vs_dfact", &dfdio::check_k_power_vs_dfact, py::arg("k"));
  m.def("check_amgm_step", &dfdio::check_amgm_step, py::arg("k"));

  m.def(
      "equation_holds",
      [](const std::string& family, uint64_t k, uint64_t n) {
        auto f = dfdio::family_from_string(family);
        if (!f) throw std::invalid_argument("unknown family: " + family);
        return dfdio::equation_holds(*f, k, n) == dfdio::Comparison::equal;
      },
      py::arg("family"), py::arg("k"), py::arg("n"));
  m.def(
      "solve_family",
      [](const std::string& family, uint64_t bound, bool prune) {
        auto f = dfdio::family_from_string(family);
        if (!f) throw std::invalid_argument("unknown family: " + family);
        auto cfg = dfdio::default_eval_config();
        cfg.prune = prune;
        py::list out;
        for (const auto& r : dfdio::solve_family(*f, bound, cfg)) {
          py::dict d;
          d["family"] = std::string(dfdio::family_name(r.family));
          d["k"] = r.k;
          d["n"] = r.n;
          d["verification"] =
              r.verification == dfdio::Verification::exact ? "exact" : "identity";
          out.append(d);
        }
        return out;
      },
      py::arg("family"), py::arg("bound"), py::arg("prune") = true);

  m.def(
      "derive_witness",
      [](const Int& b, const std::vector<Nat>& A, uint64_t d, uint64_t t) {
        return witness_dict(dfdio::derive_witness({b, A, d, t}));
      },
      py::arg("b"), py::arg("A"), py::arg("d"), py::arg("t") = 1);
  m.def(
      "derive_witness_factorial_variant",
      [](const Int& b, const std::vector<Nat>& A, uint64_t d, const Nat& y) {
        return witness_dict(dfdio::derive_witness_factorial_variant({b, A, d, 1}, y));
      },
      py::arg("b"), py::arg("A"), py::arg("d"), py::arg("y"));
  m.def(
      "verify_solution",
      [](const Int& b, const std::vector<Nat>& A, const std::vector<Nat>& n, const Int& x,
         uint64_t d, const std::string& variant) {
        auto v = dfdio::variant_from_string(variant);
        if (!v) throw std::invalid_argument("unknown variant: " + variant);
        return dfdio::verify_solution(b, A, n, x, d, *v);
      },
      py::arg("b"), py::arg("A"), py::arg("n"), py::arg("x"), py::arg("d"),
      py::arg("variant") = "plain");

  m.def(
      "certificate_for",
      [](uint64_t n, const Int& b, const std::vector<Nat>& A, uint64_t d) -> py::object {
        auto c = dfdio::certificate_for(n, b, A, d);
        if (!c) return py::none();
        py::dict out;
        out["n"] = c->n_witnessed;
        out["prime"] = c->prime;
        out["exponent"] = c->exponent_in_product;
        out["threshold"] = c->threshold;
        out["case"] = std::string(dfdio::cert_case_name(c->case_tag));
        return out;
      },
      py::arg("n"), py::arg("b"), py::arg("A"), py::arg("d"));
  m.def(
      "finite_search",
      [](const Int& b, const std::vector<Nat>& A, uint64_t d, uint64_t slack) {
        auto rep = dfdio::finite_search(b, A, d, slack);
        py::dict out;
        out["threshold"] = rep.threshold;
        py::list sols;
        for (const auto& [tuple, x] : rep.solutions) {
          py::dict s;
          s["n"] = tuple;
          s["x"] = x;
          sols.append(s);
        }
        out["solutions"] = sols;
        out["certificates"] = py::int_(rep.certificates.size());
        return out;
      },
      py::arg("b"), py::arg("A"), py::arg("d"), py::arg("slack") = 8);
  m.def("exponent_in_product", &dfdio::exponent_in_product, py::arg("p"), py::arg("b"),
        py::arg("A"), py::arg("n"));

  m.def(
      "abc_triples",
      [](const std::string& poly, const Int& b, const std::vector<Nat>& A, uint64_t n_bound,
         uint64_t x_bound) {
        dfdio::RatPoly f = dfdio::parse_poly(poly);
        dfdio::DepressedPoly dp = dfdio::normalize(f, b);
        uint64_t j = dfdio::j_index(dp);
        py::list sols;
        py::list triples;
        std::vector<std::string> seen;
        for (const auto& [tuple, x] : dfdio::brute_solutions(f, b, A, n_bound, x_bound)) {
          py::dict s;
          s["n"] = tuple;
          s["x"] = x;
          sols.append(s);
          Nat rhs = 1;
          for (size_t i = 0; i < tuple.size(); ++i) {
            rhs *= dfdio::double_factorial(tuple[i]);
            rhs *= dfdio::int_pow(A[i], Nat(static_cast<unsigned long>(tuple[i])));
          }
          Int z = dp.z_of_x(x);
          if (sgn(z) == 0 || sgn(dfdio::eval_r1(dp, j, z)) == 0) continue;
          auto t = dfdio::triple_for_solution(dp, z, rhs, A, tuple);
          std::string key = t.a.get_str() + "|" + t.b.get_str() + "|" + t.c.get_str();
          if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
            seen.push_back(key);
            triples.append(triple_dict(t));
          }
        }
        py::dict out;
        out["solutions"] = sols;
        out["triples"] = triples;
        return out;
      },
      py::arg("poly"), py::arg("b") = 1, py::arg("A") = std::vector<Nat>{1},
      py::arg("n_bound") = 10, py::arg("x_bound") = 1000);
}
