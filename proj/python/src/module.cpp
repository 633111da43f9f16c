#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nsq/ctengine.hpp"
#include "nsq/quotient.hpp"
#include "nsq/rgf.hpp"

namespace py = pybind11;
using namespace nsq;
using namespace py::literals;

namespace {

py::object py_int(const BigInt& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object py_fraction(const BigRational& v) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py_int(v.get_num()), py_int(v.get_den()));
}

py::list coefficient_list(const Poly& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(py_fraction(c));
  return out;
}

py::list int_list(const std::vector<BigInt>& v) {
  py::list out;
  for (const auto& c : v) out.append(py_int(c));
  return out;
}

// (numerator coefficients, denominator coefficients), lowest degree first.
py::tuple rational_function(const RationalFunction& f) {
  return py::make_tuple(coefficient_list(f.num()), coefficient_list(f.den()));
}

Limits limits(std::int64_t sieve_cap, std::int64_t tp_cap) { return Limits{sieve_cap, tp_cap}; }

GeneratorList gens_of(const std::vector<std::int64_t>& g) { return GeneratorList(g); }

}  // namespace

PYBIND11_MODULE(_nsq, m) {
  m.doc() = "Numerical semigroups, their quotients and representation generating functions";

  static py::object error_type = py::module_::import("builtins")
                                     .attr("type")("NsqError", py::make_tuple(py::handle(PyExc_ValueError)),
                                                   py::dict("__module__"_a = "nsq"));
  m.attr("NsqError") = error_type;
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = error_type(e.what());
      inst.attr("kind") = py::str(std::string(to_string(e.kind())));
      PyErr_SetObject(error_type.ptr(), inst.ptr());
    }
  });

  const Limits defaults{};
  auto caps = [&] { return py::arg("sieve_cap") = defaults.sieve_cap; };
  auto tps = [&] { return py::arg("tp_cap") = defaults.tp_cap; };

  m.def(
      "members",
      [](const std::vector<std::int64_t>& g, std::int64_t bound, std::int64_t sc, std::int64_t tc) {
        const auto t = build_membership(gens_of(g), bound, limits(sc, tc));
        std::vector<std::int64_t> out;
        for (std::int64_t n = 0; n <= bound; ++n)
          if (t.contains(n)) out.push_back(n);
        return out;
      },
      py::arg("gens"), py::arg("bound"), caps(), tps());
  m.def(
      "frobenius",
      [](const std::vector<std::int64_t>& g, std::int64_t sc, std::int64_t tc) {
        return frobenius(gens_of(g), limits(sc, tc));
      },
      py::arg("gens"), caps(), tps());
  m.def(
      "gaps",
      [](const std::vector<std::int64_t>& g, std::int64_t sc, std::int64_t tc) { return gaps(gens_of(g), limits(sc, tc)); },
      py::arg("gens"), caps(), tps());
  m.def(
      "apery",
      [](const std::vector<std::int64_t>& g, std::int64_t mm, std::int64_t sc, std::int64_t tc) {
        return apery(gens_of(g), mm, limits(sc, tc));
      },
      py::arg("gens"), py::arg("m"), caps(), tps());
  m.def(
      "minimal_generators",
      [](const std::vector<std::int64_t>& g, std::int64_t sc, std::int64_t tc) {
        return minimal_generators(gens_of(g), limits(sc, tc));
      },
      py::arg("gens"), caps(), tps());
  m.def(
      "denumerant", [](std::int64_t n, const std::vector<std::int64_t>& g) { return py_int(denumerant(n, gens_of(g))); },
      py::arg("n"), py::arg("gens"));
  m.def(
      "denumerant_series",
      [](const std::vector<std::int64_t>& g, std::int64_t n) {
        return int_list(denumerant_series(gens_of(g), n).coefficients());
      },
      py::arg("gens"), py::arg("n"));

  m.def(
      "quotient_generators",
      [](const std::vector<std::int64_t>& g, std::int64_t p, bool minimal, std::int64_t sc, std::int64_t tc) {
        const QuotientSpec q(gens_of(g), p);
        return minimal ? minimal_quotient_generators(q, limits(sc, tc)) : generators_thm(q, limits(sc, tc));
      },
      py::arg("gens"), py::arg("p"), py::arg("minimal") = false, caps(), tps());
  m.def(
      "quotient_members",
      [](const std::vector<std::int64_t>& g, std::int64_t p, std::int64_t bound, std::int64_t sc, std::int64_t tc) {
        const auto t = quotient_membership(QuotientSpec(gens_of(g), p), bound, limits(sc, tc));
        std::vector<std::int64_t> out;
        for (std::int64_t n = 0; n <= bound; ++n)
          if (t.contains(n)) out.push_back(n);
        return out;
      },
      py::arg("gens"), py::arg("p"), py::arg("bound"), caps(), tps());
  m.def(
      "quotient_frobenius",
      [](const std::vector<std::int64_t>& g, std::int64_t p, std::int64_t sc, std::int64_t tc) {
        return frobenius_quotient(QuotientSpec(gens_of(g), p), limits(sc, tc));
      },
      py::arg("gens"), py::arg("p"), caps(), tps());
  m.def(
      "table_generators",
      [](const std::vector<std::int64_t>& g, std::int64_t p) { return table1_generators(QuotientSpec(gens_of(g), p)); },
      py::arg("gens"), py::arg("p"));
  m.def(
      "verify_generators",
      [](const std::vector<std::int64_t>& g, std::int64_t p, std::int64_t sc, std::int64_t tc) {
        const auto r = verify_generators(QuotientSpec(gens_of(g), p), limits(sc, tc));
        py::dict d;
        d["pass"] = r.pass;
        d["bound"] = r.bound;
        d["generators"] = r.generators;
        d["first_mismatch"] = r.first_mismatch;
        return d;
      },
      py::arg("gens"), py::arg("p"), caps(), tps());
  m.def(
      "tp",
      [](const std::vector<std::int64_t>& g, std::int64_t p, std::int64_t tc) {
        const auto t = enumerate_tp(g, p, Limits{Limits{}.sieve_cap, tc});
        py::list out;
        for (std::size_t i = 0; i < t.tuples.size(); ++i)
          out.append(py::make_tuple(py::tuple(py::cast(t.tuples[i])), t.values[i]));
        return out;
      },
      py::arg("gens"), py::arg("p"), tps());

  m.def(
      "rgf_series",
      [](const std::vector<std::int64_t>& g, std::int64_t p, std::int64_t n) {
        return int_list(rgf_series(gens_of(g), p, n).coefficients.coefficients());
      },
      py::arg("gens"), py::arg("p"), py::arg("n"));
  m.def(
      "rgf_rational",
      [](const std::vector<std::int64_t>& g, std::int64_t p, std::int64_t sc, std::int64_t tc) {
        const auto r = rgf_rational(gens_of(g), p, limits(sc, tc));
        py::dict d;
        d["numerator"] = coefficient_list(r.numerator);
        d["denominator"] = r.denom_factors;
        d["certified_to"] = r.certified_to;
        d["text"] = r.to_text();
        return d;
      },
      py::arg("gens"), py::arg("p"), caps(), tps());
  m.def(
      "rgf_frobenius",
      [](const std::vector<std::int64_t>& g, std::int64_t p, std::int64_t sc, std::int64_t tc) {
        return frobenius_from_rgf(gens_of(g), p, limits(sc, tc));
      },
      py::arg("gens"), py::arg("p"), caps(), tps());
  m.def(
      "rgf_generators",
      [](const std::vector<std::int64_t>& g, std::int64_t p, std::int64_t sc, std::int64_t tc) {
        return gens_from_rgf(rgf_rational(gens_of(g), p, limits(sc, tc)));
      },
      py::arg("gens"), py::arg("p"), caps(), tps());

  m.def(
      "ct_constant_term", [](const std::string& expr) { return rational_function(ct_constant_term(parse_ct_expr(expr))); },
      py::arg("expr"));
  m.def(
      "ct_normalize", [](const std::string& expr) { return render_ct_expr(normalize_expr(parse_ct_expr(expr))); },
      py::arg("expr"));
  m.def(
      "ct_lemma_check", [](const std::string& expr) { return lemma_zero_check(parse_ct_expr(expr)); }, py::arg("expr"));
  m.def(
      "ct_rgf",
      [](const std::vector<std::int64_t>& g, std::int64_t p) { return rational_function(ct_rgf_rational(gens_of(g), p)); },
      py::arg("gens"), py::arg("p"));
}
