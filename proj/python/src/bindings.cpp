#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "umbra/cli.hpp"
#include "umbra/dsl.hpp"
#include "umbra/series.hpp"
#include "umbra/umbral.hpp"
#include "umbra/verify.hpp"
#include "umbra/virasoro.hpp"

namespace py = pybind11;
using namespace umbra;

namespace {

py::object to_py(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.str());
}

Rational from_py(const py::handle& h) { return Rational::parse(py::str(h).cast<std::string>()); }

py::list to_py(std::span<const Rational> v) {
  py::list out;
  for (const auto& r : v) out.append(to_py(r));
  return out;
}

std::vector<Rational> from_py_list(const py::sequence& s) {
  std::vector<Rational> v;
  for (const auto& item : s) v.push_back(from_py(item));
  return v;
}

/// Ordinary coefficients c_0..c_N.
TruncatedSeries series_from(const py::sequence& s) {
  auto v = from_py_list(s);
  if (v.empty()) throw MathError(ErrorCode::InvalidArgument, "a series needs at least one coefficient");
  const int order = static_cast<int>(v.size()) - 1;
  return TruncatedSeries(order, std::move(v));
}

UnivarPoly poly_from(const py::sequence& s) { return UnivarPoly(from_py_list(s)); }

py::list poly_to(const UnivarPoly& p) {
  if (p.is_zero()) return to_py(std::vector<Rational>{Rational(0)});
  return to_py(p.coeffs());
}

py::dict result_to(const VerifyResult& r) {
  py::dict d;
  d["tag"] = r.tag;
  d["citation"] = r.citation;
  d["pass"] = r.pass;
  d["checks"] = r.checks;
  d["first_failure"] = r.first_failure ? py::object(py::str(*r.first_failure)) : py::object(py::none());
  d["notes"] = r.notes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact formal power series, umbral calculus and Virasoro ladder computations.";

  static py::exception<MathError> math_error(m, "MathError", PyExc_ValueError);
  static py::exception<dsl::SyntaxError> syntax_error(m, "SeriesSyntaxError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const dsl::SyntaxError& e) {
      py::set_error(syntax_error, e.what());
    } catch (const MathError& e) {
      py::set_error(math_error, e.what());
    }
  });

  m.def(
      "eval_series", [](const std::string& text, int order) { return to_py(dsl::eval_text(text, order).coeffs()); },
      py::arg("text"), py::arg("order"), "Ordinary coefficients of a series expression.");
  m.def(
      "eval_series_egf",
      [](const std::string& text, int order) { return to_py(dsl::eval_text(text, order).egf_coeffs()); },
      py::arg("text"), py::arg("order"), "EGF coefficients A_n = n! c_n of a series expression.");
  m.def("print_series", [](const std::string& text) { return dsl::print(*dsl::parse(text)); }, py::arg("text"),
        "Canonical form of a series expression.");

  m.def("mul", [](const py::sequence& a, const py::sequence& b) { return to_py((series_from(a) * series_from(b)).coeffs()); });
  m.def("mul_inverse", [](const py::sequence& a) { return to_py(mul_inverse(series_from(a)).coeffs()); });
  m.def("compose", [](const py::sequence& a, const py::sequence& b) {
    return to_py(compose(series_from(a), series_from(b)).coeffs());
  });
  m.def("comp_inverse", [](const py::sequence& b) { return to_py(comp_inverse(series_from(b)).coeffs()); });
  m.def("b_star", [](const py::sequence& b) { return to_py(b_star(series_from(b)).coeffs()); });
  m.def("exp_series", [](const py::sequence& a) { return to_py(exp_series(series_from(a)).coeffs()); });
  m.def("log_series", [](const py::sequence& a) { return to_py(log_series(series_from(a)).coeffs()); });

  m.def(
      "bell",
      [](int order) {
        const TruncatedSeries e = TruncatedSeries::exp_t(order);
        return to_py(compose(e, e - TruncatedSeries::constant(Rational(1), order)).egf_coeffs());
      },
      py::arg("order"), "Bell numbers B_0..B_order.");

  m.def(
      "umbral_sequences",
      [](const std::string& b, int n) {
        py::list out;
        for (const auto& p : umbral_sequences(dsl::eval_text(b, std::max(n, 1)), n)) out.append(poly_to(p));
        return out;
      },
      py::arg("B"), py::arg("n"), "Coefficient lists of B_0(x)..B_n(x).");
  m.def(
      "theta",
      [](const std::string& b, const py::sequence& p) {
        const UnivarPoly q = poly_from(p);
        return poly_to(theta(dsl::eval_text(b, std::max(q.degree(), 1)), q));
      },
      py::arg("B"), py::arg("p"));
  m.def(
      "shift",
      [](const std::string& b, const py::sequence& p, int mm) {
        const UnivarPoly q = poly_from(p);
        return poly_to(gen_umbral_shift_m(dsl::eval_text(b, q.degree() + 2), mm, q));
      },
      py::arg("B"), py::arg("p"), py::arg("m") = -1, "Generalised umbral shift D_B(m); m = -1 is D_B.");
  m.def(
      "pair",
      [](const std::string& a, const py::sequence& p) {
        const UnivarPoly q = poly_from(p);
        return to_py(pairing(dsl::eval_text(a, std::max(q.degree(), 0)), q));
      },
      py::arg("A"), py::arg("p"), "The pairing <A | p(x)>.");

  m.def("f_rec", [](int mm, int n) { return to_py(f_rec(mm, n)); }, py::arg("m"), py::arg("n"));
  m.def("f_closed", [](int mm, const py::handle& n) { return to_py(f_closed(mm, from_py(n))); }, py::arg("m"),
        py::arg("n"));
  m.def("fmn_table_csv", [](int max_m, int max_n) { return FTable(max_m, max_n).to_csv(); }, py::arg("max_m"),
        py::arg("max_n"));
  m.def(
      "sheffer_ts",
      [](int n, const py::handle& x) {
        const ShefferValues v = sheffer_ts(n, from_py(x));
        return py::make_tuple(to_py(v.t), to_py(v.s));
      },
      py::arg("n"), py::arg("x"));

  m.def("registry_tags", &registry_tags);
  m.def(
      "verify",
      [](const std::string& tag, int order, std::uint64_t seed, int instances) {
        VerifyOptions o;
        o.order = order;
        o.seed = seed;
        o.instances = instances;
        std::vector<VerifyResult> results;
        {
          py::gil_scoped_release release;
          results = run_entries(tag == "ALL" ? registry_tags() : std::vector<std::string>{tag}, o);
        }
        py::list out;
        for (const auto& r : results) out.append(result_to(r));
        return out;
      },
      py::arg("tag") = "ALL", py::arg("order") = 10, py::arg("seed") = 0, py::arg("instances") = 3);
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in-process; returns (exit code, stdout, stderr).");
}
