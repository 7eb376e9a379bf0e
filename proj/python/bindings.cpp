#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "harmolift/cli.hpp"
#include "harmolift/errors.hpp"
#include "harmolift/forms.hpp"
#include "harmolift/lift.hpp"
#include "harmolift/serialize.hpp"
#include "harmolift/specfun.hpp"
#include "harmolift/verify.hpp"

namespace py = pybind11;
using namespace harmolift;

namespace {

py::tuple special(const SpecialValue& v) { return py::make_tuple(v.val, v.err_est); }

std::vector<std::string> exact(const IntSeries& s) {
  std::vector<std::string> out;
  for (const auto& c : s.coeffs()) {
    out.push_back(c.str());
  }
  return out;
}

py::tuple eval_lift(const HarmonicExpansion& h, double x, double y) {
  const EvalResult r = assemble(h, UhpPoint(x, y));
  return py::make_tuple(r.value.val, r.tail);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<AccuracyRegionError>(m, "AccuracyRegionError", PyExc_ValueError);

  m.def("inc_gamma", [](cplx p, cplx x) { return special(inc_gamma(p, x)); }, py::arg("p"), py::arg("x"));
  m.def("m_func", [](cplx p, cplx n, double y) { return special(m_func(p, n, y)); }, py::arg("p"), py::arg("n"),
        py::arg("y"));
  m.def("kummer_1f1", [](cplx a, cplx b, cplx x) { return special(kummer_1f1(a, b, x)); });
  m.def("sigma", [](int u, long n) { return sigma(u, n).str(); });
  m.def("dedekind_sum", [](long d, long c) { return dedekind_sum(d, c).str(); });

  m.def("j_invariant", [](int trunc) { return exact(j_invariant(trunc)); }, py::arg("trunc"));
  m.def("eta_power_at", [](cplx r, double x, double y) {
    const Jet v = eta_power_at(Jet::variable(r), UhpPoint(x, y));
    return py::make_tuple(v.val, v.d1);
  });

  // Lift values at a point: (value, tail bound).
  m.def("lift_at_zero", [](double x, double y, int trunc) { return eval_lift(eta_lift_at_zero(trunc), x, y); },
        py::arg("x"), py::arg("y"), py::arg("trunc") = 64);
  m.def("lift_derivative", [](double x, double y, int trunc) {
    return eval_lift(eta_lift_derivative_at_zero(trunc), x, y);
  }, py::arg("x"), py::arg("y"), py::arg("trunc") = 64);
  m.def("lift_json", [](bool derivative, int trunc) {
    return (derivative ? to_json(eta_lift_derivative_at_zero(trunc)) : to_json(eta_lift_at_zero(trunc))).dump();
  }, py::arg("derivative") = false, py::arg("trunc") = 64);

  m.def("verify", [](const std::string& suite, std::uint64_t seed) {
    VerifyConfig cfg;
    cfg.seed = seed;
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : run_suite(suite, cfg)) {
      out.push_back(to_json(r));
    }
    return out.dump();
  }, py::arg("suite") = "all", py::arg("seed") = VerifyConfig{}.seed);

  m.def("cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "harmolift");
    std::vector<const char*> argv;
    for (const auto& a : args) {
      argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
