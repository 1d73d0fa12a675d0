#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zap/acceptance.hpp"
#include "zap/asymptotics.hpp"
#include "zap/census.hpp"
#include "zap/coefficients.hpp"
#include "zap/errors.hpp"
#include "zap/evaluator.hpp"
#include "zap/io.hpp"
#include "zap/regions.hpp"
#include "zap/rootscan.hpp"
#include "zap/scan.hpp"

namespace py = pybind11;
using namespace zap;

namespace {

py::dict point_dict(const APoint& p) {
  py::dict d;
  d["k"] = p.k;
  d["a"] = p.a;
  d["beta"] = p.beta;
  d["gamma"] = p.gamma;
  d["residual"] = p.residual;
  d["box"] = py::make_tuple(p.box.sigma_lo, p.box.sigma_hi, p.box.t_lo, p.box.t_hi);
  d["window_id"] = p.window_id;
  d["multiplicity"] = p.multiplicity;
  return d;
}

EvalConfig eval_cfg(const std::string& precision) {
  EvalConfig c;
  if (precision == "compensated") c.precision_mode = PrecisionMode::compensated;
  else if (precision != "standard") throw Error(ErrorCode::InvalidArgument, "precision must be standard or compensated");
  return c;
}

ScanConfig scan_cfg(const std::string& precision) {
  ScanConfig c;
  c.eval = eval_cfg(precision);
  return c;
}

}  // namespace

PYBIND11_MODULE(_zap, m) {
  m.doc() = "a-points of derivatives of the Riemann zeta function";

  py::register_exception<Error>(m, "ZapError", PyExc_RuntimeError);

  py::class_<Rect>(m, "Rect")
      .def(py::init<double, double, double, double>(), py::arg("sigma_lo"), py::arg("sigma_hi"), py::arg("t_lo"),
           py::arg("t_hi"))
      .def_readwrite("sigma_lo", &Rect::sigma_lo)
      .def_readwrite("sigma_hi", &Rect::sigma_hi)
      .def_readwrite("t_lo", &Rect::t_lo)
      .def_readwrite("t_hi", &Rect::t_hi)
      .def("__repr__", [](const Rect& r) {
        return "Rect(" + io::num(r.sigma_lo) + ", " + io::num(r.sigma_hi) + ", " + io::num(r.t_lo) + ", " +
               io::num(r.t_hi) + ")";
      });

  m.def("zeta", [](Complex s, const std::string& precision) { return zeta(s, eval_cfg(precision)); }, py::arg("s"),
        py::arg("precision") = "standard");
  m.def("zeta_deriv", [](int k, Complex s, const std::string& precision) { return zeta_deriv(k, s, eval_cfg(precision)); },
        py::arg("k"), py::arg("s"), py::arg("precision") = "standard");
  m.def("zeta_jet", [](int kmax, Complex s, const std::string& precision) { return zeta_jet(kmax, s, eval_cfg(precision)); },
        py::arg("kmax"), py::arg("s"), py::arg("precision") = "standard");
  m.def("chi", &chi, py::arg("s"));
  m.def("log_gamma", &log_gamma, py::arg("z"));
  m.def("left_asymptotic", &left_asymptotic, py::arg("k"), py::arg("s"));

  m.def("find_e2", [](int k, Complex a) { return a == 0.0 ? find_e2_zero(k) : find_e2(k, a); }, py::arg("k"),
        py::arg("a"));
  m.def("find_e1", [](int k, Complex a, double t_lo, double t_hi) { return find_e1(k, a, t_lo, t_hi); }, py::arg("k"),
        py::arg("a"), py::arg("t_lo") = 1.0, py::arg("t_hi") = 1000.0);
  m.def("trivial_apoint",
        [](int k, Complex a, int n) {
          const auto tb = trivial_apoint(k, a, n);
          py::dict d = point_dict(*tb.root);
          d["winding"] = tb.winding;
          d["newton_residual"] = tb.newton_residual;
          d["distance"] = tb.distance;
          return d;
        },
        py::arg("k"), py::arg("a"), py::arg("n"));
  m.def("find_trivial_nmin", [](int k, Complex a) { return find_trivial_nmin(k, a); }, py::arg("k"), py::arg("a"));

  m.def("winding", [](int k, Complex a, const Rect& r) { return winding(k, a, r); }, py::arg("k"), py::arg("a"),
        py::arg("rect"));
  m.def("locate",
        [](int k, Complex a, const Rect& r) {
          py::list out;
          for (const auto& p : locate_rect(k, a, r).points) out.append(point_dict(p));
          return out;
        },
        py::arg("k"), py::arg("a"), py::arg("rect"));
  m.def("scan",
        [](int k, Complex a, double t0, double t1, const std::string& precision) {
          std::vector<APoint> pts;
          {
            py::gil_scoped_release release;
            pts = scan_points(k, a, t0, t1, scan_cfg(precision));
          }
          py::list out;
          for (const auto& p : pts) out.append(point_dict(p));
          return out;
        },
        py::arg("k"), py::arg("a"), py::arg("t0"), py::arg("t1"), py::arg("precision") = "standard");

  m.def("alpha", [](int k, Complex a, double x) { return alpha(k, a, x); }, py::arg("k"), py::arg("a"), py::arg("x"));
  m.def("alpha_zero", [](int k, double x) { return alpha_zero(k, x); }, py::arg("k"), py::arg("x"));
  m.def("alpha_oracle",
        [](int k, Complex a, std::int64_t D) {
          std::vector<std::pair<double, Complex>> out;
          for (const auto& [idx, v] : alpha_oracle(k, a, D).entries) out.emplace_back(idx.value(), v);
          return out;
        },
        py::arg("k"), py::arg("a"), py::arg("D"));

  m.def("count_main", &count_main, py::arg("k"), py::arg("a"), py::arg("T"));
  m.def("window_count_main", &window_count_main, py::arg("k"), py::arg("a"), py::arg("T"), py::arg("U"));
  m.def("expsum_main", &expsum_main, py::arg("k"), py::arg("a"), py::arg("x"), py::arg("T"));
  m.def("band_halfwidth", &band_halfwidth, py::arg("T"));
  m.def("beta_sum_main", &beta_sum_main, py::arg("k"), py::arg("a"), py::arg("b"), py::arg("T"), py::arg("U"));

  m.def("census",
        [](int k, Complex a, double T, double U, const std::vector<std::pair<double, double>>& rho) {
          std::vector<APoint> pts;
          for (const auto& [b, g] : rho) {
            APoint p;
            p.k = k;
            p.a = a;
            p.beta = b;
            p.gamma = g;
            pts.push_back(p);
          }
          const auto r = census(k, a, T, U, pts);
          py::dict d;
          d["n1"] = r.n1;
          d["n2"] = r.n2;
          d["n3"] = r.n3;
          d["total"] = r.total;
          d["halfwidth"] = r.halfwidth;
          d["main_total"] = r.main_total;
          d["remainder_ratio"] = r.remainder_ratio;
          d["beta_excess"] = r.beta_excess;
          return d;
        },
        py::arg("k"), py::arg("a"), py::arg("T"), py::arg("U"), py::arg("rho"));

  m.def("selftest",
        [](std::vector<int> only, const std::string& workdir) {
          AcceptanceOptions opt;
          opt.only = std::move(only);
          opt.workdir = workdir;
          std::vector<CriterionResult> res;
          {
            py::gil_scoped_release release;
            res = run_acceptance(opt);
          }
          py::list out;
          for (const auto& r : res) out.append(py::make_tuple(r.id, r.name, r.pass, r.detail));
          return out;
        },
        py::arg("only") = std::vector<int>{}, py::arg("workdir") = "");
}
