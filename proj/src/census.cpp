#include "zap/census.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "zap/detail/zeta_kernel.hpp"
#include "zap/errors.hpp"

namespace zap {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

bool in_window(const APoint& p, double T, double U) { return p.gamma > T && p.gamma < T + U; }

struct Panel {
  double value = 0, error = 0;
};

template <class F>
Panel gk15(const F& f, double a, double b) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  using G = boost::math::quadrature::gauss<double, 7>;
  const auto& x = GK::abscissa();
  const auto& wk = GK::weights();
  const auto& wg = G::weights();
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double f0 = f(c);
  double kron = wk[0] * f0, gauss = wg[0] * f0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double s = f(c - h * x[i]) + f(c + h * x[i]);
    kron += wk[i] * s;
    if (i % 2 == 0) gauss += wg[i / 2] * s;
  }
  return {kron * h, std::abs(kron - gauss) * h};
}

template <class F>
double adapt(const F& f, double a, double b, double tol_per_len, int depth, int max_depth) {
  const Panel p = gk15(f, a, b);
  if (p.error <= tol_per_len * (b - a) || b - a < 1e-13 * std::max(1.0, std::abs(a))) return p.value;
  if (depth >= max_depth) throw Error(ErrorCode::QuadratureStall, "adaptive refinement exceeded the depth limit");
  const double m = 0.5 * (a + b);
  return adapt(f, a, m, tol_per_len, depth + 1, max_depth) + adapt(f, m, b, tol_per_len, depth + 1, max_depth);
}

// int_{-h}^{h} log sqrt(d^2 + u^2) du
double log_dist_integral(double d, double h) {
  const double ad = std::abs(d);
  const double r = 0.5 * std::log(ad * ad + h * h);
  const double at = ad > 0 ? ad * std::atan(h / ad) : 0.0;
  return 2 * (h * r - h + at);
}

}  // namespace

double beta_excess(const std::vector<APoint>& points, double T, double U) {
  double s = 0;
  for (const auto& p : points)
    if (in_window(p, T, U) && p.beta > 0.5) s += p.multiplicity * (p.beta - 0.5);
  return kTwoPi * s;
}

CensusReport census(int k, Complex a, double T, double U, const std::vector<APoint>& points) {
  CensusReport r;
  r.k = k;
  r.a = a;
  r.T = T;
  r.U = U;
  r.halfwidth = band_halfwidth(T);
  r.main_total = window_count_main(k, a, T, U);
  const double lo = 0.5 - r.halfwidth, hi = 0.5 + r.halfwidth;
  constexpr double kEdge = 1e-12;
  for (const auto& p : points) {
    if (!in_window(p, T, U)) continue;
    const int m = p.multiplicity;
    if (std::abs(p.beta - lo) <= kEdge || std::abs(p.beta - hi) <= kEdge) {
      r.n3 += m;
      r.boundary.push_back(p);
    } else if (p.beta > hi) {
      r.n1 += m;
    } else if (p.beta < lo) {
      r.n2 += m;
    } else {
      r.n3 += m;
    }
    r.total += m;
  }
  r.remainder_ratio = std::abs(r.total - r.main_total) / std::log(T);
  r.beta_excess = beta_excess(points, T, U);
  return r;
}

ExpSumReport expsum(int k, Complex a, double x, double T, const std::vector<APoint>& points) {
  ExpSumReport r;
  r.k = k;
  r.a = a;
  r.x = x;
  r.T = T;
  r.predicted = expsum_main(k, a, x, T);
  const double lx = std::log(x);
  for (const auto& p : points) {
    if (!(p.gamma > 1 && p.gamma < T)) continue;
    r.observed += double(p.multiplicity) * std::exp(Complex(p.beta * lx, p.gamma * lx));
    r.used += p.multiplicity;
  }
  r.remainder_ratio = std::abs(r.observed - r.predicted) / std::log(T);
  return r;
}

double log_modulus_integral(int k, Complex a, double t0, double t1, const std::vector<APoint>& roots,
                            const EvalConfig& cfg, const QuadratureConfig& q) {
  if (!(t1 >= t0)) throw Error(ErrorCode::InvalidArgument, "integration range reversed");
  if (t1 == t0) return 0;
  cfg.validate();
  auto f = [&](double t) {
    Complex jet[detail::kMaxJet];
    zeta_jet_into(k, {0.5, t}, cfg.precision_mode, cfg.em_terms, jet);
    return std::log(std::abs(a - jet[k]));
  };

  struct Cut {
    double lo, hi, analytic;
  };
  std::vector<double> breaks{t0, t1};
  std::vector<Cut> cuts;
  const double h = 0.5 * q.excise_width;
  for (const auto& p : roots) {
    if (!(p.gamma > t0 && p.gamma < t1)) continue;
    Complex jet[detail::kMaxJet];
    zeta_jet_into(k + 1, {0.5, p.gamma}, cfg.precision_mode, cfg.em_terms, jet);
    if (std::abs(a - jet[k]) < q.near_root && p.gamma - h > t0 && p.gamma + h < t1) {
      // a - zeta^(k)(1/2 + it) ~ -zeta^(k+1)(rho) (1/2 + it - rho)
      Complex d[detail::kMaxJet];
      zeta_jet_into(k + 1, p.rho(), cfg.precision_mode, cfg.em_terms, d);
      const double analytic = 2 * h * std::log(std::abs(d[k + 1])) + log_dist_integral(0.5 - p.beta, h);
      cuts.push_back({p.gamma - h, p.gamma + h, p.multiplicity * analytic});
      breaks.push_back(p.gamma - h);
      breaks.push_back(p.gamma + h);
    } else {
      breaks.push_back(p.gamma);
    }
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  double total = 0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double lo = breaks[i], hi = breaks[i + 1];
    const double mid = 0.5 * (lo + hi);
    const auto cut = std::find_if(cuts.begin(), cuts.end(), [&](const Cut& c) { return mid > c.lo && mid < c.hi; });
    if (cut != cuts.end()) {
      total += cut->analytic * (hi - lo) / (cut->hi - cut->lo);
      continue;
    }
    total += adapt(f, lo, hi, q.abs_tol, 0, q.max_depth);
  }
  return total;
}

MainTermReport littlewood_balance(int k, Complex a, double T, double U, const std::vector<APoint>& points,
                                  const EvalConfig& cfg, const QuadratureConfig& q) {
  if (a == 0.0) throw Error(ErrorCode::InvalidArgument, "littlewood balance needs a != 0");
  const double observed = beta_excess(points, T, U);
  const double integral = log_modulus_integral(k, a, T, T + U, points, cfg, q);
  const double predicted = integral - U * std::log(std::abs(a));
  return make_report(observed, predicted, std::log(T));
}

MainTermReport beta_sum_check(int k, Complex a, double b, double T, double U, const std::vector<APoint>& points) {
  double observed = 0;
  for (const auto& p : points)
    if (in_window(p, T, U)) observed += p.multiplicity * (p.beta + b);
  const double predicted = beta_sum_main(k, a, b, T, U);
  return make_report(observed, predicted, U > 0 ? U / std::log(T) : 1.0);
}

}  // namespace zap
