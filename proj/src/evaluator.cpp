#include "zap/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>

#include "zap/detail/zeta_kernel.hpp"

namespace zap {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_pole(Complex s) {
  if (std::abs(s - 1.0) < 10 * kEps) throw Error(ErrorCode::PoleAtOne, "zeta has a pole at s = 1");
}

void check_jet_order(int kmax) {
  if (kmax < 0 || kmax >= detail::kMaxJet)
    throw Error(ErrorCode::InvalidArgument,
                "derivative order must lie in [0, " + std::to_string(detail::kMaxJet - 1) + "]");
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

void EvalConfig::validate() const {
  if (em_terms < 1) throw Error(ErrorCode::InvalidArgument, "em_terms must be positive");
  if (!(circle_radius >= 0) || !std::isfinite(circle_radius))
    throw Error(ErrorCode::InvalidArgument, "circle_radius must be positive (0 = automatic)");
  if (circle_nodes < 16 || !is_power_of_two(circle_nodes))
    throw Error(ErrorCode::InvalidArgument, "circle_nodes must be a power of two >= 16");
  if (!(target_rel_err > 0)) throw Error(ErrorCode::InvalidArgument, "target_rel_err must be positive");
}

EvalConfig config_from_env() {
  EvalConfig cfg;
  if (const char* v = std::getenv("ZAP_PRECISION")) {
    const std::string mode(v);
    if (mode == "standard" || mode.empty())
      cfg.precision_mode = PrecisionMode::standard;
    else if (mode == "compensated")
      cfg.precision_mode = PrecisionMode::compensated;
    else
      throw Error(ErrorCode::InvalidArgument, "ZAP_PRECISION must be standard or compensated, got " + mode);
  }
  return cfg;
}

void zeta_jet_into(int kmax, Complex s, PrecisionMode mode, int em_terms, Complex* out, double* diag) {
  const double d = detail::zeta_jet_generic<double, Complex>(s, kmax, em_terms,
                                                             mode == PrecisionMode::compensated, out);
  if (diag) *diag = d;
}

std::vector<Complex> zeta_jet(int kmax, Complex s, const EvalConfig& cfg) {
  cfg.validate();
  check_jet_order(kmax);
  check_pole(s);
  std::vector<Complex> out(kmax + 1);
  double diag = 0;
  zeta_jet_into(kmax, s, cfg.precision_mode, cfg.em_terms, out.data(), &diag);
  if (diag > cfg.target_rel_err)
    throw Error(ErrorCode::PrecisionLoss, "Euler-Maclaurin corrections did not converge");
  for (const Complex& v : out)
    if (!finite(v)) throw Error(ErrorCode::PrecisionLoss, "overflow in zeta jet");
  return out;
}

Complex zeta(Complex s, const EvalConfig& cfg) { return zeta_jet(0, s, cfg)[0]; }

Complex log_gamma(Complex z) {
  if (z.imag() == 0 && z.real() <= 0 && z.real() == std::floor(z.real()))
    throw Error(ErrorCode::InvalidArgument, "log_gamma has a pole at non-positive integers");
  Complex out[1];
  detail::loggamma_jet<double, Complex>(z, 0, out);
  return out[0];
}

Complex chi(Complex s) {
  // chi(s) chi(1-s) = 1; evaluate on the side where Gamma(1-s) has no poles.
  if (s.real() > 0.5) return 1.0 / chi(1.0 - s);
  const auto& c = detail::constants<double>();
  const Complex w = s * c.half_pi;
  const Complex lg = log_gamma(1.0 - s);
  const Complex log_a = s * c.log_2pi - c.log_pi + lg;
  if (std::abs(w.imag()) < 30) return std::exp(log_a) * std::sin(w);
  return std::exp(log_a + detail::log_sin<double, Complex>(w));
}

Complex zeta_deriv(int k, Complex s, const EvalConfig& cfg) {
  cfg.validate();
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "derivative order must be non-negative");
  check_pole(s);
  const double dist = std::abs(s - 1.0);
  const double r = cfg.circle_radius > 0 ? cfg.circle_radius : std::min(0.5, dist / 2);
  if (dist <= r) throw Error(ErrorCode::CircleHitsPole, "Cauchy circle encloses s = 1");

  // Integrate the entire function zeta(z) - 1/(z-1) and restore the pole part.
  auto g = [&](Complex z) {
    Complex v[1];
    zeta_jet_into(0, z, cfg.precision_mode, cfg.em_terms, v);
    return v[0] - 1.0 / (z - 1.0);
  };

  double kfact = 1;
  for (int i = 2; i <= k; ++i) kfact *= i;
  const double scale = kfact / std::pow(r, k);

  constexpr int kMaxNodes = 8192;
  int q = cfg.circle_nodes;
  Complex acc = 0;  // sum of g(z_j) e^{-i k theta_j}
  double gmax = 0;
  auto add_nodes = [&](int count, int stride, int offset) {
    for (int j = offset; j < count; j += stride) {
      const double theta = 2 * std::numbers::pi * j / count;
      const Complex e = std::polar(1.0, theta);
      const Complex v = g(s + r * e);
      if (!finite(v)) throw Error(ErrorCode::PrecisionLoss, "overflow on Cauchy circle");
      gmax = std::max(gmax, std::abs(v));
      acc += v * std::polar(1.0, -k * theta);
    }
  };
  add_nodes(q, 1, 0);
  Complex prev = scale * acc / double(q);
  Complex cur = prev;
  bool converged = false;
  while (q < kMaxNodes) {
    add_nodes(2 * q, 2, 1);
    q *= 2;
    cur = scale * acc / double(q);
    const double floor = 1e-3 * scale * gmax;
    if (std::abs(cur - prev) <= cfg.target_rel_err * std::max(std::abs(cur), floor)) {
      converged = true;
      break;
    }
    prev = cur;
  }
  if (!converged) throw Error(ErrorCode::PrecisionLoss, "node doubling did not converge");

  const Complex pole = (k % 2 ? -kfact : kfact) / std::pow(s - 1.0, k + 1);
  Complex result = cur + pole;

  if (s.real() >= 2 && k < detail::kMaxJet) {
    std::vector<Complex> series(k + 1);
    zeta_jet_into(k, s, cfg.precision_mode, cfg.em_terms, series.data());
    const double tol = std::max(1e-6, 1e3 * cfg.target_rel_err) * std::max(std::abs(series[k]), 1e-3 * scale * gmax);
    if (std::abs(series[k] - result) > tol)
      throw Error(ErrorCode::PrecisionLoss, "Cauchy value disagrees with the Dirichlet series");
    result = series[k];
  }
  if (!finite(result)) throw Error(ErrorCode::PrecisionLoss, "overflow in zeta derivative");
  return result;
}

Complex left_asymptotic(int k, Complex s) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (!(s.real() > 1.1) || std::abs(s.imag()) < 1)
    throw Error(ErrorCode::OutOfRegion, "left_asymptotic needs Re s > 1.1 and |Im s| >= 1");
  const auto& c = detail::constants<double>();
  const Complex w = s * c.half_pi + c.half_pi;  // cos(pi s/2) = sin(pi s/2 + pi/2)
  Complex log_main = std::log(2.0) - s * c.log_2pi + log_gamma(s) + double(k) * std::log(std::log(s)) +
                     detail::log_sin<double, Complex>(w) + std::log(zeta(s));
  Complex v = std::exp(log_main);
  if (k % 2) v = -v;
  if (!finite(v)) throw Error(ErrorCode::PrecisionLoss, "overflow in main term");
  return v;
}

double GrowthEnvelope::mu_bar(double sigma) {
  if (sigma >= 1) return 0;
  if (sigma > 0) return 0.5 - sigma / 2;
  return 0.5 - sigma;
}

double GrowthEnvelope::bound(double sigma, double t) const {
  return std::pow(std::abs(t), exponent(sigma));
}

}  // namespace zap
