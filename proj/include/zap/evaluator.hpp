#pragma once

// Evaluation of zeta, chi, log-gamma and the derivatives zeta^(k) in the whole
// complex plane.
//
// Two independent routes to zeta^(k) are provided:
//   * zeta_deriv  -- trapezoidal Cauchy integral on a circle around s;
//   * zeta_jet    -- analytic jet: differentiated Euler-Maclaurin for
//                    Re s >= 1/2, reflection with Leibniz expansion below.
// The jet is the fast kernel used by the root scanner; the two routes are
// cross-checked in the tests.

#include <complex>
#include <vector>

#include "zap/errors.hpp"
#include "zap/types.hpp"

namespace zap {

enum class PrecisionMode { standard, compensated };

struct EvalConfig {
  PrecisionMode precision_mode = PrecisionMode::standard;
  int em_terms = 12;            // minimum number of Bernoulli corrections
  double circle_radius = 0.0;   // 0 selects min(0.5, |s-1|/2)
  int circle_nodes = 32;        // power of two, >= 16
  double target_rel_err = 1e-12;

  /// Throws InvalidArgument when a field is out of its documented range.
  void validate() const;
};

/// Reads ZAP_PRECISION (standard|compensated) into a default config.
EvalConfig config_from_env();

Complex zeta(Complex s, const EvalConfig& cfg = {});

/// chi(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s), so zeta(s) = chi(s) zeta(1-s).
Complex chi(Complex s);

/// Principal log-gamma via Stirling's series with upward argument shift.
Complex log_gamma(Complex z);

/// zeta^(k)(s) by Cauchy's integral formula. For Re s >= 2 the value is
/// cross-checked against the differentiated Dirichlet series and the series
/// value is returned.
Complex zeta_deriv(int k, Complex s, const EvalConfig& cfg = {});

/// zeta^(0..kmax)(s) from the analytic jet.
std::vector<Complex> zeta_jet(int kmax, Complex s, const EvalConfig& cfg = {});

/// Jet without error checks on the convergence diagnostic; used in hot loops.
/// `diag` receives the relative size of the last Euler-Maclaurin correction.
void zeta_jet_into(int kmax, Complex s, PrecisionMode mode, int em_terms, Complex* out,
                   double* diag = nullptr);

/// Main term of zeta^(k)(1-s) for Re s > 1, |Im s| >= 1:
/// (-1)^k 2 (2 pi)^(-s) Gamma(s) (log s)^k cos(pi s/2) zeta(s).
Complex left_asymptotic(int k, Complex s);

/// Piecewise convexity bound for the growth exponent of zeta^(k)(sigma+it).
struct GrowthEnvelope {
  double slack = 0.1;

  /// 0 for sigma >= 1, 1/2 - sigma/2 on (0, 1), 1/2 - sigma for sigma <= 0.
  static double mu_bar(double sigma);
  double exponent(double sigma) const { return mu_bar(sigma) + slack; }
  /// |t|^(mu_bar(sigma) + slack)
  double bound(double sigma, double t) const;
};

}  // namespace zap
