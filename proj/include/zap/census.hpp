#pragma once

// Statistics over located a-points compared against the main terms.

#include <vector>

#include "zap/asymptotics.hpp"
#include "zap/evaluator.hpp"
#include "zap/types.hpp"

namespace zap {

struct CensusReport {
  int k = 1;
  Complex a{};
  double T = 0, U = 0;
  int n1 = 0;  // beta > 1/2 + h
  int n2 = 0;  // beta < 1/2 - h
  int n3 = 0;  // 1/2 - h <= beta <= 1/2 + h
  int total = 0;
  double halfwidth = 0;
  double main_total = 0;       // window_count_main(T, U)
  double remainder_ratio = 0;  // |total - main_total| / log T
  double beta_excess = 0;      // 2 pi sum_{beta > 1/2} (beta - 1/2)
  std::vector<APoint> boundary;  // points within 1e-12 of a band edge
};

/// Points with T < gamma < T + U are classified; others are ignored.
CensusReport census(int k, Complex a, double T, double U, const std::vector<APoint>& points);

/// 2 pi sum over T < gamma < T+U, beta > 1/2 of (beta - 1/2).
double beta_excess(const std::vector<APoint>& points, double T, double U);

struct ExpSumReport {
  int k = 1;
  Complex a{};
  double x = 0, T = 0;
  Complex observed{};   // sum over 1 < gamma < T of x^rho
  Complex predicted{};
  double remainder_ratio = 0;  // |observed - predicted| / log T
  int used = 0;
};

ExpSumReport expsum(int k, Complex a, double x, double T, const std::vector<APoint>& points);

struct QuadratureConfig {
  double abs_tol = 1e-7;       // per unit length
  int max_depth = 40;
  double near_root = 1e-6;     // |a - zeta^(k)| at a root's height below this -> excise
  double excise_width = 1e-4;
};

/// Integral of log|a - zeta^(k)(1/2 + it)| over [t0, t1] by adaptive
/// Gauss-Kronrod 7-15, split at the heights of the supplied roots and with
/// on-line roots excised and integrated in closed form.
double log_modulus_integral(int k, Complex a, double t0, double t1, const std::vector<APoint>& roots,
                            const EvalConfig& cfg = {}, const QuadratureConfig& q = {});

/// observed = 2 pi sum_{beta > 1/2} (beta - 1/2); predicted = integral - U log|a|;
/// normalizer log T.
MainTermReport littlewood_balance(int k, Complex a, double T, double U, const std::vector<APoint>& points,
                                  const EvalConfig& cfg = {}, const QuadratureConfig& q = {});

/// observed = sum (beta + b) over T < gamma < T+U; predicted = beta_sum_main;
/// normalizer U / log T.
MainTermReport beta_sum_check(int k, Complex a, double b, double T, double U, const std::vector<APoint>& points);

}  // namespace zap
