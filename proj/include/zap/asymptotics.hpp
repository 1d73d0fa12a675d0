#pragma once

// Closed-form main terms for counts and sums over a-points.

#include "zap/types.hpp"

namespace zap {

struct MainTermReport {
  double observed = 0;
  double predicted = 0;
  double remainder = 0;   // observed - predicted
  double normalizer = 1;
  double ratio = 0;       // |remainder| / normalizer
};

MainTermReport make_report(double observed, double predicted, double normalizer);

/// (T/2pi) log(T/2pi) - T/2pi for a != 0, (T/2pi) log(T/4pi) - T/2pi for a = 0.
double count_main(int k, Complex a, double T);

/// count_main(T + U) - count_main(T).
double window_count_main(int k, Complex a, double T, double U);

/// Same quantity written as (T+U)/2pi log((T+U)/c) - T/2pi log(T/c) - U/2pi.
double window_count_main_expanded(int k, Complex a, double T, double U);

/// (T/2pi) alpha(x): zero for non-integer x when a != 0, zero for non-dyadic x when a = 0.
Complex expsum_main(int k, Complex a, double x, double T);

/// (log log T)^2 / log T; DomainTooSmall for T <= e^e.
double band_halfwidth(double T);

/// Predicted sum over T < gamma < T+U of (beta + b), i.e. the main term
/// divided by 2 pi. Handles a = 0 with its own constant block.
double beta_sum_main(int k, Complex a, double b, double T, double U);

}  // namespace zap
