#include "zap/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "zap/coefficients.hpp"
#include "zap/errors.hpp"

namespace zap {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double count_log_scale(Complex a) { return a == 0.0 ? 2 * kTwoPi : kTwoPi; }

}  // namespace

MainTermReport make_report(double observed, double predicted, double normalizer) {
  MainTermReport r;
  r.observed = observed;
  r.predicted = predicted;
  r.remainder = observed - predicted;
  r.normalizer = normalizer;
  r.ratio = std::abs(r.remainder) / normalizer;
  return r;
}

double count_main(int k, Complex a, double T) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (!(T > 0)) throw Error(ErrorCode::InvalidArgument, "T must be positive");
  const double x = T / kTwoPi;
  return x * std::log(T / count_log_scale(a)) - x;
}

double window_count_main(int k, Complex a, double T, double U) {
  if (U == 0) return 0;
  if (!(U > 0)) throw Error(ErrorCode::InvalidArgument, "U must be non-negative");
  return count_main(k, a, T + U) - count_main(k, a, T);
}

double window_count_main_expanded(int k, Complex a, double T, double U) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  const double c = count_log_scale(a);
  return (T + U) / kTwoPi * std::log((T + U) / c) - T / kTwoPi * std::log(T / c) - U / kTwoPi;
}

Complex expsum_main(int k, Complex a, double x, double T) {
  if (!(x > 1)) throw Error(ErrorCode::InvalidArgument, "expsum needs x > 1");
  if (T == 0) return 0.0;
  const Complex coeff = a == 0.0 ? Complex(alpha_zero(k, x)) : alpha(k, a, x);
  return T / kTwoPi * coeff;
}

double band_halfwidth(double T) {
  if (!(T > std::exp(std::numbers::e))) throw Error(ErrorCode::DomainTooSmall, "band needs T > e^e");
  const double ll = std::log(std::log(T));
  return ll * ll / std::log(T);
}

double beta_sum_main(int k, Complex a, double b, double T, double U) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (U == 0) return 0;
  if (!(U > 0) || !(T > std::numbers::e)) throw Error(ErrorCode::InvalidArgument, "needs U > 0, T > e");
  const double S = T + U;
  const double loglog = k * (S * std::log(std::log(S)) - T * std::log(std::log(T)));
  double main;
  if (a != 0.0) {
    main = (0.5 + b) * (S * std::log(S / kTwoPi) - T * std::log(T / kTwoPi) - U) + loglog - U * std::log(std::abs(a));
  } else {
    main = (0.5 + b) * (S * std::log(S / kTwoPi) - T * std::log(T / kTwoPi)) + loglog -
           U * (0.5 + b + b * std::log(2.0) + k * std::log(std::log(2.0)));
  }
  return main / kTwoPi;
}

}  // namespace zap
