#pragma once

#include <complex>
#include <cstdint>

namespace zap {

using Complex = std::complex<double>;

/// Axis-aligned rectangle [sigma_lo, sigma_hi] x [t_lo, t_hi].
struct Rect {
  double sigma_lo = 0, sigma_hi = 0, t_lo = 0, t_hi = 0;

  double width() const { return sigma_hi - sigma_lo; }
  double height() const { return t_hi - t_lo; }
  Complex center() const { return {0.5 * (sigma_lo + sigma_hi), 0.5 * (t_lo + t_hi)}; }
  bool contains(Complex s) const {
    return s.real() > sigma_lo && s.real() < sigma_hi && s.imag() > t_lo && s.imag() < t_hi;
  }
};

/// A located root of zeta^(k)(s) = a.
struct APoint {
  int k = 1;
  Complex a{};
  double beta = 0, gamma = 0;
  double residual = 0;     // |zeta^(k)(rho) - a| after refinement
  Rect box;                // certification box (winding = multiplicity)
  std::int64_t window_id = -1;
  int multiplicity = 1;    // > 1 only for unresolved clusters at maximum depth

  Complex rho() const { return {beta, gamma}; }
};

}  // namespace zap
