#pragma once

// Root-free half-planes and the roots near the negative real axis.

#include <optional>
#include <vector>

#include "zap/evaluator.hpp"
#include "zap/types.hpp"

namespace zap {

struct RegionBounds {
  int k = 1;
  Complex a{};
  double e1 = -1;         // no roots for sigma <= e1, t in [t_lo, t_hi] (grid-empirical)
  double e2 = 2;          // no roots for sigma >= e2 (majorant certified)
  double e1_strict = -1;  // |a / zeta^(k)| < 1 for sigma <= e1_strict
  double e2_strict = 2;   // Re(1 - zeta^(k)/a) > 0 for sigma >= e2_strict
  double e1_witness = 0;  // min |zeta^(k)| found on the e1 grid
  double t_lo = 1, t_hi = 1;
};

/// Smallest half-integer sigma > 1 with sum_{n>=2} (log n)^k n^-sigma < |a|.
/// Requires a != 0.
double find_e2(int k, Complex a);

/// Root-free abscissa for a = 0: smallest half-integer sigma > 1 with
/// sum_{n>=3} (log n)^k (2/n)^sigma < (log 2)^k.
double find_e2_zero(int k);

/// Largest half-integer sigma* <= -1 with |zeta^(k)| > max(2|a|, 1) on the
/// t-grid (step 0.1) over [t_lo, t_hi] for sigma = sigma*, and on every lower
/// half-integer line at the grid points where |1 - s| < 19.
double find_e1(int k, Complex a, double t_lo = 1, double t_hi = 1000, double* witness = nullptr,
               const EvalConfig& cfg = {});

RegionBounds region_bounds(int k, Complex a, double t_lo, double t_hi, const EvalConfig& cfg = {});

struct TrivialBox {
  int n = 0;
  Rect box;                 // C_n shrunk by 1e-3
  int winding = 0;
  std::optional<APoint> root;
  double newton_residual = 0;  // evaluated in extended precision at the refined root
  double distance = 0;         // |rho + 2n|, extended precision
  int n_min = 0;
};

/// Root of zeta^(k)(s) = a inside C_n = (-2n-1, -2n+1) x (-1, 1).
/// Throws WindingNotOne or NewtonDiverged.
TrivialBox trivial_apoint(int k, Complex a, int n, const EvalConfig& cfg = {});

/// Winding number of zeta^(k) - a around the shrunk box C_n.
int trivial_winding(int k, Complex a, int n, const EvalConfig& cfg = {});

/// Smallest n such that every m in [n, 30] has winding 1 (downward search from
/// 30; searches upward when n = 30 itself fails).
int find_trivial_nmin(int k, Complex a, const EvalConfig& cfg = {});

}  // namespace zap
