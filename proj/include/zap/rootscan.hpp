#pragma once

// Argument-principle root isolation for zeta^(k)(s) = a.

#include <cstdint>
#include <functional>
#include <numbers>
#include <string>
#include <unordered_map>
#include <vector>

#include "zap/evaluator.hpp"
#include "zap/types.hpp"

namespace zap {

struct ScanConfig {
  EvalConfig eval;
  int max_depth = 40;                          // subdivision levels per window
  int max_segment_depth = 48;                  // bisection levels per boundary segment
  double phase_step_cap = std::numbers::pi / 3;
  double log_step_cap = 0.75;                  // segment length * max|f'/f|
  double boundary_eps = 1e-10;                 // |f| below this on the contour -> BoundaryRoot
  double boundary_dist = 1e-9;                 // |f/f'| below this on the contour -> BoundaryRoot
  double cert_halfwidth = 2.5e-4;              // certification box half-width
  double newton_tol = 1e-11;
  int newton_max_iter = 50;
  double residual_cap = 1e-9;

  void validate() const;
};

struct ScanWindow {
  double t_lo = 1, t_hi = 1;
  double sigma_lo = -1, sigma_hi = 2;
  int max_depth = 40;
  double phase_step_cap = std::numbers::pi / 3;

  Rect rect() const { return {sigma_lo, sigma_hi, t_lo, t_hi}; }
};

/// A cluster that could not be separated at maximum depth.
struct UnresolvedBox {
  Rect box;
  int winding = 0;
};

struct LocateResult {
  std::vector<APoint> points;           // sorted by (gamma, beta)
  std::vector<UnresolvedBox> unresolved;  // also present in points as multiplicity records
  int total_winding = 0;
  std::int64_t evaluations = 0;
};

/// Stateful evaluator of f = zeta^(k) - a with a per-instance sample cache.
/// One Scanner per worker; it is not thread-safe.
class Scanner {
 public:
  Scanner(int k, Complex a, ScanConfig cfg = {});

  int k() const { return k_; }
  Complex a() const { return a_; }
  const ScanConfig& config() const { return cfg_; }

  /// Winding number of f around the boundary of `r`.
  int winding(const Rect& r);

  /// All roots inside `r`, certified and refined.
  LocateResult locate(const Rect& r);

  /// f and f' at s (uncached).
  void eval_direct(Complex s, Complex& f, Complex& df) const;

  std::int64_t evaluations() const { return evaluations_; }
  void clear_cache() { cache_.clear(); }

 private:
  struct Sample {
    Complex f, df;
  };
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const noexcept {
      return std::hash<std::uint64_t>()(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
    }
  };

  const Sample& sample(Complex s);
  double segment_phase(Complex p, Complex q, int depth);
  double edge_phase(Complex p, Complex q);
  int winding_checked(const Rect& r);
  bool newton(const Rect& box, Complex& root, double& residual) const;
  void isolate(const Rect& box, int w, int depth, LocateResult& out);
  bool certify(Complex root, double residual, LocateResult& out);

  int k_;
  Complex a_;
  ScanConfig cfg_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Sample, KeyHash> cache_;
  std::int64_t evaluations_ = 0;
};

int winding(int k, Complex a, const Rect& rect, const ScanConfig& cfg = {});

/// Roots in the window; retries with slightly perturbed outer edges when a root
/// lies on the boundary. Throws MultiplicityUnresolved only via the result's
/// `unresolved` list, never as an exception.
LocateResult locate(int k, Complex a, const ScanWindow& window, const ScanConfig& cfg = {});

/// Rectangle-level variant with the same perturbation logic (any sign of t).
LocateResult locate_rect(int k, Complex a, const Rect& rect, const ScanConfig& cfg = {});

struct StripReport {
  double T = 0;
  int count = 0;        // N_k(a; 1, T+1) - N_k(a; 1, T)
  double ratio = 0;     // count / log T
};

StripReport strip_count_check(int k, Complex a, double T, const ScanConfig& cfg = {});

/// zeta^(k+1)(s)/(zeta^(k)(s) - a) - sum over roots with |gamma - t| < 1 of 1/(s - rho).
Complex local_expansion_residual(int k, Complex a, Complex s, const ScanConfig& cfg = {});

/// Same, with caller-supplied roots (those with |gamma - t| >= 1 are ignored).
Complex local_expansion_residual(int k, Complex a, Complex s, const std::vector<APoint>& roots,
                                 const ScanConfig& cfg = {});

/// Search rectangle for heights [t_lo, t_hi]: sigma from the per-range left
/// abscissa e1 to e2 + 1/4.
Rect search_rect(int k, Complex a, double t_lo, double t_hi, const EvalConfig& cfg = {});

/// Sort by gamma, then beta.
void sort_points(std::vector<APoint>& pts);

}  // namespace zap
