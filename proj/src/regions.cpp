#include "zap/regions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

#include <boost/math/special_functions/gamma.hpp>

#include "zap/detail/mp.hpp"
#include "zap/detail/zeta_kernel.hpp"
#include "zap/rootscan.hpp"

namespace zap {

namespace {

constexpr long kMajorantTerms = 100000;

// sum_{n >= n0} (log n)^k n^-sigma * weight, with the tail past kMajorantTerms
// bounded by the integral (the summand decreases there).
double majorant(int k, double sigma, long n0) {
  double sum = 0;
  for (long n = n0; n <= kMajorantTerms; ++n) {
    const double ln = std::log(double(n));
    sum += std::pow(ln, k) * std::exp(-sigma * ln);
  }
  // int_N^inf (log x)^k x^-sigma dx = Gamma(k+1, (sigma-1) log N) / (sigma-1)^(k+1)
  const double u = (sigma - 1) * std::log(double(kMajorantTerms));
  const double tail = boost::math::tgamma(double(k + 1), u) / std::pow(sigma - 1, k + 1);
  return sum + tail;
}

std::mutex g_e2_mutex;
std::map<std::tuple<int, double, bool>, double> g_e2_cache;

double cached_e2(int k, double level, bool zero_branch) {
  const auto key = std::make_tuple(k, level, zero_branch);
  {
    std::lock_guard<std::mutex> lock(g_e2_mutex);
    auto it = g_e2_cache.find(key);
    if (it != g_e2_cache.end()) return it->second;
  }
  double sigma = 1.5;
  for (;; sigma += 0.5) {
    if (zero_branch) {
      // sum_{n>=3} (log n)^k (2/n)^sigma < (log 2)^k
      if (std::pow(2.0, sigma) * majorant(k, sigma, 3) < std::pow(std::log(2.0), k)) break;
    } else if (majorant(k, sigma, 2) < level) {
      break;
    }
  }
  std::lock_guard<std::mutex> lock(g_e2_mutex);
  g_e2_cache[key] = sigma;
  return sigma;
}

Complex zeta_k(int k, Complex s, const EvalConfig& cfg) {
  Complex jet[detail::kMaxJet];
  zeta_jet_into(k, s, cfg.precision_mode, cfg.em_terms, jet);
  return jet[k];
}

Rect trivial_rect(int n) {
  constexpr double kShrink = 1e-3;
  return {-2.0 * n - 1 + kShrink, -2.0 * n + 1 - kShrink, -1 + kShrink, 1 - kShrink};
}

}  // namespace

double find_e2(int k, Complex a) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (a == 0.0) throw Error(ErrorCode::InvalidArgument, "find_e2 needs a != 0; use find_e2_zero");
  return cached_e2(k, std::abs(a), false);
}

double find_e2_zero(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  return cached_e2(k, 0.0, true);
}

double find_e1(int k, Complex a, double t_lo, double t_hi, double* witness, const EvalConfig& cfg) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (!(t_hi >= t_lo)) throw Error(ErrorCode::InvalidArgument, "find_e1 needs t_hi >= t_lo");
  const double thr = std::max(2 * std::abs(a), 1.0);
  const long steps = static_cast<long>(std::ceil((t_hi - t_lo) / 0.1 - 1e-9));
  auto grid_t = [&](long i) { return i == steps ? t_hi : t_lo + 0.1 * double(i); };
  constexpr double kMonotoneRadius = 19;  // beyond 2 pi e the main term grows leftwards
  constexpr double kFloor = -400;

  double sigma = -1;
  while (sigma > kFloor) {
    // full line at sigma
    double wmin = INFINITY;
    bool ok = true;
    for (long i = 0; i <= steps && ok; ++i) {
      const double v = std::abs(zeta_k(k, {sigma, grid_t(i)}, cfg));
      wmin = std::min(wmin, v);
      ok = v > thr;
    }
    if (!ok) {
      sigma -= 0.5;
      continue;
    }
    // lower lines, only where |1 - s| < 19
    double fail = 0;
    for (double s2 = sigma - 0.5; 1 - s2 < kMonotoneRadius && fail == 0; s2 -= 0.5) {
      for (long i = 0; i <= steps; ++i) {
        const double t = grid_t(i);
        if (std::abs(Complex(1 - s2, -t)) >= kMonotoneRadius) continue;
        if (!(std::abs(zeta_k(k, {s2, t}, cfg)) > thr)) {
          fail = s2;
          break;
        }
      }
    }
    if (fail == 0) {
      if (witness) *witness = wmin;
      return sigma;
    }
    sigma = fail - 0.5;
  }
  throw Error(ErrorCode::Unresolved, "no left root-free abscissa found");
}

RegionBounds region_bounds(int k, Complex a, double t_lo, double t_hi, const EvalConfig& cfg) {
  RegionBounds rb;
  rb.k = k;
  rb.a = a;
  rb.t_lo = t_lo;
  rb.t_hi = t_hi;
  rb.e2 = a == 0.0 ? find_e2_zero(k) : find_e2(k, a);
  const double lo = std::min(std::abs(t_lo), std::abs(t_hi));
  const double hi = std::max(std::abs(t_lo), std::abs(t_hi));
  // |zeta^(k)| is symmetric under t -> -t, so the grid runs over |t|
  const bool straddles = t_lo < 0 && t_hi > 0;
  rb.e1 = find_e1(k, a, straddles ? 0.0 : lo, hi, &rb.e1_witness, cfg);
  // |zeta^(k)| > 2|a| gives |a/zeta^(k)| < 1, and |zeta^(k)| < |a| gives Re(1 - zeta^(k)/a) > 0
  rb.e1_strict = rb.e1;
  rb.e2_strict = rb.e2;
  return rb;
}

int trivial_winding(int k, Complex a, int n, const EvalConfig& cfg) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  ScanConfig sc;
  sc.eval = cfg;
  Scanner scanner(k, a, sc);
  return scanner.winding(trivial_rect(n));
}

TrivialBox trivial_apoint(int k, Complex a, int n, const EvalConfig& cfg) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "trivial_apoint needs n >= 2");
  TrivialBox tb;
  tb.n = n;
  tb.box = trivial_rect(n);
  ScanConfig sc;
  sc.eval = cfg;
  Scanner scanner(k, a, sc);
  tb.winding = scanner.winding(tb.box);
  if (tb.winding != 1)
    throw Error(ErrorCode::WindingNotOne, "winding " + std::to_string(tb.winding) + " in C_" + std::to_string(n));

  // double-precision Newton from -2n, falling back to subdivision of C_n
  auto newton_from = [&](Complex s) -> std::optional<Complex> {
    for (int it = 0; it < 60; ++it) {
      Complex f, df;
      scanner.eval_direct(s, f, df);
      const Complex step = f / df;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return std::nullopt;
      s -= step;
      if (!tb.box.contains(s)) return std::nullopt;
      if (std::abs(step) < 1e-14 * std::abs(s)) return s;
    }
    return std::nullopt;
  };
  std::optional<Complex> start = newton_from({-2.0 * n, 0.0});
  if (!start) {
    const LocateResult lr = scanner.locate(tb.box);
    if (lr.points.size() != 1 || lr.points[0].multiplicity != 1)
      throw Error(ErrorCode::NewtonDiverged, "Newton iterate left C_n and subdivision did not isolate the root");
    start = lr.points[0].rho();
  }
  const Complex s = *start;

  // extended-precision polish; |zeta^(k)| is huge here, so the residual is
  // only meaningful in the wide format
  using detail::MpComplex;
  using detail::MpReal;
  MpComplex z(MpReal(s.real()), MpReal(s.imag()));
  const MpComplex am(MpReal(a.real()), MpReal(a.imag()));
  MpComplex jet[detail::kMaxJet];
  const MpReal tiny = std::numeric_limits<MpReal>::epsilon() * 1e6;
  for (int it = 0; it < 12; ++it) {
    detail::zeta_jet_generic<MpReal, MpComplex>(z, k + 1, 12, false, jet);
    const MpComplex step = (jet[k] - am) / jet[k + 1];
    z -= step;
    if (abs(step) < tiny * (1 + abs(z))) break;
  }
  detail::zeta_jet_generic<MpReal, MpComplex>(z, k, 12, false, jet);
  tb.newton_residual = static_cast<double>(abs(jet[k] - am));
  tb.distance = static_cast<double>(abs(z + MpReal(2 * n)));

  APoint p;
  p.k = k;
  p.a = a;
  p.beta = static_cast<double>(real(z));
  p.gamma = static_cast<double>(imag(z));
  p.residual = tb.newton_residual;
  p.box = tb.box;
  if (!tb.box.contains(p.rho())) throw Error(ErrorCode::NewtonDiverged, "refined root left C_n");
  if (!(tb.newton_residual <= 1e-9)) throw Error(ErrorCode::NewtonDiverged, "residual above 1e-9");
  tb.root = p;
  return tb;
}

int find_trivial_nmin(int k, Complex a, const EvalConfig& cfg) {
  auto ok = [&](int n) {
    try {
      return trivial_winding(k, a, n, cfg) == 1;
    } catch (const Error&) {
      return false;
    }
  };
  constexpr int kStart = 30;
  if (ok(kStart)) {
    int n = kStart;
    while (n > 2 && ok(n - 1)) --n;
    return n;
  }
  for (int n = kStart + 1; n <= 200; ++n)
    if (ok(n)) return n;
  throw Error(ErrorCode::WindingNotOne, "no n <= 200 with winding 1");
}

}  // namespace zap
