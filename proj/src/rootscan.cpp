#include "zap/rootscan.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "zap/detail/zeta_kernel.hpp"
#include "zap/regions.hpp"

namespace zap {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::string fmt_point(Complex s) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g)", s.real(), s.imag());
  return buf;
}

Rect expand(const Rect& r, double d) {
  return {r.sigma_lo - d, r.sigma_hi + d, r.t_lo - d, r.t_hi + d};
}

bool contains_pole(const Rect& r) {
  return r.sigma_lo <= 1 && r.sigma_hi >= 1 && r.t_lo <= 0 && r.t_hi >= 0;
}

}  // namespace

void ScanConfig::validate() const {
  eval.validate();
  if (max_depth < 1 || max_segment_depth < 1)
    throw Error(ErrorCode::InvalidArgument, "depth limits must be positive");
  if (!(phase_step_cap > 0) || phase_step_cap > std::numbers::pi / 2)
    throw Error(ErrorCode::InvalidArgument, "phase_step_cap must lie in (0, pi/2]");
  if (!(log_step_cap > 0) || !(cert_halfwidth > 0) || !(residual_cap > 0))
    throw Error(ErrorCode::InvalidArgument, "scan tolerances must be positive");
}

void sort_points(std::vector<APoint>& pts) {
  std::sort(pts.begin(), pts.end(), [](const APoint& x, const APoint& y) {
    if (x.gamma != y.gamma) return x.gamma < y.gamma;
    return x.beta < y.beta;
  });
}

Scanner::Scanner(int k, Complex a, ScanConfig cfg) : k_(k), a_(a), cfg_(cfg) {
  if (k < 0 || k + 1 >= detail::kMaxJet) throw Error(ErrorCode::InvalidArgument, "unsupported derivative order");
  cfg_.validate();
}

void Scanner::eval_direct(Complex s, Complex& f, Complex& df) const {
  Complex jet[detail::kMaxJet];
  zeta_jet_into(k_ + 1, s, cfg_.eval.precision_mode, cfg_.eval.em_terms, jet);
  f = jet[k_] - a_;
  df = jet[k_ + 1];
}

const Scanner::Sample& Scanner::sample(Complex s) {
  const auto key = std::make_pair(std::bit_cast<std::uint64_t>(s.real()), std::bit_cast<std::uint64_t>(s.imag()));
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  Sample smp;
  eval_direct(s, smp.f, smp.df);
  ++evaluations_;
  if (!finite(smp.f) || !finite(smp.df))
    throw Error(ErrorCode::PrecisionLoss, "non-finite value at " + fmt_point(s));
  return cache_.emplace(key, smp).first->second;
}

double Scanner::segment_phase(Complex p, Complex q, int depth) {
  const Sample& A = sample(p);
  const Sample& B = sample(q);
  for (const auto* x : {&A, &B}) {
    const double af = std::abs(x->f);
    if (af < cfg_.boundary_eps || af < cfg_.boundary_dist * std::abs(x->df))
      throw Error(ErrorCode::BoundaryRoot, "root on contour near " + fmt_point(x == &A ? p : q));
  }
  const double dphi = std::arg(B.f / A.f);
  const double len = std::abs(q - p);
  const double dlog = len * std::max(std::abs(A.df / A.f), std::abs(B.df / B.f));
  if (std::abs(dphi) < cfg_.phase_step_cap && dlog < cfg_.log_step_cap) return dphi;
  if (depth >= cfg_.max_segment_depth)
    throw Error(ErrorCode::Unresolved, "segment bisection limit reached near " + fmt_point(p));
  const Complex m = 0.5 * (p + q);
  return segment_phase(p, m, depth + 1) + segment_phase(m, q, depth + 1);
}

double Scanner::edge_phase(Complex p, Complex q) { return segment_phase(p, q, 0); }

int Scanner::winding_checked(const Rect& r) {
  if (!(r.sigma_hi > r.sigma_lo) || !(r.t_hi > r.t_lo))
    throw Error(ErrorCode::InvalidArgument, "degenerate rectangle");
  if (contains_pole(r)) throw Error(ErrorCode::InvalidArgument, "rectangle encloses the pole at s = 1");
  const Complex c0(r.sigma_lo, r.t_lo), c1(r.sigma_hi, r.t_lo), c2(r.sigma_hi, r.t_hi), c3(r.sigma_lo, r.t_hi);
  const double total = edge_phase(c0, c1) + edge_phase(c1, c2) + edge_phase(c2, c3) + edge_phase(c3, c0);
  const double w = total / kTwoPi;
  const double rw = std::round(w);
  if (std::abs(w - rw) > 0.25) throw Error(ErrorCode::Unresolved, "winding not near an integer");
  return static_cast<int>(rw);
}

int Scanner::winding(const Rect& r) { return winding_checked(r); }

bool Scanner::newton(const Rect& box, Complex& root, double& residual) const {
  const double diam = std::hypot(box.width(), box.height());
  Complex s = box.center();
  Complex f, df;
  bool done = false;
  for (int it = 0; it < cfg_.newton_max_iter; ++it) {
    eval_direct(s, f, df);
    if (!finite(f) || !finite(df) || df == 0.0) return false;
    if (std::abs(f) < cfg_.newton_tol) {
      done = true;
      break;
    }
    Complex step = f / df;
    const double sl = std::abs(step);
    if (sl > diam) step *= diam / sl;
    s -= step;
    if (!box.contains(s)) return false;
    if (sl < 4e-16 * std::abs(s)) {
      done = true;
      break;
    }
  }
  eval_direct(s, f, df);
  residual = std::abs(f);
  if (!done && !(residual <= cfg_.newton_tol)) {
    // iteration budget exhausted; accept only if the residual is already small
    if (!(residual <= cfg_.residual_cap)) return false;
  }
  root = s;
  return box.contains(s) && residual <= cfg_.residual_cap;
}

bool Scanner::certify(Complex root, double residual, LocateResult& out) {
  double h = cfg_.cert_halfwidth;
  for (int attempt = 0; attempt < 6; ++attempt, h *= 0.5) {
    const Rect cb{root.real() - h, root.real() + h, root.imag() - h, root.imag() + h};
    int w;
    try {
      w = winding_checked(cb);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::BoundaryRoot || e.code() == ErrorCode::Unresolved) continue;
      throw;
    }
    if (w == 1) {
      APoint p;
      p.beta = root.real();
      p.gamma = root.imag();
      p.residual = residual;
      p.box = cb;
      out.points.push_back(p);
      return true;
    }
    if (w == 0) return false;
  }
  return false;
}

void Scanner::isolate(const Rect& box, int w, int depth, LocateResult& out) {
  if (w <= 0) return;
  if (w == 1) {
    Complex root;
    double res;
    if (newton(box, root, res) && certify(root, res, out)) return;
  }
  if (depth >= cfg_.max_depth) {
    APoint p;
    p.beta = box.center().real();
    p.gamma = box.center().imag();
    Complex f, df;
    eval_direct(box.center(), f, df);
    p.residual = std::abs(f);
    p.box = box;
    p.multiplicity = w;
    out.points.push_back(p);
    out.unresolved.push_back({box, w});
    return;
  }

  const bool split_sigma = box.width() >= box.height();
  const double lo = split_sigma ? box.sigma_lo : box.t_lo;
  const double hi = split_sigma ? box.sigma_hi : box.t_hi;
  constexpr double kShift = 0.0123456789 * 1.4142135623730951;
  for (int attempt = 0; attempt < 12; ++attempt) {
    double cut = 0.5 * (lo + hi);
    if (attempt > 0) {
      const int m = (attempt + 1) / 2;
      cut += (attempt % 2 ? 1 : -1) * m * kShift * (hi - lo);
    }
    Rect r1 = box, r2 = box;
    if (split_sigma) {
      r1.sigma_hi = cut;
      r2.sigma_lo = cut;
    } else {
      r1.t_hi = cut;
      r2.t_lo = cut;
    }
    int w1, w2;
    try {
      w1 = winding_checked(r1);
      w2 = winding_checked(r2);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::BoundaryRoot) continue;
      throw;
    }
    if (w1 + w2 != w) {
      if (attempt + 1 < 12) continue;
      throw Error(ErrorCode::Unresolved, "winding not conserved under subdivision");
    }
    isolate(r1, w1, depth + 1, out);
    isolate(r2, w2, depth + 1, out);
    return;
  }
  throw Error(ErrorCode::BoundaryRoot, "no root-free split line found");
}

LocateResult Scanner::locate(const Rect& r) {
  const std::int64_t start = evaluations_;
  LocateResult out;
  const int w = winding_checked(r);
  if (w < 0) throw Error(ErrorCode::Unresolved, "negative winding number");
  out.total_winding = w;
  isolate(r, w, 0, out);
  for (auto& p : out.points) {
    p.k = k_;
    p.a = a_;
  }
  sort_points(out.points);
  out.evaluations = evaluations_ - start;
  return out;
}

int winding(int k, Complex a, const Rect& rect, const ScanConfig& cfg) {
  Scanner sc(k, a, cfg);
  return sc.winding(rect);
}

LocateResult locate_rect(int k, Complex a, const Rect& rect, const ScanConfig& cfg) {
  if (!(rect.t_hi > rect.t_lo) || !(rect.sigma_hi > rect.sigma_lo)) return {};
  constexpr double kStep = 1e-6 / 1.4142135623730951;
  for (int attempt = 0; attempt < 9; ++attempt) {
    const int m = (attempt + 1) / 2;
    const double d = (attempt % 2 ? 1 : -1) * m * kStep;
    Scanner sc(k, a, cfg);
    try {
      return sc.locate(expand(rect, d));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BoundaryRoot) throw;
    }
  }
  throw Error(ErrorCode::BoundaryRoot, "root on the outer contour persists after perturbation");
}

LocateResult locate(int k, Complex a, const ScanWindow& window, const ScanConfig& cfg) {
  if (!(window.t_hi > window.t_lo)) return {};
  ScanConfig c = cfg;
  c.max_depth = window.max_depth;
  c.phase_step_cap = window.phase_step_cap;
  return locate_rect(k, a, window.rect(), c);
}

Rect search_rect(int k, Complex a, double t_lo, double t_hi, const EvalConfig& cfg) {
  const RegionBounds rb = region_bounds(k, a, t_lo, t_hi, cfg);
  return {rb.e1_strict, rb.e2_strict + 0.25, t_lo, t_hi};
}

StripReport strip_count_check(int k, Complex a, double T, const ScanConfig& cfg) {
  if (!(T >= 2)) throw Error(ErrorCode::InvalidArgument, "strip check needs T >= 2");
  const Rect r = search_rect(k, a, T - 0.25, T + 1.25, cfg.eval);
  const LocateResult res = locate_rect(k, a, r, cfg);
  StripReport rep;
  rep.T = T;
  for (const auto& p : res.points)
    if (p.gamma >= T && p.gamma < T + 1) rep.count += p.multiplicity;
  rep.ratio = rep.count / std::log(T);
  return rep;
}

Complex local_expansion_residual(int k, Complex a, Complex s, const std::vector<APoint>& roots,
                                 const ScanConfig& cfg) {
  const double t = s.imag();
  Complex jet[detail::kMaxJet];
  cfg.eval.validate();
  zeta_jet_into(k + 1, s, cfg.eval.precision_mode, cfg.eval.em_terms, jet);
  Complex acc = jet[k + 1] / (jet[k] - a);
  for (const auto& p : roots) {
    if (std::abs(p.gamma - t) >= 1) continue;
    const Complex d = s - p.rho();
    if (std::abs(d) < 1e-3) throw Error(ErrorCode::NearRoot, "evaluation point within 1e-3 of a root");
    acc -= double(p.multiplicity) / d;
  }
  return acc;
}

Complex local_expansion_residual(int k, Complex a, Complex s, const ScanConfig& cfg) {
  const double t = s.imag();
  if (!(t >= 10)) throw Error(ErrorCode::InvalidArgument, "local expansion needs Im s >= 10");
  const Rect r = search_rect(k, a, t - 1.25, t + 1.25, cfg.eval);
  const LocateResult res = locate_rect(k, a, r, cfg);
  return local_expansion_residual(k, a, s, res.points, cfg);
}

}  // namespace zap
