#include "zap/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <numbers>
#include <sstream>

#include "zap/asymptotics.hpp"
#include "zap/census.hpp"
#include "zap/coefficients.hpp"
#include "zap/errors.hpp"
#include "zap/evaluator.hpp"
#include "zap/io.hpp"
#include "zap/regions.hpp"
#include "zap/rootscan.hpp"
#include "zap/scan.hpp"
#include "zap/tunables.hpp"

namespace zap {

namespace {

using std::numbers::pi;
namespace tn = tunables;

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::string cstr(Complex a) {
  std::ostringstream s;
  if (a.imag() == 0) s << a.real();
  else if (a.real() == 0 && a.imag() == 1) s << "i";
  else s << a.real() << (a.imag() < 0 ? "" : "+") << a.imag() << "i";
  return s.str();
}

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

// Scans from t = 1, grown on demand and shared across criteria.
class ScanCache {
 public:
  const std::vector<APoint>& get(int k, Complex a, double T) {
    auto key = std::make_tuple(k, a.real(), a.imag());
    auto& e = cache_[key];
    if (e.T < T) {
      const double t0 = std::max(1.0, e.T);
      auto more = scan_points(k, a, t0, T);
      e.points.insert(e.points.end(), more.begin(), more.end());
      sort_points(e.points);
      e.T = T;
    }
    return e.points;
  }

 private:
  struct Entry {
    double T = 0;
    std::vector<APoint> points;
  };
  std::map<std::tuple<int, double, double>, Entry> cache_;
};

int count_between(const std::vector<APoint>& pts, double lo, double hi) {
  int n = 0;
  for (const auto& p : pts)
    if (p.gamma > lo && p.gamma < hi) n += p.multiplicity;
  return n;
}

struct Check {
  bool pass = true;
  std::ostringstream detail;
  void note(bool ok, const std::string& s) {
    pass = pass && ok;
    if (detail.tellp() > 0) detail << "; ";
    detail << s << (ok ? "" : " FAIL");
  }
};

Check evaluator_exactness() {
  Check c;
  const double z2 = rel(zeta({2, 0}), pi * pi / 6);
  c.note(z2 <= 1e-12, "zeta(2) rel " + fmt("%.1e", z2));
  const double zm1 = rel(zeta({-1, 0}), -1.0 / 12);
  c.note(zm1 <= 1e-12, "zeta(-1) rel " + fmt("%.1e", zm1));
  double d0 = 0, fd = 0;
  constexpr double h = 1e-4;
  for (int i = 0; i < 10; ++i)
    for (double t : {0.5, 3.0, 14.0, 30.0, 60.0}) {
      const Complex s(-1 + 0.45 * i, t);
      d0 = std::max(d0, rel(zeta_deriv(0, s), zeta(s)));
      const Complex num = (zeta(s + h) - zeta(s - h)) / (2 * h);
      fd = std::max(fd, std::abs(num - zeta_deriv(1, s)));
    }
  c.note(d0 <= 1e-12, "deriv0 rel " + fmt("%.1e", d0));
  c.note(fd <= 1e-5, "finite difference abs " + fmt("%.1e", fd));
  return c;
}

bool coeff_close(Complex got, Complex want, double& worst) {
  if (std::abs(want) > 1e-14) {
    const double r = std::abs(got - want) / std::abs(want);
    worst = std::max(worst, r);
    return r <= 1e-12;
  }
  return std::abs(got) <= 1e-14;
}

Check coefficient_oracle() {
  Check c;
  const std::pair<int, Complex> cases[] = {{1, {1, 0}}, {1, {0, 1}}, {2, {1, 0}}};
  for (const auto& [k, a] : cases) {
    const auto oracle = alpha_oracle(k, a, 100);
    double worst = 0;
    bool ok = true;
    for (std::int64_t x = 2; x <= 100; ++x) {
      const auto it = oracle.entries.find(CoeffIndex::make(x));
      const Complex want = it == oracle.entries.end() ? Complex(0) : it->second;
      ok = coeff_close(alpha(k, a, x), want, worst) && ok;
    }
    c.note(ok, "k=" + std::to_string(k) + " a=" + cstr(a) + " rel " + fmt("%.1e", worst));
  }
  for (int k : {1, 2}) {
    const auto oracle = alpha_oracle(k, 0, 100);
    const auto table = alpha_table(k, 0, 100);
    double worst = 0;
    bool ok = true;
    std::size_t n = 0;
    for (const auto& [idx, want] : oracle.entries) {
      ok = coeff_close(alpha_zero(k, idx), want, worst) && ok;
      ++n;
    }
    for (const auto& [idx, got] : table.entries) {
      const auto it = oracle.entries.find(idx);
      ok = coeff_close(got, it == oracle.entries.end() ? Complex(0) : it->second, worst) && ok;
    }
    c.note(ok, "a=0 k=" + std::to_string(k) + " " + std::to_string(n) + " indices rel " + fmt("%.1e", worst));
  }
  const double l2 = std::log(2.0);
  const double f2 = rel(alpha(1, Complex(1), std::int64_t(2)), -l2 * l2);
  const double f4 = rel(alpha(1, Complex(1), std::int64_t(4)), -4 * l2 * l2 + l2 * l2 * l2);
  c.note(f2 <= 1e-12 && f4 <= 1e-12, "frozen x=2,4 rel " + fmt("%.1e", std::max(f2, f4)));
  return c;
}

Check count_remainder(ScanCache& sc) {
  Check c;
  for (int k : {1, 2})
    for (Complex a : {Complex(1, 0), Complex(0, 1), Complex(2, 0)}) {
      const auto& pts = sc.get(k, a, 1000);
      double worst = 0;
      for (double T : {100.0, 300.0, 1000.0})
        worst = std::max(worst, std::abs(count_between(pts, 1, T) - count_main(k, a, T)) / std::log(T));
      c.note(worst <= tn::kCountRemainderCap, "k=" + std::to_string(k) + " a=" + cstr(a) + " " + fmt("%.2f", worst));
    }
  return c;
}

Check count_zero(ScanCache& sc) {
  Check c;
  const auto& pts = sc.get(1, 0, 1000);
  for (double T : {100.0, 300.0, 1000.0}) {
    const int n = count_between(pts, 1, T);
    const double r = std::abs(n - count_main(1, 0, T)) / std::log(T);
    c.note(r <= tn::kCountRemainderCap, "T=" + fmt("%.0f", T) + " N=" + std::to_string(n) + " " + fmt("%.2f", r));
  }
  return c;
}

Check strips() {
  Check c;
  double worst = 0, at = 0;
  for (int i = 1; i <= 20; ++i) {
    const auto r = strip_count_check(1, 1, 50.0 * i);
    if (r.ratio >= worst) {
      worst = r.ratio;
      at = r.T;
    }
  }
  c.note(worst <= tn::kStripCap, "max " + fmt("%.2f", worst) + " at T=" + fmt("%.0f", at));
  return c;
}

Check exp_sums(ScanCache& sc) {
  Check c;
  const struct {
    Complex a;
    double x;
  } cases[] = {{1, 2}, {1, 4}, {0, 1.5}, {1, 2.5}};
  for (const auto& cs : cases) {
    const auto& pts = sc.get(1, cs.a, 500);
    const auto r = expsum(1, cs.a, cs.x, 500, pts);
    c.note(r.remainder_ratio <= tn::kExpSumCap,
           "a=" + cstr(cs.a) + " x=" + fmt("%g", cs.x) + " " + fmt("%.2f", r.remainder_ratio));
  }
  return c;
}

Check census_check(ScanCache& sc) {
  Check c;
  const double T = 1000, U = 1000;
  const auto r = census(1, 1, T, U, sc.get(1, 1, T + U));
  const int direct = count_between(sc.get(1, 1, T + U), T, T + U);
  c.note(r.n1 + r.n2 + r.n3 == r.total && r.total == direct,
         "n1=" + std::to_string(r.n1) + " n2=" + std::to_string(r.n2) + " n3=" + std::to_string(r.n3) +
             " total=" + std::to_string(r.total));
  const double frac = r.total ? double(r.n3) / r.total : 0;
  c.note(frac >= tn::kCentralFraction, "n3/total " + fmt("%.3f", frac));
  const double cap = tn::kBetaExcessCap * U * std::log(std::log(T));
  c.note(r.beta_excess <= cap, "beta excess " + fmt("%.1f", r.beta_excess) + " cap " + fmt("%.0f", cap));
  return c;
}

Check littlewood(ScanCache& sc) {
  Check c;
  for (Complex a : {Complex(2, 0), Complex(0, 1)}) {
    const auto r = littlewood_balance(1, a, 100, 100, sc.get(1, a, 1000));
    c.note(r.ratio <= tn::kLittlewoodCap, "a=" + cstr(a) + " " + fmt("%.3f", r.ratio));
  }
  return c;
}

Check trivial() {
  Check c;
  for (Complex a : {Complex(1, 0), Complex(0, 0)}) {
    const int nmin = find_trivial_nmin(1, a);
    bool ok = true;
    double worst_res = 0;
    std::vector<double> dist;
    std::string why;
    for (int n = std::max(nmin, 2); n <= nmin + 20; ++n) {
      try {
        const auto tb = trivial_apoint(1, a, n);
        worst_res = std::max(worst_res, tb.newton_residual);
        dist.push_back(tb.distance);
      } catch (const Error& e) {
        ok = false;
        why = e.what();
        break;
      }
    }
    bool mono = dist.size() >= 10;
    for (std::size_t i = dist.size() >= 10 ? dist.size() - 10 : 0; mono && i + 1 < dist.size(); ++i)
      mono = dist[i + 1] <= dist[i];
    c.note(ok && mono, "a=" + cstr(a) + " n_min=" + std::to_string(nmin) + " residual " + fmt("%.1e", worst_res) +
                           (mono ? "" : " distances not monotone") + (why.empty() ? "" : " " + why));
  }
  return c;
}

Check determinism(const AcceptanceOptions& opt) {
  Check c;
  namespace fs = std::filesystem;
  const fs::path dir = opt.workdir.empty() ? fs::temp_directory_path() / "zap_acceptance" : fs::path(opt.workdir);
  fs::create_directories(dir);
  auto fresh = [&](const std::string& name) {
    const fs::path p = dir / name;
    for (const auto& f : {p, fs::path(io::manifest_path(p.string())), fs::path(io::partial_path(p.string()))})
      fs::remove(f);
    return p.string();
  };
  ScanJob job;
  job.k = 1;
  job.a = 1;
  job.t0 = 1;
  job.t1 = 201;
  job.jobs = 1;
  job.out = fresh("serial.jsonl");
  run_scan(job);
  const std::string serial = io::read_file(job.out);

  job.jobs = std::max(opt.jobs, 2);
  job.out = fresh("parallel.jsonl");
  run_scan(job);
  const std::string parallel = io::read_file(job.out);

  job.jobs = 2;
  job.out = fresh("resumed.jsonl");
  job.stop_after = 7;
  const auto first = run_scan(job);
  job.stop_after = -1;
  job.jobs = 3;
  run_scan(job);
  const std::string resumed = io::read_file(job.out);

  const int lines = static_cast<int>(std::count(serial.begin(), serial.end(), '\n'));
  c.note(lines > 0, std::to_string(lines) + " points");
  c.note(serial == parallel, "jobs 1 vs " + std::to_string(std::max(opt.jobs, 2)) + (serial == parallel ? " identical" : " differ"));
  c.note(!first.finished && serial == resumed, std::string("interrupted+resumed ") +
                                                   (serial == resumed ? "identical" : "differ"));
  return c;
}

}  // namespace

std::string format_result(const CriterionResult& r) {
  char head[96];
  std::snprintf(head, sizeof head, "[%s] %2d %-28s %7.2fs  ", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds);
  return head + r.detail;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  ScanCache sc;
  const std::vector<std::pair<std::string, std::function<Check()>>> suite = {
      {"evaluator exactness", [] { return evaluator_exactness(); }},
      {"coefficient oracle", [] { return coefficient_oracle(); }},
      {"counting remainder", [&] { return count_remainder(sc); }},
      {"counting remainder a=0", [&] { return count_zero(sc); }},
      {"unit strips", [] { return strips(); }},
      {"exponential sums", [&] { return exp_sums(sc); }},
      {"band census", [&] { return census_check(sc); }},
      {"littlewood balance", [&] { return littlewood(sc); }},
      {"trivial a-points", [] { return trivial(); }},
      {"determinism", [&] { return determinism(opt); }},
  };
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) continue;
    CriterionResult r;
    r.id = id;
    r.name = suite[i].first;
    const auto start = std::chrono::steady_clock::now();
    try {
      Check c = suite[i].second();
      r.pass = c.pass;
      r.detail = c.detail.str();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (opt.on_result) opt.on_result(r);
    out.push_back(r);
  }
  return out;
}

}  // namespace zap
