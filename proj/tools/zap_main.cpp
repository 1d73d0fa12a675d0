#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "zap/acceptance.hpp"
#include "zap/asymptotics.hpp"
#include "zap/census.hpp"
#include "zap/coefficients.hpp"
#include "zap/errors.hpp"
#include "zap/evaluator.hpp"
#include "zap/io.hpp"
#include "zap/regions.hpp"
#include "zap/scan.hpp"
#include "zap/svg.hpp"
#include "zap/tunables.hpp"

using namespace zap;
using io::num;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Target {
  int k = 0;
  std::string a;
};

// k and a from the flags, else from the first point
void resolve_target(const Target& t, const std::vector<APoint>& pts, int& k, Complex& a) {
  if (t.k == 0 && t.a.empty() && pts.empty())
    throw UsageError("--k and --a are required when the points file is empty");
  k = t.k ? t.k : pts.front().k;
  a = t.a.empty() ? pts.front().a : io::parse_complex(t.a);
  for (const auto& p : pts)
    if (p.k != k || p.a != a) throw Error(ErrorCode::InvalidArgument, "points file holds a different (k, a)");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

std::string a_cols(int k, Complex a) { return std::to_string(k) + "," + num(a.real()) + "," + num(a.imag()); }

ScanConfig scan_config() {
  ScanConfig sc;
  sc.eval = config_from_env();
  return sc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"a-points of zeta derivatives: evaluation, location and census"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "zap 1.0");

  // scan
  auto* scan = app.add_subcommand("scan", "locate a-points in [t0, t1) window by window");
  int scan_k = 1;
  std::string scan_a, scan_out = "points.jsonl";
  double scan_t0 = 1, scan_t1 = 1, scan_window = kDefaultWindow;
  int scan_jobs = std::max(1u, std::thread::hardware_concurrency());
  int scan_stop = -1;
  scan->add_option("--k", scan_k, "derivative order")->required()->check(CLI::PositiveNumber);
  scan->add_option("--a", scan_a, "target value RE,IM")->required();
  scan->add_option("--t0", scan_t0, "lower height")->required();
  scan->add_option("--t1", scan_t1, "upper height")->required();
  scan->add_option("--jobs", scan_jobs, "worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--out", scan_out, "points file (JSONL)");
  scan->add_option("--window", scan_window, "window height");
  scan->add_option("--stop-after", scan_stop, "stop after N windows")->group("");

  // regions
  auto* regions = app.add_subcommand("regions", "root-free abscissas and trivial a-points");
  int reg_k = 1, reg_rows = 21;
  std::string reg_a;
  double reg_tlo = 1, reg_thi = 1000;
  regions->add_option("--k", reg_k)->required()->check(CLI::PositiveNumber);
  regions->add_option("--a", reg_a)->required();
  regions->add_option("--t-lo", reg_tlo, "lower height of the e1 grid");
  regions->add_option("--t-hi", reg_thi, "upper height of the e1 grid");
  regions->add_option("--rows", reg_rows, "trivial a-points listed from n_min")->check(CLI::PositiveNumber);

  // coeffs
  auto* coeffs = app.add_subcommand("coeffs", "main-term coefficients alpha(d)");
  int co_k = 1;
  std::string co_a;
  std::int64_t co_max = 100;
  std::optional<double> co_x;
  bool co_oracle = false;
  coeffs->add_option("--k", co_k)->required()->check(CLI::PositiveNumber);
  coeffs->add_option("--a", co_a)->required();
  coeffs->add_option("--max", co_max, "largest index numerator")->check(CLI::PositiveNumber);
  coeffs->add_option("--x", co_x, "single index");
  coeffs->add_flag("--oracle", co_oracle, "use the series-division table");

  // reports over a points file
  std::string pts_path;
  Target target;
  std::string svg_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--points", pts_path, "points file (JSONL)")->required();
    sub->add_option("--k", target.k, "derivative order (default: from points)");
    sub->add_option("--a", target.a, "target value RE,IM (default: from points)");
    sub->add_option("--svg", svg_path, "write a plot");
  };
  double rep_T = 0, rep_U = 0, rep_x = 2, rep_b = tunables::kBetaShift;
  std::vector<double> count_T;

  auto* count = app.add_subcommand("count", "N(a; 1, T) against the main term");
  add_common(count);
  count->add_option("--T", count_T, "heights")->required();

  auto* cen = app.add_subcommand("census", "three-band census on (T, T+U)");
  add_common(cen);
  cen->add_option("--T", rep_T)->required();
  cen->add_option("--U", rep_U)->required();

  auto* es = app.add_subcommand("expsum", "sum of x^rho over 1 < gamma < T");
  add_common(es);
  es->add_option("--x", rep_x)->required();
  es->add_option("--T", rep_T)->required();

  auto* lw = app.add_subcommand("littlewood", "beta excess against the log-modulus integral");
  add_common(lw);
  lw->add_option("--T", rep_T)->required();
  lw->add_option("--U", rep_U)->required();

  auto* bs = app.add_subcommand("betasum", "sum of beta + b on (T, T+U)");
  add_common(bs);
  bs->add_option("--T", rep_T)->required();
  bs->add_option("--U", rep_U)->required();
  bs->add_option("--b", rep_b, "shift b");

  // trivial
  auto* triv = app.add_subcommand("trivial", "trivial a-point in C_n");
  int tr_k = 1, tr_n = 0, tr_count = 1;
  std::string tr_a;
  triv->add_option("--k", tr_k)->required()->check(CLI::PositiveNumber);
  triv->add_option("--a", tr_a)->required();
  triv->add_option("--n", tr_n, "box index (default n_min)");
  triv->add_option("--count", tr_count, "consecutive boxes")->check(CLI::PositiveNumber);

  // selftest
  auto* self = app.add_subcommand("selftest", "run the acceptance suite");
  std::string st_dir;
  std::vector<int> st_only;
  int st_jobs = 8;
  self->add_option("--workdir", st_dir, "scratch directory");
  self->add_option("--only", st_only, "criterion ids");
  self->add_option("--jobs", st_jobs, "workers for the determinism check")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*scan) {
      ScanJob job;
      job.k = scan_k;
      job.a = io::parse_complex(scan_a);
      job.t0 = scan_t0;
      job.t1 = scan_t1;
      job.window = scan_window;
      job.jobs = scan_jobs;
      job.out = scan_out;
      job.cfg = scan_config();
      job.stop_after = scan_stop;
      const auto r = run_scan(job, [](const std::string& s) { std::cerr << s << "\n"; });
      std::cerr << "windows " << r.windows_run << " run, " << r.windows_failed << " failed, "
                << r.windows_total << " total";
      if (r.finished) std::cerr << "; " << r.points.size() << " points -> " << job.out;
      std::cerr << "\n";
      return r.windows_failed ? kFail : kOk;
    }

    if (*regions) {
      const Complex a = io::parse_complex(reg_a);
      const auto cfg = config_from_env();
      const auto rb = region_bounds(reg_k, a, reg_tlo, reg_thi, cfg);
      const int nmin = find_trivial_nmin(reg_k, a, cfg);
      std::cout << "k,a_re,a_im,t_lo,t_hi,e1,e2,e1_strict,e2_strict,e1_witness,n_min\n"
                << a_cols(reg_k, a) << "," << num(rb.t_lo) << "," << num(rb.t_hi) << "," << num(rb.e1) << ","
                << num(rb.e2) << "," << num(rb.e1_strict) << "," << num(rb.e2_strict) << ","
                << num(rb.e1_witness) << "," << nmin << "\n\n";
      std::cout << "n,beta,gamma,winding,newton_residual\n";
      int rc = kOk;
      for (int n = std::max(nmin, 2); n < std::max(nmin, 2) + reg_rows; ++n) {
        try {
          const auto tb = trivial_apoint(reg_k, a, n, cfg);
          std::cout << n << "," << num(tb.root->beta) << "," << num(tb.root->gamma) << "," << tb.winding << ","
                    << num(tb.newton_residual) << "\n";
        } catch (const Error& e) {
          std::cerr << "n=" << n << ": " << e.what() << "\n";
          rc = kFail;
        }
      }
      return rc;
    }

    if (*coeffs) {
      const Complex a = io::parse_complex(co_a);
      std::cout << "index,alpha_re,alpha_im\n";
      if (co_x) {
        const Complex v = a == 0.0 ? Complex(alpha_zero(co_k, *co_x)) : alpha(co_k, a, *co_x);
        std::cout << num(*co_x) << "," << num(v.real()) << "," << num(v.imag()) << "\n";
        return kOk;
      }
      const auto tab = co_oracle ? alpha_oracle(co_k, a, co_max) : alpha_table(co_k, a, co_max);
      for (const auto& [idx, v] : tab.entries)
        std::cout << num(idx.value()) << "," << num(v.real()) << "," << num(v.imag()) << "\n";
      return kOk;
    }

    if (*count || *cen || *es || *lw || *bs) {
      const auto pts = io::read_points_checked(pts_path);
      int k;
      Complex a;
      resolve_target(target, pts, k, a);
      bool pass = true;

      if (*count) {
        std::cout << "k,a_re,a_im,T,observed,predicted,ratio,pass\n";
        std::vector<double> ts, rs;
        for (double T : count_T) {
          int n = 0;
          for (const auto& p : pts)
            if (p.gamma > 1 && p.gamma < T) n += p.multiplicity;
          const auto r = make_report(n, count_main(k, a, T), std::log(T));
          const bool ok = r.ratio <= tunables::kCountRemainderCap;
          pass = pass && ok;
          std::cout << a_cols(k, a) << "," << num(T) << "," << n << "," << num(r.predicted) << "," << num(r.ratio)
                    << "," << ok << "\n";
        }
        if (!svg_path.empty()) {
          const double tmax = *std::max_element(count_T.begin(), count_T.end());
          svg::Series s{"|N - main| / log T", {}, {}};
          int n = 0;
          std::size_t i = 0;
          for (double T = 10; T <= tmax; T += std::max(1.0, tmax / 400)) {
            for (; i < pts.size() && pts[i].gamma < T; ++i)
              if (pts[i].gamma > 1) n += pts[i].multiplicity;
            s.x.push_back(T);
            s.y.push_back(std::abs(n - count_main(k, a, T)) / std::log(T));
          }
          write_text(svg_path, svg::line_plot({s}, "counting remainder", "T", "ratio"));
        }
      } else if (*cen) {
        const auto r = census(k, a, rep_T, rep_U, pts);
        const double frac = r.total ? double(r.n3) / r.total : 0;
        pass = r.total == 0 || frac >= tunables::kCentralFraction;
        std::cout << "k,a_re,a_im,T,U,halfwidth,n1,n2,n3,total,main_total,remainder_ratio,beta_excess,"
                     "n3_fraction,boundary,pass\n"
                  << a_cols(k, a) << "," << num(rep_T) << "," << num(rep_U) << "," << num(r.halfwidth) << ","
                  << r.n1 << "," << r.n2 << "," << r.n3 << "," << r.total << "," << num(r.main_total) << ","
                  << num(r.remainder_ratio) << "," << num(r.beta_excess) << "," << num(frac) << ","
                  << r.boundary.size() << "," << pass << "\n";
        if (!svg_path.empty()) {
          std::vector<double> betas;
          for (const auto& p : pts)
            if (p.gamma > rep_T && p.gamma < rep_T + rep_U) betas.push_back(p.beta);
          const double lo = std::min(0.5 - 2 * r.halfwidth, betas.empty() ? 0.0 : *std::min_element(betas.begin(), betas.end()));
          const double hi = std::max(0.5 + 2 * r.halfwidth, betas.empty() ? 1.0 : *std::max_element(betas.begin(), betas.end()));
          write_text(svg_path, svg::histogram(betas, lo, hi, 60, "beta on (T, T+U)", "beta",
                                              {{0.5 - r.halfwidth, "1/2 - h"}, {0.5, "1/2"}, {0.5 + r.halfwidth, "1/2 + h"}}));
        }
      } else if (*es) {
        const auto r = expsum(k, a, rep_x, rep_T, pts);
        pass = r.remainder_ratio <= tunables::kExpSumCap;
        std::cout << "k,a_re,a_im,x,T,observed_re,observed_im,predicted_re,predicted_im,ratio,points,pass\n"
                  << a_cols(k, a) << "," << num(rep_x) << "," << num(rep_T) << "," << num(r.observed.real()) << ","
                  << num(r.observed.imag()) << "," << num(r.predicted.real()) << "," << num(r.predicted.imag())
                  << "," << num(r.remainder_ratio) << "," << r.used << "," << pass << "\n";
        if (!svg_path.empty()) {
          svg::Series s{"|sum - main| / log T", {}, {}};
          for (double T = 20; T <= rep_T; T += std::max(1.0, rep_T / 200)) {
            s.x.push_back(T);
            s.y.push_back(expsum(k, a, rep_x, T, pts).remainder_ratio);
          }
          write_text(svg_path, svg::line_plot({s}, "exponential sum remainder", "T", "ratio"));
        }
      } else if (*lw) {
        const auto r = littlewood_balance(k, a, rep_T, rep_U, pts, config_from_env());
        pass = r.ratio <= tunables::kLittlewoodCap;
        std::cout << "k,a_re,a_im,T,U,observed,predicted,ratio,pass\n"
                  << a_cols(k, a) << "," << num(rep_T) << "," << num(rep_U) << "," << num(r.observed) << ","
                  << num(r.predicted) << "," << num(r.ratio) << "," << pass << "\n";
      } else {
        const auto r = beta_sum_check(k, a, rep_b, rep_T, rep_U, pts);
        pass = r.ratio <= tunables::kBetaSumCap;
        std::cout << "k,a_re,a_im,T,U,b,observed,predicted,ratio,pass\n"
                  << a_cols(k, a) << "," << num(rep_T) << "," << num(rep_U) << "," << num(rep_b) << ","
                  << num(r.observed) << "," << num(r.predicted) << "," << num(r.ratio) << "," << pass << "\n";
      }
      return pass ? kOk : kFail;
    }

    if (*triv) {
      const Complex a = io::parse_complex(tr_a);
      const auto cfg = config_from_env();
      const int n0 = tr_n > 0 ? tr_n : find_trivial_nmin(tr_k, a, cfg);
      std::cout << "n,beta,gamma,winding,newton_residual,distance\n";
      for (int n = n0; n < n0 + tr_count; ++n) {
        const auto tb = trivial_apoint(tr_k, a, n, cfg);
        std::cout << n << "," << num(tb.root->beta) << "," << num(tb.root->gamma) << "," << tb.winding << ","
                  << num(tb.newton_residual) << "," << num(tb.distance) << "\n";
      }
      return kOk;
    }

    if (*self) {
      AcceptanceOptions opt;
      opt.workdir = st_dir;
      opt.only = st_only;
      opt.jobs = st_jobs;
      opt.on_result = [](const CriterionResult& r) { std::cout << format_result(r) << std::endl; };
      const auto results = run_acceptance(opt);
      const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.pass; });
      std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
      return failed ? kFail : kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::InvalidArgument ? kUsage : kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kOk;
}
