#pragma once

// Windowed scans: in-memory and checkpointed file runs.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "zap/io.hpp"
#include "zap/rootscan.hpp"

namespace zap {

inline constexpr double kDefaultWindow = 10;

/// Windows [t0 + w i, t0 + w (i+1)) clipped to t1.
std::vector<io::WindowSpec> window_grid(double t0, double t1, double window = kDefaultWindow);

/// a-points with t_lo <= gamma < t_hi, located in a padded rectangle.
std::vector<APoint> scan_window(int k, Complex a, const io::WindowSpec& w, const ScanConfig& cfg = {});

/// Sequential scan of [t0, t1), sorted.
std::vector<APoint> scan_points(int k, Complex a, double t0, double t1, const ScanConfig& cfg = {},
                                double window = kDefaultWindow);

struct ScanJob {
  int k = 1;
  Complex a{1, 0};
  double t0 = 1, t1 = 1;
  double window = kDefaultWindow;
  int jobs = 1;
  std::string out = "points.jsonl";
  ScanConfig cfg;
  int stop_after = -1;  // stop after this many committed windows (for testing resume)
};

struct ScanOutcome {
  std::vector<APoint> points;
  int windows_total = 0;
  int windows_run = 0;      // in this invocation
  int windows_failed = 0;
  bool finished = false;
};

/// Checkpointed run writing job.out, job.out.manifest.json and job.out.partial.jsonl.
ScanOutcome run_scan(const ScanJob& job, const std::function<void(const std::string&)>& log = {});

}  // namespace zap
