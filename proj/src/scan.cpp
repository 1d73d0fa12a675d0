#include "zap/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "zap/errors.hpp"

namespace zap {

namespace {

constexpr double kPad = 0.25;
constexpr double kFloorT = 1;

struct WindowResult {
  std::int64_t id = 0;
  std::vector<APoint> points;
  std::string error;
};

std::string block_for(const WindowResult& r) {
  std::string s;
  for (const auto& p : r.points) s += io::point_to_json(p) + "\n";
  s += "{\"window_done\":" + std::to_string(r.id) + ",\"count\":" + std::to_string(r.points.size()) + "}\n";
  return s;
}

// Points of committed blocks in the partial file prefix.
std::vector<APoint> parse_partial(const std::string& bytes) {
  std::vector<APoint> all, pending;
  std::istringstream in(bytes);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("{\"window_done\"", 0) == 0) {
      all.insert(all.end(), pending.begin(), pending.end());
      pending.clear();
    } else {
      pending.push_back(io::point_from_json(line));
    }
  }
  return all;
}

void check_job(const ScanJob& job) {
  if (job.k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (!(job.t0 >= kFloorT)) throw Error(ErrorCode::InvalidArgument, "scan heights must start at t0 >= 1");
  if (!(job.window > 0)) throw Error(ErrorCode::InvalidArgument, "window must be positive");
  if (job.jobs < 1) throw Error(ErrorCode::InvalidArgument, "jobs must be >= 1");
  job.cfg.validate();
}

}  // namespace

std::vector<io::WindowSpec> window_grid(double t0, double t1, double window) {
  std::vector<io::WindowSpec> g;
  for (std::int64_t i = 0;; ++i) {
    const double lo = t0 + window * double(i);
    if (!(lo < t1)) break;
    g.push_back({i, lo, std::min(t0 + window * double(i + 1), t1)});
  }
  return g;
}

std::vector<APoint> scan_window(int k, Complex a, const io::WindowSpec& w, const ScanConfig& cfg) {
  const double lo = std::max(kFloorT, w.t_lo - kPad);
  const Rect r = search_rect(k, a, lo, w.t_hi + kPad, cfg.eval);
  LocateResult res = locate_rect(k, a, r, cfg);
  std::vector<APoint> out;
  for (auto& p : res.points) {
    if (p.gamma < w.t_lo || p.gamma >= w.t_hi) continue;
    p.window_id = w.id;
    out.push_back(p);
  }
  sort_points(out);
  return out;
}

std::vector<APoint> scan_points(int k, Complex a, double t0, double t1, const ScanConfig& cfg, double window) {
  if (!(t0 >= kFloorT)) throw Error(ErrorCode::InvalidArgument, "scan heights must start at t0 >= 1");
  std::vector<APoint> all;
  for (const auto& w : window_grid(t0, t1, window)) {
    auto pts = scan_window(k, a, w, cfg);
    all.insert(all.end(), pts.begin(), pts.end());
  }
  sort_points(all);
  return all;
}

ScanOutcome run_scan(const ScanJob& job, const std::function<void(const std::string&)>& log) {
  check_job(job);
  auto say = [&](const std::string& s) {
    if (log) log(s);
  };

  io::RunManifest m;
  m.k = job.k;
  m.a = job.a;
  m.t0 = job.t0;
  m.t1 = job.t1;
  m.window = job.window;
  m.grid = window_grid(job.t0, job.t1, job.window);
  m.cfg_snapshot = io::config_snapshot(job.cfg);

  const std::string ppath = io::partial_path(job.out);
  const std::string mpath = io::manifest_path(job.out);
  std::string committed;  // partial file prefix that the manifest vouches for

  if (auto old = io::load_manifest(job.out)) {
    const io::RunManifest& o = *old;
    bool same_grid = o.grid.size() == m.grid.size();
    for (std::size_t i = 0; same_grid && i < m.grid.size(); ++i)
      same_grid = o.grid[i].id == m.grid[i].id && o.grid[i].t_lo == m.grid[i].t_lo && o.grid[i].t_hi == m.grid[i].t_hi;
    if (o.k != m.k || o.a != m.a || o.t0 != m.t0 || o.t1 != m.t1 || o.window != m.window || !same_grid ||
        o.cfg_snapshot != m.cfg_snapshot)
      throw Error(ErrorCode::ManifestMismatch, mpath + " was written for a different run");
    if (o.partial_bytes > 0) {
      const std::string bytes = std::filesystem::exists(ppath) ? io::read_file(ppath) : std::string();
      if (bytes.size() < o.partial_bytes)
        throw Error(ErrorCode::ChecksumMismatch, ppath + " is shorter than its committed prefix");
      committed = bytes.substr(0, o.partial_bytes);
      if (io::hex64(io::fnv1a(committed)) != o.partial_hash)
        throw Error(ErrorCode::ChecksumMismatch, ppath + " does not match the manifest hash");
    }
    m.completed = o.completed;
    say("resuming: " + std::to_string(m.completed.size()) + " of " + std::to_string(m.grid.size()) +
        " windows done");
  }
  // drop any uncommitted tail left by an interrupted writer
  io::write_file_atomic(ppath, committed);
  m.partial_bytes = committed.size();
  m.partial_hash = io::hex64(io::fnv1a(committed));
  m.points_hash.clear();
  io::write_file_atomic(mpath, m.to_json());

  std::set<std::int64_t> done(m.completed.begin(), m.completed.end());
  std::vector<io::WindowSpec> todo;
  for (const auto& w : m.grid)
    if (!done.count(w.id)) todo.push_back(w);

  ScanOutcome outcome;
  outcome.windows_total = static_cast<int>(m.grid.size());

  std::mutex mu;
  std::condition_variable cv;
  std::deque<WindowResult> queue;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  const int nworkers = std::max(1, std::min<int>(job.jobs, static_cast<int>(todo.size())));

  auto worker = [&] {
    for (;;) {
      if (stop) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= todo.size()) return;
      WindowResult r;
      r.id = todo[i].id;
      try {
        r.points = scan_window(job.k, job.a, todo[i], job.cfg);
      } catch (const std::exception& e) {
        r.error = e.what();
      }
      {
        std::lock_guard<std::mutex> lock(mu);
        queue.push_back(std::move(r));
      }
      cv.notify_one();
    }
  };

  std::vector<std::thread> pool;
  if (!todo.empty())
    for (int i = 0; i < nworkers; ++i) pool.emplace_back(worker);

  std::map<std::int64_t, std::string> failed;
  {
    std::ofstream part(ppath, std::ios::binary | std::ios::app);
    std::size_t received = 0;
    while (received < todo.size()) {
      WindowResult r;
      {
        std::unique_lock<std::mutex> lock(mu);
        cv.wait(lock, [&] { return !queue.empty(); });
        r = std::move(queue.front());
        queue.pop_front();
      }
      ++received;
      if (!r.error.empty()) {
        failed[r.id] = r.error;
        ++outcome.windows_failed;
        say("window " + std::to_string(r.id) + " failed: " + r.error);
      } else {
        const std::string block = block_for(r);
        part << block;
        part.flush();
        committed += block;
        m.completed.insert(std::upper_bound(m.completed.begin(), m.completed.end(), r.id), r.id);
        m.partial_bytes = committed.size();
        m.partial_hash = io::hex64(io::fnv1a(committed));
      }
      m.failed.assign(failed.begin(), failed.end());
      io::write_file_atomic(mpath, m.to_json());
      ++outcome.windows_run;
      if (job.stop_after >= 0 && outcome.windows_run >= job.stop_after) {
        stop = true;
        break;
      }
    }
  }
  for (auto& t : pool) t.join();

  if (stop && m.completed.size() + failed.size() < m.grid.size()) {
    say("stopped after " + std::to_string(outcome.windows_run) + " windows");
    return outcome;
  }

  outcome.points = parse_partial(committed);
  sort_points(outcome.points);
  std::string bytes;
  for (const auto& p : outcome.points) bytes += io::point_to_json(p) + "\n";
  io::write_file_atomic(job.out, bytes);
  m.points_hash = io::hex64(io::fnv1a(bytes));
  io::write_file_atomic(mpath, m.to_json());
  outcome.finished = true;
  return outcome;
}

}  // namespace zap
