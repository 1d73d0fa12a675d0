#pragma once

// Persistence: JSONL points, CSV reports, run manifests.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zap/rootscan.hpp"
#include "zap/types.hpp"

namespace zap::io {

inline constexpr int kSchemaVersion = 1;

/// One JSON object, no trailing newline; numbers with 17 significant digits.
std::string point_to_json(const APoint& p);
APoint point_from_json(const std::string& line);

std::vector<APoint> read_points(const std::string& path);
void write_points(const std::string& path, const std::vector<APoint>& pts);

/// FNV-1a 64 over the bytes.
std::uint64_t fnv1a(const std::string& bytes, std::uint64_t h = 0xcbf29ce484222325ULL);
std::string hex64(std::uint64_t h);
std::string read_file(const std::string& path);
/// Write to path.tmp, then rename over path.
void write_file_atomic(const std::string& path, const std::string& bytes);

/// Format with 17 significant digits.
std::string num(double x);

/// Parses "RE,IM" or "RE".
Complex parse_complex(const std::string& s);

struct WindowSpec {
  std::int64_t id = 0;
  double t_lo = 0, t_hi = 0;
};

struct RunManifest {
  int schema_version = kSchemaVersion;
  int k = 1;
  Complex a{};
  double t0 = 1, t1 = 1, window = 10;
  std::vector<WindowSpec> grid;
  std::string cfg_snapshot;                 // canonical JSON of the scan configuration
  std::vector<std::int64_t> completed;      // ascending
  std::vector<std::pair<std::int64_t, std::string>> failed;
  std::uint64_t partial_bytes = 0;          // committed prefix of the partial file
  std::string partial_hash;                 // hash of that prefix
  std::string points_hash;                  // hash of the final points file, empty until done

  std::string to_json() const;
  static RunManifest from_json(const std::string& text);
};

std::string manifest_path(const std::string& points_path);
std::string partial_path(const std::string& points_path);

/// Reads the manifest next to `points_path`, if any.
std::optional<RunManifest> load_manifest(const std::string& points_path);

/// Points file guarded by its manifest hash when one exists; throws ChecksumMismatch.
std::vector<APoint> read_points_checked(const std::string& path);

std::string config_snapshot(const ScanConfig& cfg);

}  // namespace zap::io
