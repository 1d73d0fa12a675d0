#include "zap/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zap/errors.hpp"

namespace zap::io {

using nlohmann::json;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string point_to_json(const APoint& p) {
  std::string s;
  s.reserve(320);
  s += "{\"schema_version\":" + std::to_string(kSchemaVersion);
  s += ",\"k\":" + std::to_string(p.k);
  s += ",\"a_re\":" + num(p.a.real());
  s += ",\"a_im\":" + num(p.a.imag());
  s += ",\"beta\":" + num(p.beta);
  s += ",\"gamma\":" + num(p.gamma);
  s += ",\"residual\":" + num(p.residual);
  s += ",\"box\":[" + num(p.box.sigma_lo) + "," + num(p.box.sigma_hi) + "," + num(p.box.t_lo) + "," +
       num(p.box.t_hi) + "]";
  s += ",\"window_id\":" + std::to_string(p.window_id);
  s += ",\"multiplicity\":" + std::to_string(p.multiplicity) + "}";
  return s;
}

APoint point_from_json(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad point record: ") + e.what());
  }
  if (j.value("schema_version", 0) != kSchemaVersion)
    throw Error(ErrorCode::InvalidArgument, "unsupported point schema version");
  APoint p;
  try {
    p.k = j.at("k").get<int>();
    p.a = {j.at("a_re").get<double>(), j.at("a_im").get<double>()};
    p.beta = j.at("beta").get<double>();
    p.gamma = j.at("gamma").get<double>();
    p.residual = j.at("residual").get<double>();
    const auto& b = j.at("box");
    p.box = {b.at(0).get<double>(), b.at(1).get<double>(), b.at(2).get<double>(), b.at(3).get<double>()};
    p.window_id = j.value("window_id", std::int64_t(-1));
    p.multiplicity = j.value("multiplicity", 1);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad point record: ") + e.what());
  }
  return p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& bytes) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + tmp);
    out << bytes;
    out.flush();
    if (!out) throw Error(ErrorCode::InvalidArgument, "write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::vector<APoint> read_points(const std::string& path) {
  std::vector<APoint> pts;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) pts.push_back(point_from_json(line));
  return pts;
}

void write_points(const std::string& path, const std::vector<APoint>& pts) {
  std::string s;
  for (const auto& p : pts) s += point_to_json(p) + "\n";
  write_file_atomic(path, s);
}

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t h) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Complex parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  try {
    std::size_t used = 0;
    const std::string re = s.substr(0, comma);
    const double x = std::stod(re, &used);
    if (used != re.size()) throw std::invalid_argument(s);
    double y = 0;
    if (comma != std::string::npos) {
      const std::string im = s.substr(comma + 1);
      y = std::stod(im, &used);
      if (used != im.size()) throw std::invalid_argument(s);
    }
    return {x, y};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidArgument, "expected RE,IM but got '" + s + "'");
  }
}

std::string RunManifest::to_json() const {
  json j;
  j["schema_version"] = schema_version;
  j["k"] = k;
  // exact doubles are kept as 17-digit strings so the snapshot compares bytewise
  j["a"] = {num(a.real()), num(a.imag())};
  j["t0"] = num(t0);
  j["t1"] = num(t1);
  j["window"] = num(window);
  json g = json::array();
  for (const auto& w : grid) g.push_back({w.id, num(w.t_lo), num(w.t_hi)});
  j["grid"] = g;
  j["config"] = json::parse(cfg_snapshot);
  j["completed"] = completed;
  json f = json::object();
  for (const auto& [id, msg] : failed) f[std::to_string(id)] = msg;
  j["failed"] = f;
  j["partial_bytes"] = partial_bytes;
  j["partial_hash"] = partial_hash;
  j["points_hash"] = points_hash;
  return j.dump(2) + "\n";
}

RunManifest RunManifest::from_json(const std::string& text) {
  RunManifest m;
  try {
    const json j = json::parse(text);
    m.schema_version = j.at("schema_version").get<int>();
    if (m.schema_version != kSchemaVersion) throw Error(ErrorCode::ManifestMismatch, "schema version differs");
    m.k = j.at("k").get<int>();
    m.a = {std::stod(j.at("a").at(0).get<std::string>()), std::stod(j.at("a").at(1).get<std::string>())};
    m.t0 = std::stod(j.at("t0").get<std::string>());
    m.t1 = std::stod(j.at("t1").get<std::string>());
    m.window = std::stod(j.at("window").get<std::string>());
    for (const auto& w : j.at("grid"))
      m.grid.push_back({w.at(0).get<std::int64_t>(), std::stod(w.at(1).get<std::string>()),
                        std::stod(w.at(2).get<std::string>())});
    m.cfg_snapshot = j.at("config").dump();
    m.completed = j.at("completed").get<std::vector<std::int64_t>>();
    for (const auto& [id, msg] : j.at("failed").items()) m.failed.emplace_back(std::stoll(id), msg.get<std::string>());
    m.partial_bytes = j.at("partial_bytes").get<std::uint64_t>();
    m.partial_hash = j.at("partial_hash").get<std::string>();
    m.points_hash = j.at("points_hash").get<std::string>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ManifestMismatch, std::string("unreadable manifest: ") + e.what());
  } catch (const std::logic_error& e) {
    throw Error(ErrorCode::ManifestMismatch, std::string("unreadable manifest: ") + e.what());
  }
  return m;
}

std::string manifest_path(const std::string& points_path) { return points_path + ".manifest.json"; }
std::string partial_path(const std::string& points_path) { return points_path + ".partial.jsonl"; }

std::optional<RunManifest> load_manifest(const std::string& points_path) {
  const std::string mp = manifest_path(points_path);
  if (!std::filesystem::exists(mp)) return std::nullopt;
  return RunManifest::from_json(read_file(mp));
}

std::vector<APoint> read_points_checked(const std::string& path) {
  if (auto m = load_manifest(path); m && !m->points_hash.empty()) {
    const std::string h = hex64(fnv1a(read_file(path)));
    if (h != m->points_hash)
      throw Error(ErrorCode::ChecksumMismatch, path + " hash " + h + " differs from manifest " + m->points_hash);
  }
  return read_points(path);
}

std::string config_snapshot(const ScanConfig& cfg) {
  json j;
  j["precision_mode"] = cfg.eval.precision_mode == PrecisionMode::compensated ? "compensated" : "standard";
  j["em_terms"] = cfg.eval.em_terms;
  j["max_depth"] = cfg.max_depth;
  j["max_segment_depth"] = cfg.max_segment_depth;
  j["phase_step_cap"] = num(cfg.phase_step_cap);
  j["log_step_cap"] = num(cfg.log_step_cap);
  j["boundary_eps"] = num(cfg.boundary_eps);
  j["boundary_dist"] = num(cfg.boundary_dist);
  j["cert_halfwidth"] = num(cfg.cert_halfwidth);
  j["newton_tol"] = num(cfg.newton_tol);
  j["newton_max_iter"] = cfg.newton_max_iter;
  j["residual_cap"] = num(cfg.residual_cap);
  return j.dump();
}

}  // namespace zap::io
