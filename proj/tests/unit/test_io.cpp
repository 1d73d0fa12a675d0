#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "zap/io.hpp"
#include "zap/scan.hpp"

using namespace zap;
namespace fs = std::filesystem;

namespace {

std::string scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "zap_unit_io";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  for (const auto& f : {p, fs::path(io::manifest_path(p.string())), fs::path(io::partial_path(p.string()))})
    fs::remove(f);
  return p.string();
}

}  // namespace

TEST_CASE("point round trip") {
  APoint p;
  p.k = 2;
  p.a = {0.1, -1.0 / 3};
  p.beta = 0.123456789012345678;
  p.gamma = 1234.56789012345678;
  p.residual = 3.2e-13;
  p.box = {0.1, 0.2, 1234.5, 1234.6};
  p.window_id = 17;
  const std::string line = io::point_to_json(p);
  const APoint q = io::point_from_json(line);
  CHECK(q.k == 2);
  CHECK(q.a == p.a);
  CHECK(q.beta == p.beta);
  CHECK(q.gamma == p.gamma);
  CHECK(q.box.t_hi == p.box.t_hi);
  CHECK(q.window_id == 17);
  CHECK(io::point_to_json(q) == line);
  CHECK_THROWS_AS(io::point_from_json("{\"k\":1}"), Error);
}

TEST_CASE("complex arguments") {
  CHECK(io::parse_complex("1,2") == Complex(1, 2));
  CHECK(io::parse_complex("-0.5") == Complex(-0.5, 0));
  CHECK_THROWS_AS(io::parse_complex("1,x"), Error);
  CHECK_THROWS_AS(io::parse_complex(""), Error);
}

TEST_CASE("window grid") {
  const auto g = window_grid(1, 26, 10);
  REQUIRE(g.size() == 3);
  CHECK(g[2].t_lo == 21);
  CHECK(g[2].t_hi == 26);
  CHECK(window_grid(5, 5).empty());
}

TEST_CASE("empty grid") {
  ScanJob job;
  job.t0 = job.t1 = 40;
  job.out = scratch("empty.jsonl");
  const auto r = run_scan(job);
  CHECK(r.finished);
  CHECK(io::read_file(job.out).empty());
  const auto m = io::load_manifest(job.out);
  REQUIRE(m);
  CHECK(m->grid.empty());
  CHECK(m->points_hash == io::hex64(io::fnv1a("")));
}

TEST_CASE("resume and checksums") {
  ScanJob job;
  job.k = 1;
  job.a = {0, 1};
  job.t0 = 10;
  job.t1 = 50;
  job.out = scratch("whole.jsonl");
  run_scan(job);
  const std::string whole = io::read_file(job.out);
  CHECK(!whole.empty());

  job.out = scratch("parts.jsonl");
  job.stop_after = 1;
  CHECK(!run_scan(job).finished);
  CHECK(!run_scan(job).finished);
  // a torn write after the last commit is discarded on resume
  {
    std::ofstream part(io::partial_path(job.out), std::ios::app);
    part << "{\"schema_version\":1,\"k\":1,\"a_re\":0,";
  }
  job.stop_after = -1;
  job.jobs = 4;
  CHECK(run_scan(job).finished);
  CHECK(io::read_file(job.out) == whole);
  // re-running a finished manifest changes nothing
  CHECK(run_scan(job).windows_run == 0);
  CHECK(io::read_file(job.out) == whole);

  CHECK(io::read_points_checked(job.out).size() == io::read_points(job.out).size());
  {
    std::string bytes = whole;
    bytes[bytes.size() / 2] = bytes[bytes.size() / 2] == '1' ? '2' : '1';
    std::ofstream out(job.out, std::ios::binary | std::ios::trunc);
    out << bytes;
  }
  try {
    io::read_points_checked(job.out);
    FAIL("expected ChecksumMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ChecksumMismatch);
  }

  ScanJob other = job;
  other.a = {1, 0};
  try {
    run_scan(other);
    FAIL("expected ManifestMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ManifestMismatch);
  }
  other = job;
  other.cfg.max_depth = 30;
  CHECK_THROWS_AS(run_scan(other), Error);
}

TEST_CASE("corrupted partial file") {
  ScanJob job;
  job.t0 = 10;
  job.t1 = 40;
  job.stop_after = 2;
  job.out = scratch("corrupt.jsonl");
  run_scan(job);
  {
    std::fstream f(io::partial_path(job.out), std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(20);
    f.put('9');
  }
  job.stop_after = -1;
  try {
    run_scan(job);
    FAIL("expected ChecksumMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ChecksumMismatch);
  }
}

TEST_CASE("bad scan jobs") {
  ScanJob job;
  job.t0 = 0.5;
  job.t1 = 10;
  job.out = scratch("bad.jsonl");
  CHECK_THROWS_AS(run_scan(job), Error);
  job.t0 = 1;
  job.jobs = 0;
  CHECK_THROWS_AS(run_scan(job), Error);
}
