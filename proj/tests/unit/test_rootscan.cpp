#include <doctest.h>

#include <cmath>

#include "zap/evaluator.hpp"
#include "zap/regions.hpp"
#include "zap/rootscan.hpp"
#include "zap/scan.hpp"
#include "zap/tunables.hpp"

using namespace zap;

TEST_CASE("winding against the dense phase scan") {
  // 1e-3 boundary sampling of zeta' gives exactly one zero in this rectangle
  CHECK(winding(1, 0, {-1, 3, 10, 30}) == 1);
  const auto r = locate_rect(1, 0, {-1, 3, 10, 30});
  REQUIRE(r.points.size() == 1);
  CHECK(std::abs(r.points[0].rho() - Complex(2.46316186945432128587, 23.2983204927628579020)) < 1e-9);
}

TEST_CASE("zeros of zeta' below height 50") {
  // boundary phase scan of [-1, 4] x [1, 50] at step 1e-3 finds five zeros; mpmath positions
  const Complex want[] = {{2.4631618694543212859, 23.298320492762857902},
                          {1.286496822269047697, 31.708250083115908605},
                          {2.3075700637226316416, 38.489983173078935851},
                          {1.3827636057116745758, 42.290964554596729819},
                          {0.96468562270568565053, 48.847159905068479085}};
  ScanWindow w;
  w.t_lo = 1;
  w.t_hi = 50;
  w.sigma_lo = -1;
  w.sigma_hi = 4;
  const auto r = locate(1, 0, w);
  REQUIRE(r.points.size() == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(std::abs(r.points[i].rho() - want[i]) < 1e-9);
    CHECK(r.points[i].residual <= 1e-9);
  }
  CHECK(scan_points(1, 0, 1, 50).size() == 5);
}

TEST_CASE("winding is additive") {
  for (Complex a : {Complex(0, 0), Complex(1, 0), Complex(0, 1)}) {
    const int whole = winding(1, a, {-1.5, 3, 5, 60});
    CHECK(whole == winding(1, a, {-1.5, 3, 5, 31.7}) + winding(1, a, {-1.5, 3, 31.7, 60}));
  }
}

TEST_CASE("empty window") {
  ScanWindow w;
  w.t_lo = w.t_hi = 20;
  CHECK(locate(1, 1, w).points.empty());
  CHECK(scan_points(1, 1, 20, 20).empty());
}

TEST_CASE("points are certified") {
  const auto pts = scan_points(1, 0, 1, 50);
  CHECK(pts.size() >= 5);
  for (const auto& p : pts) {
    CHECK(p.residual <= 1e-9);
    CHECK(p.box.contains(p.rho()));
    CHECK(p.gamma >= 1);
    CHECK(p.multiplicity == 1);
    CHECK(winding(1, 0, p.box) == 1);
    CHECK(std::abs(zeta_deriv(1, p.rho())) < 1e-8);
  }
  for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i - 1].gamma <= pts[i].gamma);
  const Rect big = search_rect(1, 0, 1, 50);
  CHECK(winding(1, 0, {big.sigma_lo, big.sigma_hi, 1, 50}) == static_cast<int>(pts.size()));
}

TEST_CASE("a known a-point of zeta' = 1") {
  const auto pts = scan_points(1, 1, 10, 20);
  bool found = false;
  for (const auto& p : pts) found = found || std::abs(p.rho() - Complex(0.265666763475548861, 14.375546555229324331)) < 1e-9;
  CHECK(found);
}

TEST_CASE("conjugate a-points") {
  // zeta^(k)(conj s) = conj zeta^(k)(s): the conj(a)-points below the axis mirror the a-points above
  const Complex a(0.5, 1.5);
  const auto up = locate_rect(1, a, search_rect(1, a, 20, 60));
  const Rect r = search_rect(1, a, 20, 60);
  const auto down = locate_rect(1, std::conj(a), {r.sigma_lo, r.sigma_hi, -r.t_hi, -r.t_lo});
  REQUIRE(up.points.size() == down.points.size());
  CHECK(!up.points.empty());
  for (std::size_t i = 0; i < up.points.size(); ++i) {
    const auto& p = up.points[i];
    const auto& q = down.points[down.points.size() - 1 - i];
    CHECK(std::abs(q.rho() - std::conj(p.rho())) < 1e-9);
  }
}

TEST_CASE("rectangles touching the pole") {
  CHECK_THROWS_AS(winding(1, 1, {0, 2, -1, 1}), Error);
}

TEST_CASE("strip counts") {
  CHECK(strip_count_check(1, 1, 100).ratio <= tunables::kStripCap);
  CHECK(strip_count_check(2, {0, 1}, 500).ratio <= tunables::kStripCap);
  const auto r = strip_count_check(1, 1, 100);
  const auto pts = scan_points(1, 1, 99, 102);
  int n = 0;
  for (const auto& p : pts) n += p.gamma >= 100 && p.gamma < 101;
  CHECK(r.count == n);
}

TEST_CASE("local expansion") {
  const Complex r1 = local_expansion_residual(1, 1, {0.5, 50});
  CHECK(std::abs(r1) / std::log(50.0) <= tunables::kLocalExpansionCap);
  const Complex r2 = local_expansion_residual(1, 0, {2, 100});
  CHECK(std::abs(r2) / std::log(100.0) <= tunables::kLocalExpansionCap);
  // with no roots nearby the residual is the log-derivative itself
  const Complex s(6, 40);
  const auto jet = zeta_jet(2, s);
  CHECK(std::abs(local_expansion_residual(1, 1, s, std::vector<APoint>{}) - jet[2] / (jet[1] - 1.0)) < 1e-12);
}

TEST_CASE("scan configuration") {
  ScanConfig bad;
  bad.max_depth = 0;
  CHECK_THROWS_AS(bad.validate(), Error);
}
