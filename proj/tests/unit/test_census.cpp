#include <doctest.h>

#include <cmath>
#include <map>

#include "zap/asymptotics.hpp"
#include "zap/census.hpp"
#include "zap/scan.hpp"
#include "zap/tunables.hpp"

using namespace zap;

namespace {

const std::vector<APoint>& points(int k, Complex a, double T) {
  static std::map<std::tuple<int, double, double, double>, std::vector<APoint>> cache;
  auto& v = cache[{k, a.real(), a.imag(), T}];
  if (v.empty()) v = scan_points(k, a, 1, T);
  return v;
}

}  // namespace

TEST_CASE("empty census") {
  const auto r = census(1, 1, 1000, 1000, {});
  CHECK(r.n1 + r.n2 + r.n3 == 0);
  CHECK(r.total == 0);
  CHECK(r.beta_excess == 0);
}

TEST_CASE("band edges count as central") {
  const double h = band_halfwidth(100);
  std::vector<APoint> pts(3);
  pts[0].beta = 0.5 + h;
  pts[1].beta = 0.5 - h;
  pts[2].beta = 0.5 + h + 0.01;
  for (auto& p : pts) p.gamma = 120;
  const auto r = census(1, 1, 100, 50, pts);
  CHECK(r.n3 == 2);
  CHECK(r.n1 == 1);
  CHECK(r.boundary.size() == 2);
}

TEST_CASE("exponential sum below the first point") {
  const auto& pts = points(1, 1, 50);
  REQUIRE(!pts.empty());
  const double T = pts.front().gamma;
  REQUIRE(T > 1);
  const auto r = expsum(1, 1, 2, T, pts);
  CHECK(r.observed == Complex(0));
  CHECK(r.used == 0);
  CHECK(r.predicted.real() == doctest::Approx(T / (2 * std::numbers::pi) * -std::pow(std::log(2.0), 2)));
}

TEST_CASE("clustering ladder") {
  const auto& pts = points(1, 1, 4000);
  double prev = 1;
  for (double T : {200.0, 500.0, 1000.0, 2000.0}) {
    const auto r = census(1, 1, T, T, pts);
    CAPTURE(T);
    CHECK(r.n1 + r.n2 + r.n3 == r.total);
    const double off = double(r.n1 + r.n2) / r.total;
    CHECK(off <= prev + tunables::kClusteringTolerance);
    prev = off;
    CHECK(r.beta_excess <= tunables::kBetaExcessCap * T * std::log(std::log(T)));
    CHECK(r.remainder_ratio <= tunables::kCountRemainderCap);
  }
}

TEST_CASE("beta sum") {
  const auto& pts = points(1, 2, 1000);
  const auto r = beta_sum_check(1, 2, tunables::kBetaShift, 500, 500, pts);
  CHECK(r.ratio <= tunables::kBetaSumCap);
  double sb = 0;
  int n = 0;
  for (const auto& p : pts)
    if (p.gamma > 500 && p.gamma < 1000) sb += p.beta, ++n;
  CHECK(r.observed - tunables::kBetaShift * n == doctest::Approx(sb).epsilon(1e-12));
  const auto z = beta_sum_check(1, 2, 5, 500, 0, pts);
  CHECK(z.observed == 0);
  CHECK(z.predicted == 0);
}

TEST_CASE("littlewood balance") {
  const auto r1 = littlewood_balance(1, 2, 100, 50, points(1, 2, 1000));
  CHECK(r1.ratio <= tunables::kLittlewoodCap);
  const auto r2 = littlewood_balance(1, {0, 1}, 200, 100, points(1, {0, 1}, 400));
  CHECK(r2.ratio <= tunables::kLittlewoodCap);
  CHECK_THROWS_AS(littlewood_balance(1, 0, 100, 50, {}), Error);
}

TEST_CASE("log-modulus integral on a smooth stretch") {
  // far right of the line the integrand is log|a - zeta'|, smooth; compare with a fine midpoint rule
  const Complex a(3, 0);
  const double got = log_modulus_integral(1, a, 30, 31, {});
  double mid = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double t = 30 + (i + 0.5) / n;
    mid += std::log(std::abs(a - zeta_jet(1, {0.5, t})[1])) / n;
  }
  CHECK(got == doctest::Approx(mid).epsilon(1e-7));
}
