#include <doctest.h>

#include <cmath>

#include "zap/evaluator.hpp"
#include "zap/regions.hpp"
#include "zap/rootscan.hpp"

using namespace zap;

TEST_CASE("right abscissa") {
  CHECK(find_e2(1, 1) == 2.0);
  CHECK(find_e2(1, 10) <= 1.5);
  // zeta''(2) = 1.989 > 1 > zeta''(2.5) = 0.582
  CHECK(find_e2(2, 1) == 2.5);
  CHECK(find_e2_zero(1) >= 1.5);
  CHECK_THROWS_AS(find_e2(1, 0), Error);
  CHECK_THROWS_AS(find_e2(0, 1), Error);
}

TEST_CASE("right region is free") {
  for (Complex a : {Complex(1, 0), Complex(0, 1), Complex(2, 0)}) {
    const double e2 = find_e2(1, a);
    for (double t = 1; t < 200; t += 0.37) CHECK(std::abs(zeta_jet(1, {e2, t})[1]) < std::abs(a));
    CHECK(winding(1, a, {e2, e2 + 3, 5, 60}) == 0);
  }
}

TEST_CASE("left abscissa") {
  double witness = 0;
  const double e1 = find_e1(1, 1, 1, 1000, &witness);
  CHECK(e1 <= -1);
  CHECK(witness > 2);
  const double e1z = find_e1(1, 0, 1, 1000);
  CHECK(e1z < 0);
  const double e1big = find_e1(1, 1e6, 1, 100);
  CHECK(e1big < find_e1(1, 1, 1, 100));
}

TEST_CASE("region bounds ordering") {
  const auto rb = region_bounds(1, {0, 1}, 1, 300);
  CHECK(rb.e1_strict <= rb.e1);
  CHECK(rb.e1 <= 0);
  CHECK(rb.e2 >= 1);
  CHECK(rb.e2 <= rb.e2_strict);
  const auto neg = region_bounds(1, {0, 1}, -300, -1);
  CHECK(neg.e1 == rb.e1);
}

TEST_CASE("trivial a-points approach -2n") {
  const auto t15 = trivial_apoint(1, 1, 15);
  REQUIRE(t15.root);
  CHECK(t15.winding == 1);
  CHECK(t15.root->beta == doctest::Approx(-29.4984805384546713).epsilon(1e-14));  // mpmath
  CHECK(std::abs(t15.root->beta + 30) < 0.51);
  CHECK(t15.root->gamma == 0);
  CHECK(t15.newton_residual <= 1e-9);
  const auto t20 = trivial_apoint(1, 1, 20);
  CHECK(t20.distance < t15.distance);
  // zeta' - 1 changes sign on (-31, -29)
  const double lo = zeta_jet(1, {-30.9, 0})[1].real() - 1, hi = zeta_jet(1, {-29.1, 0})[1].real() - 1;
  CHECK(lo * hi < 0);
}

TEST_CASE("trivial boxes below n_min") {
  const int nmin = find_trivial_nmin(1, 1);
  CHECK(nmin >= 2);
  CHECK(trivial_winding(1, 1, nmin) == 1);
  bool saw_error = false;
  for (int n = 2; n < nmin; ++n) {
    try {
      trivial_apoint(1, 1, n);
    } catch (const Error& e) {
      saw_error = true;
      CHECK(e.code() == ErrorCode::WindingNotOne);
    }
  }
  if (nmin > 2) CHECK(saw_error);
  CHECK_THROWS_AS(trivial_apoint(1, 1, 1), Error);
}
