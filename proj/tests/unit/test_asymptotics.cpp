#include <doctest.h>

#include <cmath>
#include <numbers>

#include "zap/asymptotics.hpp"
#include "zap/errors.hpp"

using namespace zap;

namespace {
constexpr double kPi = std::numbers::pi, kE = std::numbers::e;
}

TEST_CASE("counting main term") {
  CHECK(std::abs(count_main(1, 1, 2 * kPi * kE)) < 1e-13);
  CHECK(std::abs(count_main(1, 0, 4 * kPi * kE)) < 1e-13);
  CHECK(count_main(1, 1, 100) == doctest::Approx(28.127343587325349).epsilon(1e-13));
  CHECK(count_main(2, {0, 1}, 100) == count_main(1, 1, 100));
}

TEST_CASE("window main term") {
  CHECK(window_count_main(1, 1, 500, 0) == 0);
  const double whole = window_count_main(1, 1, 300, 700);
  CHECK(whole == doctest::Approx(window_count_main(1, 1, 300, 250) + window_count_main(1, 1, 550, 450)).epsilon(1e-13));
  const double a = window_count_main(1, 1, 1000, 1000), b = window_count_main_expanded(1, 1, 1000, 1000);
  CHECK(std::abs(a - b) <= 1e-10 * std::abs(a));
  CHECK(a == doctest::Approx(868.37683546561891).epsilon(1e-13));
}

TEST_CASE("exponential sum main term") {
  CHECK(expsum_main(1, 1, 2, 500).real() == doctest::Approx(-38.233236044240471).epsilon(1e-13));
  CHECK(expsum_main(1, 1, 2.5, 500) == Complex(0));
  CHECK(expsum_main(1, 1, 2, 0) == Complex(0));
  CHECK(expsum_main(1, 0, 1.5, 500).real() == doctest::Approx(500 / (2 * kPi) * -0.6426469917).epsilon(1e-9));
}

TEST_CASE("band halfwidth") {
  CHECK(band_halfwidth(1000) == doctest::Approx(0.54071337456005997).epsilon(1e-14));
  double prev = band_halfwidth(1e3);
  for (double T : {1e4, 1e5, 1e6}) {
    CHECK(band_halfwidth(T) < prev);
    prev = band_halfwidth(T);
  }
  CHECK(band_halfwidth(20) > 0);
  try {
    band_halfwidth(std::exp(kE));
    FAIL("expected DomainTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainTooSmall);
  }
}

TEST_CASE("beta sum main term") {
  CHECK(beta_sum_main(1, 2, 5, 500, 0) == 0);
  CHECK(beta_sum_main(1, 2, 5, 500, 500) == doctest::Approx(2191.7131150365972).epsilon(1e-13));
  // |a| = 1 drops the log|a| term
  const double U = 300, T = 700;
  CHECK(beta_sum_main(1, {0, 1}, 5, T, U) == doctest::Approx(beta_sum_main(1, 1, 5, T, U)).epsilon(1e-15));
  CHECK(beta_sum_main(1, 2, 5, T, U) ==
        doctest::Approx(beta_sum_main(1, 1, 5, T, U) - U * std::log(2.0) / (2 * kPi)).epsilon(1e-14));
}

TEST_CASE("reports") {
  const auto r = make_report(10, 7, 2);
  CHECK(r.remainder == 3);
  CHECK(r.ratio == 1.5);
}
