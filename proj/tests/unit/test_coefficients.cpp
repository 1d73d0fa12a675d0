#include <doctest.h>

#include <cmath>

#include "zap/coefficients.hpp"
#include "zap/errors.hpp"

using namespace zap;

namespace {
const double L2 = std::log(2.0), L3 = std::log(3.0);

bool close(Complex got, Complex want) {
  if (std::abs(want) > 1e-14) return std::abs(got - want) <= 1e-12 * std::abs(want);
  return std::abs(got) <= 1e-14;
}
}  // namespace

TEST_CASE("small integer indices") {
  CHECK(alpha(1, Complex(1), std::int64_t(2)).real() == doctest::Approx(-L2 * L2).epsilon(1e-14));
  CHECK(alpha(1, Complex(1), std::int64_t(4)).real() == doctest::Approx(-4 * L2 * L2 + L2 * L2 * L2).epsilon(1e-14));
  CHECK(alpha(1, Complex(1), std::int64_t(4)).real() == doctest::Approx(-1.5887874).epsilon(1e-7));
  CHECK(alpha(1, Complex(1), 2.5) == Complex(0));
  CHECK(alpha(1, Complex(1), std::int64_t(1)) == Complex(0));
  // x = 6: (6), (2,3), (3,2) with a = i
  const Complex a(0, 1);
  const Complex want = -std::pow(std::log(6.0), 2) / a + (L2 * L2 * L3 + L3 * L3 * L2) / (a * a);
  CHECK(std::abs(alpha(1, a, std::int64_t(6)) - want) < 1e-14);
  CHECK_THROWS_AS(alpha(1, Complex(0), std::int64_t(2)), Error);
}

TEST_CASE("a = 0 indices") {
  CHECK(alpha_zero(1, 1.0) == doctest::Approx(-L2).epsilon(1e-14));
  CHECK(alpha_zero(1, 1.0 / 3) == 0);
  // l = 0 with n0 = 3 and l = 1 with (n0, n1) = (2, 3)
  CHECK(alpha_zero(1, 1.5) == doctest::Approx(-L3 * L3 / L2 + L3).epsilon(1e-14));
  CHECK(alpha_zero(1, 1.5) == doctest::Approx(-0.6426469917).epsilon(1e-9));
  CHECK(alpha_zero(1, std::sqrt(2.0)) == 0);
}

TEST_CASE("index normalization") {
  const auto i = CoeffIndex::make(12, 3);
  CHECK(i.numerator == 3);
  CHECK(i.log2_denominator == 1);
  CHECK(i.value() == 1.5);
  CoeffIndex j;
  REQUIRE(CoeffIndex::from_double(0.375, j));
  CHECK(j.numerator == 3);
  CHECK(j.log2_denominator == 3);
  CHECK(CoeffIndex::make(3, 1) < CoeffIndex::make(2));
  CHECK_THROWS_AS(CoeffIndex::make(0), Error);
}

TEST_CASE("enumeration matches series division") {
  for (auto [k, a] : {std::pair<int, Complex>{1, 1}, {2, Complex(0, 1)}, {1, Complex(0, 1)}, {2, 1}, {3, Complex(-2, 0.5)}}) {
    const auto oracle = alpha_oracle(k, a, 100);
    const auto table = alpha_table(k, a, 100);
    for (std::int64_t x = 2; x <= 100; ++x) {
      const auto it = oracle.entries.find(CoeffIndex::make(x));
      const Complex want = it == oracle.entries.end() ? Complex(0) : it->second;
      CAPTURE(k);
      CAPTURE(x);
      CHECK(close(alpha(k, a, x), want));
    }
    for (const auto& [idx, v] : table.entries) CHECK(idx.log2_denominator == 0);
    CHECK(table.entries.size() == oracle.entries.size());
  }
}

TEST_CASE("a = 0 enumeration matches series division") {
  for (int k : {1, 2}) {
    const auto oracle = alpha_oracle(k, 0, 100);
    const auto table = alpha_table(k, 0, 100);
    for (const auto& [idx, want] : oracle.entries) {
      CAPTURE(idx.value());
      CHECK(close(alpha_zero(k, idx), want));
    }
    for (const auto& [idx, got] : table.entries) {
      const auto it = oracle.entries.find(idx);
      CHECK(close(got, it == oracle.entries.end() ? Complex(0) : it->second));
    }
    // every dyadic index with numerator <= 100 and at most 5 halvings
    for (std::int64_t num = 1; num <= 100; num += 2)
      for (int e = 0; e <= 5; ++e) {
        const auto idx = CoeffIndex::make(num, e);
        const auto it = oracle.entries.find(idx);
        CHECK(close(alpha_zero(k, idx), it == oracle.entries.end() ? Complex(0) : it->second));
      }
  }
}

TEST_CASE("oracle limits") {
  CHECK_THROWS_AS(alpha_oracle(1, 1, 20000), Error);
  CHECK_THROWS_AS(alpha_oracle(1, 0, 1000), Error);
  CHECK_THROWS_AS(alpha_table(0, 1, 10), Error);
}
