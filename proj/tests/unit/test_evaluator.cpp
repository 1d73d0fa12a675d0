#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "zap/evaluator.hpp"
#include "zap/tunables.hpp"

using namespace zap;

namespace {

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

struct Frozen {
  Complex s;
  Complex d[4];  // zeta, zeta', zeta'', zeta'''
};

// 40-digit mpmath reference values
const Frozen kFrozen[] = {
    {{0.5, 50},
     {{-0.081712108320979975048, 0.33079219403866129559},
      {1.6157796138563030642, 0.03514350641749264825},
      {-3.1544714959509999717, -0.884059776098483269},
      {6.7208214026941939372, 2.8179637550068262967}}},
    {{-5, 10},
     {{4.4259777768935472927, 16.213350107031267978},
      {5.4704602842494159973, -11.738952235908334339},
      {-10.143767028032580544, 5.3142494859787085811},
      {10.882096042682282697, 1.7022989422702164397}}},
    {{0.3, 100},
     {{3.6680751248517151529, 0.031450241790270148118},
      {-6.2500600281722592995, -0.33450288488705679988},
      {16.270881467309160811, 0.86884518122908821493},
      {-43.395077181085258686, -1.9310879025005945201}}},
    {{3, 1000},
     {{0.96616475103459261924, -0.077949065695269886267},
      {0.015780703636659631413, 0.037876963593265320072},
      {-0.0013784294194127337474, -0.0062802408259396329427},
      {-0.011931767489419433666, -0.023241034834630607887}}},
    {{-2, 500},
     {{-53969.184222402342677, 23392.13013807151841},
      {232813.81623505045896, -107082.39128488611661},
      {-1006341.0399393189586, 484505.82053675506509},
      {4357827.4316568405813, -2173707.7885017560542}}},
    {{-10, 3},
     {{-0.43917979013565689485, 0.0044681275606814779888},
      {0.24873058574974678116, 0.56522953175980870801},
      {0.55397925940279583175, -0.6449258488750829008},
      {-1.1277356528559669398, -0.24954518842567372895}}},
    {{10, 5},
     {{0.99908693317297636044, 0.00032238181902846599083},
      {0.00062756938661858542292, -0.00022783995093448352109},
      {-0.00042902592521250021787, 0.00016257595265465388462},
      {0.00029064989662183222436, -0.00011755771307024262455}}},
};

const Frozen kHigh = {{0.5, 2000},
                      {{0.79061023332653466823, 0.017205108684126070054},
                       {-2.2865522654962123278, 0.33636747862724731186},
                       {16.286286957952671854, -1.870642846111936514},
                       {-102.9719687464884146, 17.719839035295733319}}};

}  // namespace

TEST_CASE("classical values") {
  CHECK(rel(zeta({2, 0}), std::numbers::pi * std::numbers::pi / 6) < 1e-14);
  CHECK(rel(zeta({-1, 0}), -1.0 / 12) < 1e-13);
  CHECK(rel(zeta({0, 0}), -0.5) < 1e-14);
  CHECK(std::abs(zeta({-2, 0})) < 1e-14);
}

TEST_CASE("zeta against reference values") {
  for (const auto& f : kFrozen) {
    CAPTURE(f.s);
    CHECK(rel(zeta(f.s), f.d[0]) < 1e-12);
  }
}

TEST_CASE("jet against reference values") {
  for (const auto& f : kFrozen) {
    const auto jet = zeta_jet(3, f.s);
    // standard mode loses about t * 1e-15 in the phase of n^-s
    const double tol = std::max(1e-12, 2e-15 * std::abs(f.s.imag()));
    for (int k = 0; k < 4; ++k) {
      CAPTURE(f.s);
      CAPTURE(k);
      CHECK(rel(jet[k], f.d[k]) < tol);
    }
  }
}

TEST_CASE("jet at height 2000") {
  const auto jet = zeta_jet(3, kHigh.s);
  for (int k = 0; k < 4; ++k) CHECK(rel(jet[k], kHigh.d[k]) < 1e-10);
  EvalConfig cfg;
  cfg.precision_mode = PrecisionMode::compensated;
  const auto jc = zeta_jet(3, kHigh.s, cfg);
  for (int k = 0; k < 4; ++k) CHECK(rel(jc[k], kHigh.d[k]) < 1e-14);
}

TEST_CASE("cauchy route against reference values") {
  for (const auto& f : kFrozen) {
    if (std::abs(f.s.imag()) > 600) continue;
    for (int k = 0; k < 4; ++k) {
      CAPTURE(f.s);
      CAPTURE(k);
      CHECK(rel(zeta_deriv(k, f.s), f.d[k]) < 1e-10);
    }
  }
}

TEST_CASE("derivatives on the real axis") {
  CHECK(rel(zeta_deriv(1, {2, 0}), -0.9375482543158437537) < 1e-12);
  CHECK(rel(zeta_deriv(2, {3, 0}), 0.23974691730538718424) < 1e-12);
  // direct partial sum of (log n)^2 n^-3 with integral tail
  double s = 0;
  const long N = 2000000;
  for (long n = 2; n <= N; ++n) s += std::pow(std::log(double(n)), 2) / std::pow(double(n), 3);
  const double L = std::log(double(N));
  s += (2 * L * L + 2 * L + 1) / (4.0 * double(N) * double(N));
  CHECK(rel(zeta_deriv(2, {3, 0}), s) < 1e-10);
}

TEST_CASE("order zero is zeta") {
  for (Complex s : {Complex(0.5, 14), Complex(-3, 7), Complex(2.5, -40), Complex(0.1, 0.2)})
    CHECK(rel(zeta_deriv(0, s), zeta(s)) < 1e-12);
}

TEST_CASE("functional equation and log-gamma") {
  for (Complex s : {Complex(0.3, 20), Complex(-4, 3), Complex(2, 100), Complex(0.7, -9)})
    CHECK(rel(zeta(s), chi(s) * zeta(1.0 - s)) < 1e-11);
  CHECK(rel(log_gamma({3, 40}), {-52.689155060822636631, 111.4051324154599655}) < 1e-14);
  CHECK(rel(log_gamma({5, 0}), std::log(24.0)) < 1e-14);
}

TEST_CASE("conjugate symmetry") {
  for (Complex s : {Complex(0.4, 33), Complex(-6, 12)}) {
    const auto up = zeta_jet(2, s), down = zeta_jet(2, std::conj(s));
    for (int k = 0; k <= 2; ++k) CHECK(rel(down[k], std::conj(up[k])) < 1e-13);
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(zeta({1, 0}), Error);
  try {
    zeta_deriv(1, {1, 0});
    FAIL("expected PoleAtOne");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PoleAtOne);
  }
  EvalConfig bad;
  bad.circle_nodes = 24;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = {};
  bad.em_terms = 0;
  CHECK_THROWS_AS(bad.validate(), Error);
  CHECK_THROWS_AS(zeta_deriv(-1, {2, 0}), Error);
}

TEST_CASE("precision from the environment") {
  setenv("ZAP_PRECISION", "compensated", 1);
  CHECK(config_from_env().precision_mode == PrecisionMode::compensated);
  setenv("ZAP_PRECISION", "fast", 1);
  CHECK_THROWS_AS(config_from_env(), Error);
  unsetenv("ZAP_PRECISION");
  CHECK(config_from_env().precision_mode == PrecisionMode::standard);
}

TEST_CASE("left asymptotic") {
  auto ratio = [](int k, Complex s) { return zeta_deriv(k, 1.0 - s) / left_asymptotic(k, s); };
  // mpmath: zeta^(k)(1-s) / main term
  CHECK(rel(ratio(1, {10, 5}), {0.130942461916534012, -0.475343937842799235}) < 1e-10);
  CHECK(rel(ratio(3, {20, 10}), {-0.127969725184943355, -0.0828837755551774456}) < 1e-10);
  const double r1 = std::abs(ratio(1, {10, 5}) - 1.0);
  const double r2 = std::abs(ratio(1, {30, 2}) - 1.0);
  CHECK(r2 < r1);
  // the deviation is the first correction (1 - (log 2 pi + i pi/2)/log s)^k
  const Complex c(std::log(2 * std::numbers::pi), std::numbers::pi / 2);
  for (auto [k, s] : {std::pair<int, Complex>{1, {10, 5}}, {1, {30, 2}}, {3, {20, 10}}, {2, {60, 40}}}) {
    CAPTURE(k);
    CAPTURE(s);
    const Complex corr = std::pow(1.0 - c / std::log(s), k);
    CHECK(std::abs(ratio(k, s) / corr - 1.0) * std::abs(std::log(s)) < 1.0);
    CHECK(std::abs(ratio(k, s) - 1.0) * std::abs(std::log(s)) < 3.0 * k);
  }
  CHECK_THROWS_AS(left_asymptotic(1, {0.5, 10}), Error);
}

TEST_CASE("growth envelope") {
  CHECK(GrowthEnvelope::mu_bar(2) == 0);
  CHECK(GrowthEnvelope::mu_bar(0.5) == doctest::Approx(0.25));
  CHECK(GrowthEnvelope::mu_bar(-1) == doctest::Approx(1.5));
  GrowthEnvelope env;
  double worst = 0;
  for (double sigma : {-1.0, 0.0, 0.5, 1.0, 2.0})
    for (double t = 10; t < 1000; t *= 1.37) {
      const double v = std::abs(zeta_jet(1, {sigma, t})[1]);
      worst = std::max(worst, v / (env.bound(sigma, t) * std::log(t)));
    }
  CHECK(worst < tunables::kGrowthConstantCap);
}
