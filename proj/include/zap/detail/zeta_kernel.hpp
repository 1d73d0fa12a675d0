#pragma once

// Precision-generic jet kernel for zeta^(m)(s), m = 0..K.
//
// Instantiated for double (the scanning kernel) and for Boost.Multiprecision
// complex numbers (certification of roots whose residual would otherwise be
// swamped by the size of zeta^(k) far to the left).
//
//   Re s >= 1/2 or |s| < 1/2 : Euler-Maclaurin, differentiated term by term.
//   otherwise                : zeta(s) = A(s) S(s) zeta(1-s) with
//                              A = (2 pi)^s Gamma(1-s) / pi, S = sin(pi s/2),
//                              expanded with the trinomial Leibniz rule.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <type_traits>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>

namespace zap::detail {

inline constexpr int kMaxJet = 12;  // supports derivatives 0..11

template <class Real>
struct KernelConstants {
  Real pi, half_pi, log_2pi, log_pi, half_log_2pi, eps;
  int n_min = 20;
  Real stirling_min_re = 10;
  std::vector<Real> bern_ratio;     // [j] = B_{2j} / (2j)!, j >= 1
  std::vector<Real> stirling_coef;  // [j] = B_{2j} / (2j (2j-1)), j >= 1
  std::vector<double> log_table;    // log n for double kernels
  std::vector<double> log_table_lo; // log n - log_table[n]
  std::array<std::array<Real, kMaxJet>, kMaxJet> binom{};
  std::array<Real, 2 * kMaxJet + 2> factorial{};
};

// log n - hi, from one Newton step in extended precision.
inline double log_residual(long n, double hi) {
  const long double e = std::exp(static_cast<long double>(hi));
  return static_cast<double>((static_cast<long double>(n) - e) / e);
}

template <class Real>
KernelConstants<Real> make_constants() {
  using Wide = std::conditional_t<std::is_same_v<Real, double>, long double, Real>;
  KernelConstants<Real> c;
  c.pi = boost::math::constants::pi<Real>();
  c.half_pi = c.pi / 2;
  using std::log;
  c.log_2pi = log(2 * c.pi);
  c.log_pi = log(c.pi);
  c.half_log_2pi = c.log_2pi / 2;
  c.eps = std::numeric_limits<Real>::epsilon();
  const int digits = std::numeric_limits<Real>::digits10;
  if constexpr (std::is_same_v<Real, double>) {
    c.n_min = 20;
    c.stirling_min_re = 10;
  } else {
    c.n_min = static_cast<int>(std::ceil(digits * 2.302585093 / 6.283185307)) + 5;
    c.stirling_min_re = Real(static_cast<int>(0.37 * digits) + 2);
  }
  const int em_max = std::is_same_v<Real, double> ? 90 : 4 * digits;
  const int st_max = std::is_same_v<Real, double> ? 24 : 2 * digits;
  c.bern_ratio.assign(1, Real(0));
  c.stirling_coef.assign(1, Real(0));
  Wide fact = 1;
  for (int j = 1; j <= std::max(em_max, st_max); ++j) {
    fact *= Wide(2 * j - 1);
    fact *= Wide(2 * j);
    const Wide b = boost::math::bernoulli_b2n<Wide>(j);
    if (j <= em_max) c.bern_ratio.push_back(static_cast<Real>(b / fact));
    if (j <= st_max) c.stirling_coef.push_back(static_cast<Real>(b / Wide(2 * j * (2 * j - 1))));
  }
  if constexpr (std::is_same_v<Real, double>) {
    c.log_table.resize(1 << 16);
    c.log_table_lo.resize(1 << 16);
    for (std::size_t n = 1; n < c.log_table.size(); ++n) {
      c.log_table[n] = std::log(double(n));
      c.log_table_lo[n] = log_residual(n, c.log_table[n]);
    }
  }
  for (int n = 0; n < kMaxJet; ++n) {
    c.binom[n][0] = 1;
    for (int r = 1; r <= n; ++r)
      c.binom[n][r] = c.binom[n - 1][r - 1] + (r < n ? c.binom[n - 1][r] : Real(0));
  }
  c.factorial[0] = 1;
  for (std::size_t i = 1; i < c.factorial.size(); ++i) c.factorial[i] = c.factorial[i - 1] * Real(int(i));
  return c;
}

template <class Real>
const KernelConstants<Real>& constants() {
  static const KernelConstants<Real> c = make_constants<Real>();
  return c;
}

template <class Real>
Real log_of(const KernelConstants<Real>& c, int n) {
  if constexpr (std::is_same_v<Real, double>) {
    if (static_cast<std::size_t>(n) < c.log_table.size()) return c.log_table[n];
    return std::log(double(n));
  } else {
    using std::log;
    return log(Real(n));
  }
}

// n^{-s} with the phase t log n carried in double-double and reduced mod 2 pi.
inline std::complex<double> power_dd(double sig, double t, double hi, double lo) {
  constexpr double two_pi_hi = 6.283185307179586232;
  constexpr double two_pi_lo = 2.4492935982947064e-16;
  const double p = t * hi;
  const double e = std::fma(t, hi, -p) + t * lo;
  const double k = std::nearbyint(p / two_pi_hi);
  const double r = std::fma(-k, two_pi_lo, std::fma(-k, two_pi_hi, p)) + e;
  return std::polar(std::exp(-sig * (hi + lo)), -r);
}

// Error-free accumulation for the compensated mode.
struct TwoSumAccumulator {
  double hi = 0, lo = 0;
  void add(double x) {
    const double s = hi + x;
    const double bp = s - hi;
    lo += (hi - (s - bp)) + (x - bp);
    hi = s;
  }
  double value() const { return hi + lo; }
};

// zeta^(m)(s), m = 0..K, by Euler-Maclaurin. Returns the relative size of the
// last correction that was added (convergence diagnostic).
template <class Real, class Cx>
Real em_jet(const Cx& s, int K, int em_min, bool compensated, Cx* out) {
  using std::abs;
  using std::ceil;
  using std::exp;
  const auto& c = constants<Real>();
  const Real sig = real(s);
  const Real t = imag(s);
  const double t_abs = static_cast<double>(abs(t));
  const int N = c.n_min + static_cast<int>(std::ceil(1.3 * t_abs / 6.283185307179586));

  std::array<Cx, kMaxJet> sum;
  for (int m = 0; m <= K; ++m) sum[m] = Cx(Real(0), Real(0));
  sum[0] = Cx(Real(1), Real(0));

  if constexpr (std::is_same_v<Real, double>) {
    if (compensated) {
      std::array<TwoSumAccumulator, kMaxJet> re{}, im{};
      re[0].add(1.0);
      for (int n = 2; n < N; ++n) {
        const double ln = log_of(c, n);
        const double lo = static_cast<std::size_t>(n) < c.log_table_lo.size() ? c.log_table_lo[n]
                                                                               : log_residual(n, ln);
        const Cx p = power_dd(sig, t, ln, lo);
        double w = 1;
        for (int m = 0; m <= K; ++m) {
          re[m].add(p.real() * w);
          im[m].add(p.imag() * w);
          w *= -ln;
        }
      }
      for (int m = 0; m <= K; ++m) sum[m] = Cx(re[m].value(), im[m].value());
    } else {
      for (int n = 2; n < N; ++n) {
        const double ln = log_of(c, n);
        const Cx p = std::polar(std::exp(-sig * ln), -t * ln);
        double w = 1;
        for (int m = 0; m <= K; ++m) {
          sum[m] += p * w;
          w *= -ln;
        }
      }
    }
  } else {
    for (int n = 2; n < N; ++n) {
      const Real ln = log_of(c, n);
      const Cx p = exp(Cx(-sig * ln, -t * ln));
      Real w = 1;
      for (int m = 0; m <= K; ++m) {
        sum[m] += p * w;
        w *= -ln;
      }
    }
  }

  const Real lnN = log_of(c, N);
  const Real Nr = Real(N);
  Cx pN = exp(Cx(-sig * lnN, -t * lnN));  // N^{-s}
  if constexpr (std::is_same_v<Real, double>) {
    if (compensated) {
      const double lo = static_cast<std::size_t>(N) < c.log_table_lo.size() ? c.log_table_lo[N]
                                                                             : log_residual(N, lnN);
      pN = power_dd(sig, t, lnN, lo);
    }
  }
  std::array<Real, kMaxJet + 1> neg_ln_pow;     // (-log N)^i
  neg_ln_pow[0] = 1;
  for (int i = 1; i <= K; ++i) neg_ln_pow[i] = neg_ln_pow[i - 1] * (-lnN);

  for (int m = 0; m <= K; ++m) sum[m] += pN * (neg_ln_pow[m] / 2);

  // N^{1-s} / (s - 1)
  {
    const Cx u = s - Real(1);
    const Cx inv_u = Real(1) / u;
    const Cx e = pN * Nr;
    std::array<Cx, kMaxJet> inv_jet;  // d^j (1/u) = (-1)^j j! / u^{j+1}
    Cx pw = inv_u;
    for (int j = 0; j <= K; ++j) {
      inv_jet[j] = pw * ((j % 2 ? Real(-1) : Real(1)) * c.factorial[j]);
      pw *= inv_u;
    }
    for (int m = 0; m <= K; ++m) {
      Cx acc(Real(0), Real(0));
      for (int i = 0; i <= m; ++i) acc += inv_jet[m - i] * (c.binom[m][i] * neg_ln_pow[i]);
      sum[m] += e * acc;
    }
  }

  // Bernoulli corrections beta_j (s)_{2j-1} N^{-s-2j+1}; poly holds the Taylor
  // coefficients of the rising factorial at s, divided by N^{2j-2}.
  std::array<Cx, kMaxJet> poly;
  for (int i = 0; i <= K; ++i) poly[i] = Cx(Real(0), Real(0));
  poly[0] = s;
  if (K >= 1) poly[1] = Cx(Real(1), Real(0));
  const Real inv_N2 = Real(1) / (Nr * Nr);
  const Cx npow = pN / Nr;  // N^{-s-1}

  Real scale_w = 1 / (abs(lnN) + 1);
  auto weighted_norm = [&](const std::array<Cx, kMaxJet>& v) {
    Real acc = 0, w = 1;
    for (int m = 0; m <= K; ++m) {
      acc += abs(v[m]) * w;
      w *= scale_w;
    }
    return acc;
  };

  Real diag = 0;
  Real prev = std::numeric_limits<Real>::max();
  const int jmax = static_cast<int>(c.bern_ratio.size()) - 1;
  std::array<Cx, kMaxJet> term;
  for (int j = 1; j <= jmax; ++j) {
    const Cx base = npow * c.bern_ratio[j];
    for (int m = 0; m <= K; ++m) {
      Cx acc(Real(0), Real(0));
      for (int i = 0; i <= m; ++i)
        acc += poly[i] * (c.binom[m][i] * c.factorial[i] * neg_ln_pow[m - i]);
      term[m] = base * acc;
    }
    const Real tn = weighted_norm(term);
    const Real sn = weighted_norm(sum);
    const Real rel = sn > 0 ? tn / sn : tn;
    if (j > em_min && rel > prev) break;  // asymptotic series turned
    for (int m = 0; m <= K; ++m) sum[m] += term[m];
    diag = rel;
    prev = rel;
    if (j >= em_min && rel <= c.eps / 4) break;

    // multiply by (s + 2j - 1 + h)(s + 2j + h)
    for (Real shift : {Real(2 * j - 1), Real(2 * j)}) {
      const Cx cst = s + shift;
      for (int i = K; i >= 1; --i) poly[i] = poly[i] * cst + poly[i - 1];
      poly[0] = poly[0] * cst;
    }
    for (int i = 0; i <= K; ++i) poly[i] *= inv_N2;  // keeps the scaled product bounded
  }

  for (int m = 0; m <= K; ++m) out[m] = sum[m];
  return diag;
}

// d^m/dz^m log Gamma(z), m = 0..K (principal branch for Re z > 0).
template <class Real, class Cx>
void loggamma_jet(Cx z, int K, Cx* out) {
  using std::abs;
  using std::log;
  const auto& c = constants<Real>();
  std::array<Cx, kMaxJet> shift;
  for (int m = 0; m <= K; ++m) shift[m] = Cx(Real(0), Real(0));
  while (real(z) < c.stirling_min_re) {
    shift[0] += log(z);
    const Cx iz = Real(1) / z;
    Cx pw = iz;
    for (int m = 1; m <= K; ++m) {
      // d^m log z = (-1)^(m-1) (m-1)! / z^m
      shift[m] += pw * ((m % 2 ? Real(1) : Real(-1)) * c.factorial[m - 1]);
      pw *= iz;
    }
    z += Real(1);
  }

  const Cx lw = log(z);
  const Cx iw = Real(1) / z;
  out[0] = (z - Real(0.5)) * lw - z + c.half_log_2pi;
  if (K >= 1) out[1] = lw - iw * Real(0.5);
  {
    Cx pw = iw;  // iw^(m-1)
    for (int m = 2; m <= K; ++m) {
      const Real sgn = m % 2 ? Real(-1) : Real(1);
      out[m] = pw * (sgn * c.factorial[m - 2]) + pw * iw * (sgn * Real(0.5) * c.factorial[m - 1]);
      pw *= iw;
    }
  }

  const Cx iw2 = iw * iw;
  Cx pw = iw;  // z^{-(2j-1)}
  const int jmax = static_cast<int>(c.stirling_coef.size()) - 1;
  for (int j = 1; j <= jmax; ++j) {
    Real biggest = 0;
    Cx p = pw;
    Real ff = 1;  // (2j-1)(2j)...(2j+m-2)
    for (int m = 0; m <= K; ++m) {
      const Cx term = p * (c.stirling_coef[j] * ff * (m % 2 ? Real(-1) : Real(1)));
      out[m] += term;
      const Real denom = abs(out[m]);
      biggest = std::max(biggest, denom > 0 ? Real(abs(term) / denom) : Real(abs(term)));
      ff *= Real(2 * j - 1 + m);
      p *= iw;
    }
    if (biggest <= c.eps / 4) break;
    pw *= iw2;
  }

  for (int m = 0; m <= K; ++m) out[m] -= shift[m];
}

// log sin(w), stable for large |Im w|.
template <class Real, class Cx>
Cx log_sin(const Cx& w) {
  using std::exp;
  using std::log;
  using std::sin;
  const Real y = imag(w);
  if (y > 0) {
    const Cx q = exp(Cx(Real(-2) * y, Real(2) * real(w)));  // e^{2iw}
    return Cx(y, -real(w)) + log((q - Real(1)) * Cx(Real(0), Real(-0.5)));
  }
  if (y < 0) {
    const Cx q = exp(Cx(Real(2) * y, Real(-2) * real(w)));  // e^{-2iw}
    return Cx(-y, real(w)) + log((Real(1) - q) * Cx(Real(0), Real(-0.5)));
  }
  return log(sin(w));
}

template <class Real, class Cx>
Cx cot_stable(const Cx& w) {
  using std::cos;
  using std::exp;
  using std::sin;
  const Real y = imag(w);
  const Cx i(Real(0), Real(1));
  if (y > 0) {
    const Cx q = exp(Cx(Real(-2) * y, Real(2) * real(w)));
    return i * (q + Real(1)) / (q - Real(1));
  }
  if (y < 0) {
    const Cx q = exp(Cx(Real(2) * y, Real(-2) * real(w)));
    return i * (Real(1) + q) / (Real(1) - q);
  }
  return cos(w) / sin(w);
}

// zeta^(m)(s) via the functional equation; intended for Re s < 1/2.
template <class Real, class Cx>
Real reflect_jet(const Cx& s, int K, int em_min, bool compensated, Cx* out) {
  using std::abs;
  using std::cos;
  using std::exp;
  using std::sin;
  const auto& c = constants<Real>();
  const Cx z = Real(1) - s;

  std::array<Cx, kMaxJet> zeta_z, lg, L, bell;
  const Real diag = em_jet<Real, Cx>(z, K, em_min, compensated, zeta_z.data());
  for (int l = 1; l <= K; l += 2) zeta_z[l] = -zeta_z[l];  // d^l/ds^l zeta(1-s)

  loggamma_jet<Real, Cx>(z, K, lg.data());
  L[0] = s * c.log_2pi - c.log_pi + lg[0];
  if (K >= 1) L[1] = c.log_2pi - lg[1];
  for (int m = 2; m <= K; ++m) L[m] = (m % 2 ? -lg[m] : lg[m]);

  // complete Bell polynomials: (d^n A)/A
  bell[0] = Cx(Real(1), Real(0));
  for (int n = 1; n <= K; ++n) {
    Cx acc(Real(0), Real(0));
    for (int i = 0; i < n; ++i) acc += L[i + 1] * bell[n - 1 - i] * c.binom[n - 1][i];
    bell[n] = acc;
  }

  const Cx w = s * c.half_pi;
  std::array<Cx, kMaxJet> a_jet, s_jet;  // A^(i), S^(j) up to a common factor
  Real hp = 1;
  if (abs(imag(w)) < Real(30)) {
    const Cx A = exp(L[0]);
    const Cx sw = sin(w), cw = cos(w);
    for (int i = 0; i <= K; ++i) a_jet[i] = A * bell[i];
    for (int j = 0; j <= K; ++j) {
      switch (j % 4) {
        case 0: s_jet[j] = sw * hp; break;
        case 1: s_jet[j] = cw * hp; break;
        case 2: s_jet[j] = -sw * hp; break;
        default: s_jet[j] = -cw * hp; break;
      }
      hp *= c.half_pi;
    }
  } else {
    const Cx C = exp(L[0] + log_sin<Real, Cx>(w));
    const Cx ct = cot_stable<Real, Cx>(w);
    for (int i = 0; i <= K; ++i) a_jet[i] = C * bell[i];
    for (int j = 0; j <= K; ++j) {
      switch (j % 4) {
        case 0: s_jet[j] = Cx(hp, Real(0)); break;
        case 1: s_jet[j] = ct * hp; break;
        case 2: s_jet[j] = Cx(-hp, Real(0)); break;
        default: s_jet[j] = -ct * hp; break;
      }
      hp *= c.half_pi;
    }
  }

  for (int m = 0; m <= K; ++m) {
    Cx acc(Real(0), Real(0));
    for (int i = 0; i <= m; ++i) {
      for (int j = 0; i + j <= m; ++j) {
        const int l = m - i - j;
        const Real coef = c.factorial[m] / (c.factorial[i] * c.factorial[j] * c.factorial[l]);
        acc += a_jet[i] * s_jet[j] * zeta_z[l] * coef;
      }
    }
    out[m] = acc;
  }
  return diag;
}

template <class Real, class Cx>
Real zeta_jet_generic(const Cx& s, int K, int em_min, bool compensated, Cx* out) {
  using std::abs;
  if (real(s) >= Real(0.5) || abs(s) < Real(0.5)) return em_jet<Real, Cx>(s, K, em_min, compensated, out);
  return reflect_jet<Real, Cx>(s, K, em_min, compensated, out);
}

}  // namespace zap::detail
