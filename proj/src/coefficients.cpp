#include "zap/coefficients.hpp"

#include <cmath>
#include <complex>
#include <unordered_map>
#include <vector>

#include "zap/errors.hpp"

namespace zap {

namespace {

std::vector<std::int64_t> divisors(std::int64_t m) {
  std::vector<std::int64_t> lo, hi;
  for (std::int64_t d = 1; d * d <= m; ++d) {
    if (m % d) continue;
    lo.push_back(d);
    if (d != m / d) hi.push_back(m / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

using Wide = long double;
using WideComplex = std::complex<long double>;

Wide lnpow(std::int64_t n, int p) { return std::pow(std::log(Wide(n)), p); }

// Exponent E such that every index of value <= D needs at most 2^E in the
// denominator: x >= 1.5^l and the exponent is at most l + 1.
int dyadic_depth(std::int64_t D) {
  return static_cast<int>(std::floor(std::log(double(D)) / std::log(1.5))) + 1;
}

class ChainSum {
 public:
  ChainSum(int k, Complex a) : k_(k), c_(Wide((k % 2) ? -1 : 1) / WideComplex(a)) {}

  // ordered chains m = n1 ... nl, n_i >= 2, weighted by prod c (log n_i)^k
  WideComplex F(std::int64_t m) {
    if (m == 1) return 1.0L;
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    WideComplex acc = 0;
    for (std::int64_t n : divisors(m))
      if (n >= 2) acc += c_ * lnpow(n, k_) * F(m / n);
    memo_[m] = acc;
    return acc;
  }

  Complex alpha(std::int64_t x) {
    WideComplex acc = 0;
    for (std::int64_t n0 : divisors(x))
      if (n0 >= 2) acc += c_ * lnpow(n0, k_ + 1) * F(x / n0);
    return Complex(acc);
  }

 private:
  int k_;
  WideComplex c_;
  std::unordered_map<std::int64_t, WideComplex> memo_;
};

class ZeroChainSum {
 public:
  explicit ZeroChainSum(int k) : k_(k) {}

  // ordered l-chains m = n1 ... nl with n_i >= 3, weighted by prod (log n_i)^k
  Wide H(int l, std::int64_t m) {
    if (l == 0) return m == 1 ? 1 : 0;
    const std::int64_t key = m * 64 + l;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Wide acc = 0;
    for (std::int64_t n : divisors(m))
      if (n >= 3) acc += lnpow(n, k_) * H(l - 1, m / n);
    memo_[key] = acc;
    return acc;
  }

  double value(CoeffIndex x) {
    const Wide w = -1 / lnpow(2, k_);
    Wide total = 0;
    for (int l = std::max(0, x.log2_denominator - 1);; ++l) {
      const int shift = l + 1 - x.log2_denominator;
      if (shift > 62) break;
      const std::int64_t P = x.numerator << shift;
      if (double(P) < 2 * std::pow(3.0, l)) break;
      Wide acc = 0;
      for (std::int64_t n0 : divisors(P))
        if (n0 >= 2) acc += lnpow(n0, k_ + 1) * H(l, P / n0);
      total += std::pow(w, l + 1) * acc;
    }
    return static_cast<double>(total);
  }

 private:
  int k_;
  std::unordered_map<std::int64_t, Wide> memo_;
};

void check_k(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
}

}  // namespace

CoeffIndex CoeffIndex::make(std::int64_t num, int l2den) {
  if (num <= 0 || l2den < 0) throw Error(ErrorCode::InvalidArgument, "index must be positive");
  while (l2den > 0 && num % 2 == 0) {
    num /= 2;
    --l2den;
  }
  return {num, l2den};
}

bool CoeffIndex::from_double(double x, CoeffIndex& out) {
  if (!(x > 0) || !std::isfinite(x)) return false;
  for (int e = 0; e <= 60; ++e) {
    const double y = std::ldexp(x, e);
    if (y > 9e15) return false;
    if (y == std::floor(y)) {
      out = make(static_cast<std::int64_t>(y), e);
      return true;
    }
  }
  return false;
}

double CoeffIndex::value() const { return std::ldexp(double(numerator), -log2_denominator); }

Complex alpha(int k, Complex a, std::int64_t x) {
  check_k(k);
  if (a == 0.0) throw Error(ErrorCode::InvalidArgument, "alpha needs a != 0; use alpha_zero");
  if (x < 2) return 0.0;
  ChainSum cs(k, a);
  return cs.alpha(x);
}

Complex alpha(int k, Complex a, double x) {
  if (!(x >= 2) || x != std::floor(x) || x > 9e15) {
    check_k(k);
    if (a == 0.0) throw Error(ErrorCode::InvalidArgument, "alpha needs a != 0; use alpha_zero");
    return 0.0;
  }
  return alpha(k, a, static_cast<std::int64_t>(x));
}

double alpha_zero(int k, CoeffIndex x) {
  check_k(k);
  ZeroChainSum zs(k);
  return zs.value(x);
}

double alpha_zero(int k, double x) {
  check_k(k);
  CoeffIndex idx;
  if (!CoeffIndex::from_double(x, idx)) return 0.0;
  return alpha_zero(k, idx);
}

CoefficientTable alpha_table(int k, Complex a, std::int64_t D) {
  check_k(k);
  CoefficientTable tab;
  tab.k = k;
  tab.a = a;
  tab.cutoff = D;
  if (a != 0.0) {
    ChainSum cs(k, a);
    for (std::int64_t x = 2; x <= D; ++x) {
      const Complex v = cs.alpha(x);
      if (v != 0.0) tab.entries[CoeffIndex::make(x)] = v;
    }
    return tab;
  }
  ZeroChainSum zs(k);
  const int E = dyadic_depth(std::max<std::int64_t>(D, 2));
  for (int e = 0; e <= E; ++e) {
    for (std::int64_t num = 1; num <= D; ++num) {
      if (e > 0 && num % 2 == 0) continue;
      const CoeffIndex idx{num, e};
      const double v = zs.value(idx);
      if (v != 0.0) tab.entries[idx] = v;
    }
  }
  return tab;
}

CoefficientTable alpha_oracle(int k, Complex a, std::int64_t D) {
  check_k(k);
  CoefficientTable tab;
  tab.k = k;
  tab.a = a;
  tab.cutoff = D;
  const Wide sk = (k % 2) ? -1 : 1;
  auto den = [&](std::int64_t n) { return sk * lnpow(n, k); };            // (-log n)^k
  auto num = [&](std::int64_t n) { return -sk * lnpow(n, k + 1); };       // (-log n)^(k+1)

  if (a != 0.0) {
    if (D > 10000) throw Error(ErrorCode::InvalidArgument, "oracle cutoff must be <= 10^4");
    // Q * (-a + sum_{n>=2} den(n) n^-s) = sum_{n>=2} num(n) n^-s
    std::vector<WideComplex> q(D + 1, 0.0L), conv(D + 1, 0.0L);  // conv[n] = sum_{d|n, d<n} q[d] den(n/d)
    const WideComplex minus_a = -WideComplex(a);
    for (std::int64_t n = 2; n <= D; ++n) {
      q[n] = (num(n) - conv[n]) / minus_a;
      for (std::int64_t m = 2; n * m <= D; ++m) conv[n * m] += q[n] * den(m);
      if (q[n] != 0.0L) tab.entries[CoeffIndex::make(n)] = Complex(q[n]);
    }
    return tab;
  }

  if (D > 256) throw Error(ErrorCode::InvalidArgument, "a = 0 oracle cutoff must be <= 256");
  // Indices live on the lattice Q / 2^E. With lambda = Q / 2^E the identity
  // num(2 lambda) = sum_mu q(2 lambda / mu) den(mu), mu >= 2, gives
  // q(lambda) = (num(2 lambda) - sum_{mu >= 3} q(2 lambda / mu) den(mu)) / den(2).
  const int E = dyadic_depth(std::max<std::int64_t>(D, 2));
  const std::int64_t scale = std::int64_t(1) << E;
  const std::int64_t qmax = D * scale;
  // acc[Q] holds the pending convolution until q(Q) is known, then q(Q) itself
  std::vector<Wide> acc(qmax + 1, 0);
  const Wide d2 = den(2);
  std::vector<Wide> den_tab;
  for (std::int64_t Q = 1; Q <= qmax; ++Q) {
    Wide rhs = -acc[Q];
    const std::int64_t twoQ = 2 * Q;
    if (twoQ % scale == 0 && twoQ / scale >= 2) rhs += num(twoQ / scale);
    acc[Q] = rhs / d2;
    if (acc[Q] != 0) {
      // push q(Q) to targets Q * mu / 2 for mu >= 3
      for (std::int64_t mu = 3; Q * mu / 2 <= qmax; ++mu) {
        if ((Q * mu) % 2) continue;
        if (static_cast<std::int64_t>(den_tab.size()) <= mu) {
          const std::int64_t from = den_tab.size();
          den_tab.resize(mu + 1);
          for (std::int64_t i = from; i <= mu; ++i) den_tab[i] = i >= 2 ? den(i) : 0;
        }
        acc[Q * mu / 2] += acc[Q] * den_tab[mu];
      }
    }
  }
  for (std::int64_t Q = 1; Q <= qmax; ++Q) {
    if (acc[Q] == 0) continue;
    const CoeffIndex idx = CoeffIndex::make(Q, E);
    if (idx.numerator <= D) tab.entries[idx] = static_cast<double>(acc[Q]);
  }
  return tab;
}

}  // namespace zap
