#pragma once

// Main-term coefficients of the exponential sums over a-points: the Dirichlet
// coefficients of zeta^(k+1)(s) / (zeta^(k)(s) - a).

#include <cstdint>
#include <map>

#include "zap/types.hpp"

namespace zap {

/// Index d = numerator / 2^log2_denominator, kept in reduced form.
struct CoeffIndex {
  std::int64_t numerator = 1;
  int log2_denominator = 0;

  /// Reduces num / 2^l2den (num > 0) so that the numerator is odd whenever
  /// the exponent is positive.
  static CoeffIndex make(std::int64_t num, int l2den = 0);
  /// Exact dyadic reading of x; nullopt-like failure is signalled by
  /// returning false.
  static bool from_double(double x, CoeffIndex& out);

  double value() const;
  auto operator<=>(const CoeffIndex& o) const {
    // order by value; numerators and exponents are small enough for exact cross-multiplication
    const __int128 lhs = static_cast<__int128>(numerator) << o.log2_denominator;
    const __int128 rhs = static_cast<__int128>(o.numerator) << log2_denominator;
    return lhs <=> rhs;
  }
  bool operator==(const CoeffIndex& o) const = default;
};

/// Sum over ordered factorizations x = n0 n1 ... nl (all n_i >= 2) of
/// (-1)^(k(l+1)) a^-(l+1) (log n0)^(k+1) (log n1 ... log nl)^k.  Requires a != 0.
Complex alpha(int k, Complex a, std::int64_t x);

/// Real-argument form: zero unless x is an integer >= 2.
Complex alpha(int k, Complex a, double x);

/// Sum over l >= 0, n0 >= 2, n1..nl >= 3 with x = n0 ... nl / 2^(l+1) of
/// (-1/(log 2)^k)^(l+1) (log n0)^(k+1) (log n1 ... log nl)^k.
double alpha_zero(int k, CoeffIndex x);

/// Real-argument form: zero when no 2^n x is an integer.
double alpha_zero(int k, double x);

struct CoefficientTable {
  int k = 1;
  Complex a{};
  std::int64_t cutoff = 0;               // max index value D
  std::map<CoeffIndex, Complex> entries;  // non-zero coefficients only
};

/// Table built by the factorization enumeration.
CoefficientTable alpha_table(int k, Complex a, std::int64_t D);

/// Independent table by formal division of the Dirichlet series
/// sum (-log n)^(k+1) n^-s by (-a + sum (-log n)^k n^-s), or, for a = 0, by
/// the series led by (-log 2)^k 2^-s. D <= 10^4 (a != 0) or D <= 256 (a = 0).
CoefficientTable alpha_oracle(int k, Complex a, std::int64_t D);

}  // namespace zap
