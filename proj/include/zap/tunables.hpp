#pragma once

// Empirical caps for the harness checks, with the largest value seen at desk scale.

namespace zap::tunables {

// |N_k(a;1,T) - main| / log T  (seen: 1.06)
inline constexpr double kCountRemainderCap = 10;
// count over [T, T+1) / log T  (seen: 0.31)
inline constexpr double kStripCap = 10;
// |sum x^rho - main| / log T  (seen: 1.41)
inline constexpr double kExpSumCap = 15;
// |local expansion residual| / log t
inline constexpr double kLocalExpansionCap = 20;
// |Littlewood balance| / log T  (seen: 0.39)
inline constexpr double kLittlewoodCap = 20;
// |sum (beta + b) - main| / (U / log T)  (seen: 0.41)
inline constexpr double kBetaSumCap = 50;
// 2 pi sum_{beta > 1/2} (beta - 1/2) / (U log log T)
inline constexpr double kBetaExcessCap = 30;
// minimum share of the central band  (seen: 0.978 at T = U = 1000)
inline constexpr double kCentralFraction = 0.9;
// allowed rise of the off-band share along the height ladder
inline constexpr double kClusteringTolerance = 0.05;
// shift b in the sum of beta + b
inline constexpr double kBetaShift = 5;
// |zeta'| / (envelope * log t)
inline constexpr double kGrowthConstantCap = 100;

}  // namespace zap::tunables
