// Copyright 2026 The icbargain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ICBARGAIN_FDM_HPP_
#define ICBARGAIN_FDM_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "icbargain/channel.hpp"

namespace icbargain {

// Player 1 occupies a fraction `rho` of the band, player 2 the rest; each
// transmits at full power inside its share.
struct FdmSplit {
  double rho = 0.5;
};

// Rate of a single user holding `share` of the band at linear SNR `snr`:
// (share * w / 2) log2(1 + snr / share), extended by continuity to 0 at
// share = 0.
double ShareRate(double snr, double w, double share);

// d/d(share) of ShareRate. Infinite at share = 0.
double ShareRateSlope(double snr, double w, double share);

RatePair FdmRates(const StandardChannel& sc, FdmSplit split);

struct ShareRoot {
  double rho = 1.0;
  double residual = 0.0;  // g(x, y, rho)
};

// g(x, y, rho) = (1 + x / rho)^rho - 1 - x / (1 + y).
double ThresholdResidual(double x, double y, double rho);

// Smallest band share at which a user with SNR x matches its competitive rate
// under effective interference y, i.e. the root of g(x, y, .) in (0, 1].
// Returns exactly 1 when y == 0. Throws InvalidArgument for x <= 0 or y < 0.
ShareRoot SolveThresholdShare(double x, double y);
inline double ThresholdShare(double x, double y) {
  return SolveThresholdShare(x, y).rho;
}

struct FeasibilityReport {
  double rho1_min = 1.0;
  double rho2_min = 1.0;
  bool feasible = false;
  double slack = -1.0;
};

// Shares summing to at most 1 - kFeasibilityMargin count as feasible.
inline constexpr double kFeasibilityMargin = 1e-10;

FeasibilityReport CheckFdmFeasibility(const StandardChannel& sc);

// F(rho) = (R1(rho) - rc1) (R2(1 - rho) - rc2). Negative outside the feasible
// interval.
double NashProduct(const StandardChannel& sc, double rho, const RatePair& rc);

enum class OutcomeKind { kAgreement, kDisagreement };

struct BargainingOutcome {
  OutcomeKind kind = OutcomeKind::kDisagreement;
  std::optional<FdmSplit> rho_star;
  RatePair nbs_rates;
  RatePair competitive_rates;
  FeasibilityReport feasibility;
  double nash_product = 0.0;
  RatePair gains{1.0, 1.0};  // nbs / competitive per player
};

inline constexpr double kDefaultRhoTolerance = 1e-10;

// Nash bargaining solution over FDM splits with the competitive equilibrium
// as disagreement point.
//
// Infeasible channels (including the tie slack ~ 0) yield a Disagreement
// carrying the competitive rates. Otherwise log F is strictly concave on the
// open feasible interval [rho1_min, 1 - rho2_min]; it is maximized by
// golden-section search to `tol`, then the stationary point is pinned by
// bisection on the sign of d(log F)/d(rho) inside the feasible interval.
BargainingOutcome SolveNbs(const StandardChannel& sc,
                           double tol = kDefaultRhoTolerance);

// SNR levels at and above which the even split already beats the competitive
// rates for both players: 1/2 (a^2 b^4)^(-1/3) and 1/2 (b^2 a^4)^(-1/3).
// Throws InvalidArgument unless alpha, beta > 0.
std::pair<double, double> HalfSplitThresholds(double alpha, double beta);
bool HalfSplitSufficient(const StandardChannel& sc);

struct BoundaryPoint {
  double rho = 0.0;
  RatePair rates;
};

// n >= 2 samples of the FDM frontier for rho uniform on [0, 1].
std::vector<BoundaryPoint> RegionBoundary(const StandardChannel& sc,
                                          std::size_t n);

// Minimal share whose ShareRate reaches `target`. Throws InvalidArgument if
// target is negative or above the full-band rate.
double InvertShare(double snr, double w, double target);

struct Membership {
  bool in_fdm = false;
  bool in_game_region = false;
};

// Slack on the share sum when testing FDM membership, absorbing the rounding
// of the two share inversions.
inline constexpr double kMembershipSlack = 1e-9;

Membership RegionMembership(const RatePair& p, const StandardChannel& sc);

}  // namespace icbargain

#endif  // ICBARGAIN_FDM_HPP_
