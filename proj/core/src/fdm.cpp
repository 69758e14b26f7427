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

#include "icbargain/fdm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "icbargain/competitive.hpp"
#include "icbargain/scalar_search.hpp"

namespace icbargain {
namespace {

constexpr double kTinyShare = 1e-300;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void Require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

// share * ln(1 + snr / share) in nats, stable for tiny shares.
double ShareLogCapacity(double snr, double share) {
  if (share < kTinyShare) return 0.0;
  const double ratio = snr / share;
  if (std::isfinite(ratio)) return share * std::log1p(ratio);
  return share * (std::log(share + snr) - std::log(share));
}

// (1 + x / rho)^rho
double SharePowerTerm(double x, double rho) {
  const double base = 1.0 + x / rho;
  if (std::isfinite(base)) return std::pow(base, rho);
  return std::exp(ShareLogCapacity(x, rho));
}

double LogNashProduct(const StandardChannel& sc, double rho,
                      const RatePair& rc) {
  const double gain1 = ShareRate(sc.snr1, sc.w, rho) - rc.r1;
  const double gain2 = ShareRate(sc.snr2, sc.w, 1.0 - rho) - rc.r2;
  if (!(gain1 > 0.0) || !(gain2 > 0.0)) return kNegInf;
  return std::log(gain1) + std::log(gain2);
}

// d/d(rho) of log F. Strictly decreasing on the open feasible interval.
double LogNashProductSlope(const StandardChannel& sc, double rho,
                           const RatePair& rc) {
  const double gain1 = ShareRate(sc.snr1, sc.w, rho) - rc.r1;
  const double gain2 = ShareRate(sc.snr2, sc.w, 1.0 - rho) - rc.r2;
  if (!(gain1 > 0.0)) return std::numeric_limits<double>::infinity();
  if (!(gain2 > 0.0)) return kNegInf;
  return ShareRateSlope(sc.snr1, sc.w, rho) / gain1 -
         ShareRateSlope(sc.snr2, sc.w, 1.0 - rho) / gain2;
}

}  // namespace

double ShareRate(double snr, double w, double share) {
  return 0.5 * w * ShareLogCapacity(snr, share) / std::numbers::ln2;
}

double ShareRateSlope(double snr, double w, double share) {
  if (share < kTinyShare) return std::numeric_limits<double>::infinity();
  const double nats = std::log1p(snr / share) - snr / (share + snr);
  return 0.5 * w * nats / std::numbers::ln2;
}

RatePair FdmRates(const StandardChannel& sc, FdmSplit split) {
  Require(split.rho >= 0.0 && split.rho <= 1.0, "rho must lie in [0, 1]");
  return {ShareRate(sc.snr1, sc.w, split.rho),
          ShareRate(sc.snr2, sc.w, 1.0 - split.rho)};
}

double ThresholdResidual(double x, double y, double rho) {
  return SharePowerTerm(x, rho) - 1.0 - x / (1.0 + y);
}

ShareRoot SolveThresholdShare(double x, double y) {
  Require(std::isfinite(x) && x > 0.0, "threshold share needs x > 0");
  Require(std::isfinite(y) && y >= 0.0, "threshold share needs y >= 0");
  if (y == 0.0) return {1.0, ThresholdResidual(x, y, 1.0)};

  // g(., rho) increases from -x/(1+y) at 0+ to x y/(1+y) > 0 at 1.
  const double target = 1.0 + x / (1.0 + y);
  auto below = [&](double rho) { return SharePowerTerm(x, rho) < target; };
  const auto [lo, hi] = BisectBracket(below, 0.0, 1.0);
  // Adjacent doubles: keep whichever sits closer to the root in g.
  const double g_hi = ThresholdResidual(x, y, hi);
  if (lo > 0.0) {
    const double g_lo = ThresholdResidual(x, y, lo);
    if (std::abs(g_lo) < std::abs(g_hi)) return {lo, g_lo};
  }
  return {hi, g_hi};
}

FeasibilityReport CheckFdmFeasibility(const StandardChannel& sc) {
  Validate(sc);
  FeasibilityReport rep;
  rep.rho1_min = ThresholdShare(sc.snr1, sc.alpha * sc.snr2);
  rep.rho2_min = ThresholdShare(sc.snr2, sc.beta * sc.snr1);
  rep.slack = 1.0 - rep.rho1_min - rep.rho2_min;
  rep.feasible = rep.rho1_min + rep.rho2_min <= 1.0 - kFeasibilityMargin;
  return rep;
}

double NashProduct(const StandardChannel& sc, double rho, const RatePair& rc) {
  Require(rho >= 0.0 && rho <= 1.0, "rho must lie in [0, 1]");
  return (ShareRate(sc.snr1, sc.w, rho) - rc.r1) *
         (ShareRate(sc.snr2, sc.w, 1.0 - rho) - rc.r2);
}

BargainingOutcome SolveNbs(const StandardChannel& sc, double tol) {
  Validate(sc);
  Require(std::isfinite(tol) && tol > 0.0, "rho tolerance must be positive");

  BargainingOutcome out;
  out.competitive_rates = CompetitiveRates(sc);
  out.feasibility = CheckFdmFeasibility(sc);
  out.nbs_rates = out.competitive_rates;
  if (!out.feasibility.feasible) return out;

  const RatePair& rc = out.competitive_rates;
  const double lo = out.feasibility.rho1_min;
  const double hi = 1.0 - out.feasibility.rho2_min;

  auto log_f = [&](double rho) { return LogNashProduct(sc, rho, rc); };
  const auto [glo, ghi] = GoldenSectionMaximize(log_f, lo, hi, tol);
  double rho = 0.5 * (glo + ghi);

  // The top of log F is flat to ~sqrt(eps) in rho; pin the stationary point.
  auto rising = [&](double r) { return LogNashProductSlope(sc, r, rc) > 0.0; };
  const double probe = std::max(tol, 1e-6);
  double blo = std::max(lo, rho - probe);
  double bhi = std::min(hi, rho + probe);
  if (!rising(blo) || rising(bhi)) {
    blo = lo;
    bhi = hi;
  }
  const auto [slo, shi] = BisectBracket(rising, blo, bhi);
  rho = 0.5 * (slo + shi);

  const RatePair nbs = FdmRates(sc, {rho});
  const double product = (nbs.r1 - rc.r1) * (nbs.r2 - rc.r2);
  if (!(nbs.r1 > rc.r1 && nbs.r2 > rc.r2 && product > 0.0)) {
    // Slack too thin to resolve a strict improvement; keep the disagreement.
    return out;
  }
  out.kind = OutcomeKind::kAgreement;
  out.rho_star = FdmSplit{rho};
  out.nbs_rates = nbs;
  out.nash_product = product;
  out.gains = {nbs.r1 / rc.r1, nbs.r2 / rc.r2};
  return out;
}

std::pair<double, double> HalfSplitThresholds(double alpha, double beta) {
  Require(std::isfinite(alpha) && alpha > 0.0, "threshold needs alpha > 0");
  Require(std::isfinite(beta) && beta > 0.0, "threshold needs beta > 0");
  const double t1 = 0.5 * std::cbrt(1.0 / (alpha * alpha * beta * beta * beta * beta));
  const double t2 = 0.5 * std::cbrt(1.0 / (beta * beta * alpha * alpha * alpha * alpha));
  return {t1, t2};
}

bool HalfSplitSufficient(const StandardChannel& sc) {
  Validate(sc);
  const auto [t1, t2] = HalfSplitThresholds(sc.alpha, sc.beta);
  return sc.snr1 >= t1 && sc.snr2 >= t2;
}

std::vector<BoundaryPoint> RegionBoundary(const StandardChannel& sc,
                                          std::size_t n) {
  Validate(sc);
  Require(n >= 2, "boundary needs at least two samples");
  std::vector<BoundaryPoint> out;
  out.reserve(n);
  const double denom = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double rho = i == n - 1 ? 1.0 : static_cast<double>(i) / denom;
    out.push_back({rho, FdmRates(sc, {rho})});
  }
  return out;
}

double InvertShare(double snr, double w, double target) {
  Require(std::isfinite(snr) && snr > 0.0, "snr must be positive");
  Require(std::isfinite(w) && w > 0.0, "w must be positive");
  Require(std::isfinite(target) && target >= 0.0, "target rate must be nonnegative");
  const double full = ShareRate(snr, w, 1.0);
  Require(target <= full, "target rate exceeds the full-band rate");
  if (target == 0.0) return 0.0;
  if (target == full) return 1.0;
  auto below = [&](double share) { return ShareRate(snr, w, share) < target; };
  return BisectBracket(below, 0.0, 1.0).second;
}

Membership RegionMembership(const RatePair& p, const StandardChannel& sc) {
  Validate(sc);
  Require(p.r1 >= 0.0 && p.r2 >= 0.0, "rates must be nonnegative");
  Membership m;
  if (p.r1 > ShareRate(sc.snr1, sc.w, 1.0) ||
      p.r2 > ShareRate(sc.snr2, sc.w, 1.0)) {
    return m;
  }
  const double shares =
      InvertShare(sc.snr1, sc.w, p.r1) + InvertShare(sc.snr2, sc.w, p.r2);
  m.in_fdm = shares <= 1.0 + kMembershipSlack;
  const RatePair rc = CompetitiveRates(sc);
  m.in_game_region = m.in_fdm && p.r1 >= rc.r1 && p.r2 >= rc.r2;
  return m;
}

}  // namespace icbargain
