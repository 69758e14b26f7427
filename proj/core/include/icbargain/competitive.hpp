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

#ifndef ICBARGAIN_COMPETITIVE_HPP_
#define ICBARGAIN_COMPETITIVE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "icbargain/channel.hpp"

namespace icbargain {

// Flat-channel Nash equilibrium rates: every player spreads full power over
// the whole band and treats the other's signal as noise.
//   R^c_1 = (w/2) log2(1 + snr1 / (1 + alpha snr2)), symmetrically for R^c_2.
RatePair CompetitiveRates(const StandardChannel& sc);

// K-band discrete interference game with N players.
//
// Indexing: direct_gain[i][k], cross_gain[i][j][k] (coupling of player j into
// receiver i; the diagonal j == i is ignored), noise[i][k], power_budget[i].
// band_edges is optional metadata of length K + 1.
struct DiscreteGame {
  std::size_t n_players = 0;
  std::size_t k_bands = 0;
  std::vector<double> band_edges;
  std::vector<std::vector<double>> direct_gain;
  std::vector<std::vector<std::vector<double>>> cross_gain;
  std::vector<std::vector<double>> noise;
  std::vector<double> power_budget;
};

// Throws InvalidArgument on shape mismatch, nonpositive direct gain, noise or
// budget, negative cross gain, or non-increasing band edges.
void Validate(const DiscreteGame& g);

// Frequency-flat K-band game mirroring a standard channel: unit direct gains,
// cross gains alpha/beta, noise 1/K per band and budgets snr_i. Under flat
// power each band sees the same SINR as the closed-form equilibrium, so a
// player's payoff equals K * (2/w) * R^c_i.
DiscreteGame MakeFlatGame(const StandardChannel& sc, std::size_t k_bands);

// p[i][k]: power of player i in band k.
struct PowerAllocation {
  std::vector<std::vector<double>> p;
};

PowerAllocation FlatAllocation(const DiscreteGame& g);

struct EquilibriumResult {
  PowerAllocation allocation;
  std::vector<double> rates;
  std::size_t iterations = 0;
  bool converged = false;
  double residual = 0.0;
};

// Sum over bands of log2(1 + SINR) seen by player i. No per-band bandwidth
// weight is applied.
double GamePayoff(const DiscreteGame& g, const PowerAllocation& alloc,
                  std::size_t player);

// Water level for noise floors `floors` and budget `budget`: the unique mu
// with sum_k max(0, mu - floors[k]) == budget. Exact breakpoint search.
double WaterLevel(std::span<const double> floors, double budget);

// Power vector maximizing player i's payoff with all other players' powers
// taken from `others` (row i of `others` is ignored).
std::vector<double> WaterfillBestResponse(const DiscreteGame& g,
                                          std::size_t player,
                                          const PowerAllocation& others);

// Sequential round-robin best responses starting from the flat allocation.
// Stops when the largest per-band power change over one full round is
// <= tol, or after max_iters rounds (converged = false). `iterations` counts
// executed rounds, including the final round that confirmed convergence.
EquilibriumResult IterateWaterfilling(const DiscreteGame& g, double tol,
                                      std::size_t max_iters);

}  // namespace icbargain

#endif  // ICBARGAIN_COMPETITIVE_HPP_
