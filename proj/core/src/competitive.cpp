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

#include "icbargain/competitive.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace icbargain {
namespace {

void Require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

bool PositiveFinite(double x) { return std::isfinite(x) && x > 0.0; }

void CheckAllocationShape(const DiscreteGame& g, const PowerAllocation& a) {
  Require(a.p.size() == g.n_players,
          "allocation has " + std::to_string(a.p.size()) +
              " players, game has " + std::to_string(g.n_players));
  for (const auto& row : a.p) {
    Require(row.size() == g.k_bands, "allocation band count mismatch");
  }
}

// Interference-plus-noise seen by receiver i in band k.
double InterferencePlusNoise(const DiscreteGame& g, const PowerAllocation& a,
                             std::size_t i, std::size_t k) {
  double total = g.noise[i][k];
  for (std::size_t j = 0; j < g.n_players; ++j) {
    if (j != i) total += g.cross_gain[i][j][k] * a.p[j][k];
  }
  return total;
}

}  // namespace

RatePair CompetitiveRates(const StandardChannel& sc) {
  Validate(sc);
  const double half_w = sc.w / 2.0;
  return {half_w * std::log2(1.0 + sc.snr1 / (1.0 + sc.alpha * sc.snr2)),
          half_w * std::log2(1.0 + sc.snr2 / (1.0 + sc.beta * sc.snr1))};
}

void Validate(const DiscreteGame& g) {
  const std::size_t n = g.n_players;
  const std::size_t k = g.k_bands;
  Require(n >= 1, "game needs at least one player");
  Require(k >= 1, "game needs at least one band");
  Require(g.direct_gain.size() == n, "direct gain must have one row per player");
  Require(g.noise.size() == n, "noise must have one row per player");
  Require(g.power_budget.size() == n, "power budget must have one entry per player");
  Require(g.cross_gain.size() == n, "cross gain must be players x players x bands");
  if (!g.band_edges.empty()) {
    Require(g.band_edges.size() == k + 1, "band edges must have K + 1 entries");
    for (std::size_t b = 1; b <= k; ++b) {
      Require(g.band_edges[b] > g.band_edges[b - 1],
              "band edges must be strictly increasing");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Require(PositiveFinite(g.power_budget[i]), "power budget must be positive");
    Require(g.direct_gain[i].size() == k && g.noise[i].size() == k,
            "per-player rows must have K entries");
    Require(g.cross_gain[i].size() == n, "cross gain must be players x players x bands");
    for (std::size_t b = 0; b < k; ++b) {
      Require(PositiveFinite(g.direct_gain[i][b]), "direct gain must be positive");
      Require(PositiveFinite(g.noise[i][b]), "noise must be positive");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      Require(g.cross_gain[i][j].size() == k, "cross gain rows must have K entries");
      for (double c : g.cross_gain[i][j]) {
        Require(std::isfinite(c) && c >= 0.0, "cross gain must be nonnegative");
      }
    }
  }
}

DiscreteGame MakeFlatGame(const StandardChannel& sc, std::size_t k_bands) {
  Validate(sc);
  Require(k_bands >= 1, "game needs at least one band");
  const double band_noise = 1.0 / static_cast<double>(k_bands);
  DiscreteGame g;
  g.n_players = 2;
  g.k_bands = k_bands;
  g.direct_gain.assign(2, std::vector<double>(k_bands, 1.0));
  g.noise.assign(2, std::vector<double>(k_bands, band_noise));
  g.cross_gain.assign(2, std::vector<std::vector<double>>(2));
  g.cross_gain[0][1].assign(k_bands, sc.alpha);
  g.cross_gain[1][0].assign(k_bands, sc.beta);
  g.cross_gain[0][0].assign(k_bands, 0.0);
  g.cross_gain[1][1].assign(k_bands, 0.0);
  g.power_budget = {sc.snr1, sc.snr2};
  return g;
}

PowerAllocation FlatAllocation(const DiscreteGame& g) {
  PowerAllocation a;
  a.p.reserve(g.n_players);
  for (std::size_t i = 0; i < g.n_players; ++i) {
    a.p.emplace_back(g.k_bands,
                     g.power_budget[i] / static_cast<double>(g.k_bands));
  }
  return a;
}

double GamePayoff(const DiscreteGame& g, const PowerAllocation& alloc,
                  std::size_t player) {
  Require(player < g.n_players, "player index out of range");
  CheckAllocationShape(g, alloc);
  double rate = 0.0;
  for (std::size_t k = 0; k < g.k_bands; ++k) {
    const double signal = g.direct_gain[player][k] * alloc.p[player][k];
    rate += std::log2(1.0 + signal / InterferencePlusNoise(g, alloc, player, k));
  }
  return rate;
}

double WaterLevel(std::span<const double> floors, double budget) {
  Require(!floors.empty(), "water level needs at least one band");
  Require(PositiveFinite(budget), "water-filling budget must be positive");
  std::vector<double> sorted(floors.begin(), floors.end());
  std::sort(sorted.begin(), sorted.end());

  // Fill the m lowest floors; the level is valid while it stays above the
  // m-th floor. The last valid m gives the solution.
  double prefix = 0.0;
  double level = sorted.front() + budget;
  for (std::size_t m = 1; m <= sorted.size(); ++m) {
    prefix += sorted[m - 1];
    const double candidate = (budget + prefix) / static_cast<double>(m);
    if (candidate <= sorted[m - 1]) break;
    level = candidate;
  }
  return level;
}

std::vector<double> WaterfillBestResponse(const DiscreteGame& g,
                                          std::size_t player,
                                          const PowerAllocation& others) {
  Require(player < g.n_players, "player index out of range");
  CheckAllocationShape(g, others);
  std::vector<double> floors(g.k_bands);
  for (std::size_t k = 0; k < g.k_bands; ++k) {
    floors[k] = InterferencePlusNoise(g, others, player, k) /
                g.direct_gain[player][k];
  }
  const double budget = g.power_budget[player];
  const double level = WaterLevel(floors, budget);

  std::vector<double> p(g.k_bands);
  for (std::size_t k = 0; k < g.k_bands; ++k) {
    p[k] = std::max(0.0, level - floors[k]);
  }
  // Absorb rounding so the budget holds to machine precision.
  const double used = std::accumulate(p.begin(), p.end(), 0.0);
  if (used > 0.0) {
    const double scale = budget / used;
    for (double& x : p) x *= scale;
  }
  return p;
}

EquilibriumResult IterateWaterfilling(const DiscreteGame& g, double tol,
                                      std::size_t max_iters) {
  Validate(g);
  Require(PositiveFinite(tol), "tolerance must be positive");
  Require(max_iters >= 1, "max_iters must be at least 1");

  EquilibriumResult result;
  result.allocation = FlatAllocation(g);
  PowerAllocation& alloc = result.allocation;

  for (std::size_t round = 1; round <= max_iters; ++round) {
    double change = 0.0;
    for (std::size_t i = 0; i < g.n_players; ++i) {
      std::vector<double> next = WaterfillBestResponse(g, i, alloc);
      for (std::size_t k = 0; k < g.k_bands; ++k) {
        change = std::max(change, std::abs(next[k] - alloc.p[i][k]));
      }
      alloc.p[i] = std::move(next);
    }
    result.iterations = round;
    result.residual = change;
    if (change <= tol) {
      result.converged = true;
      break;
    }
  }

  result.rates.resize(g.n_players);
  for (std::size_t i = 0; i < g.n_players; ++i) {
    result.rates[i] = GamePayoff(g, alloc, i);
  }
  return result;
}

}  // namespace icbargain
