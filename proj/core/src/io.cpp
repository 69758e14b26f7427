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

#include "icbargain/io.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <ostream>

#include "json.hpp"
#include "icbargain/sweep.hpp"

namespace icbargain {
namespace {

using nlohmann::json;

json ParseText(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("invalid JSON: ") + e.what());
  }
}

template <typename T>
T Get(const json& j, const char* key) {
  if (!j.contains(key)) throw InvalidArgument(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad field \"") + key + "\": " + e.what());
  }
}

template <typename T>
T GetOr(const json& j, const char* key, T fallback) {
  return j.contains(key) ? Get<T>(j, key) : fallback;
}

// Entry of an "h" matrix: a real gain or a [re, im] pair.
double SquaredMagnitude(const json& entry) {
  if (entry.is_number()) {
    const double v = entry.get<double>();
    return v * v;
  }
  if (entry.is_array() && entry.size() == 2 && entry[0].is_number() &&
      entry[1].is_number()) {
    return std::norm(std::complex<double>(entry[0].get<double>(), entry[1].get<double>()));
  }
  throw InvalidArgument("\"h\" entries must be numbers or [re, im] pairs");
}

std::array<std::array<double, 2>, 2> SquaredGains(const json& j) {
  std::array<std::array<double, 2>, 2> g{};
  const bool squared = j.contains("h2");
  const json& m = squared ? j.at("h2") : j.at("h");
  if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 ||
      !m[1].is_array() || m[1].size() != 2) {
    throw InvalidArgument("channel gain matrix must be 2x2");
  }
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      if (squared) {
        if (!m[r][c].is_number()) throw InvalidArgument("\"h2\" entries must be numbers");
        g[r][c] = m[r][c].get<double>();
      } else {
        g[r][c] = SquaredMagnitude(m[r][c]);
      }
    }
  }
  return g;
}

std::array<double, 2> Pair(const json& j, const char* key) {
  const auto v = Get<std::vector<double>>(j, key);
  if (v.size() != 2) throw InvalidArgument(std::string("\"") + key + "\" must have two entries");
  return {v[0], v[1]};
}

StandardChannel ChannelFromJson(const json& j) {
  if (!j.is_object()) throw InvalidArgument("channel descriptor must be a JSON object");
  if (j.contains("channel")) return ChannelFromJson(j.at("channel"));

  if (j.contains("h2") || j.contains("h")) {
    const auto g = SquaredGains(j);
    const auto p = Pair(j, "p");
    GeneralChannel ch;
    ch.gain11 = g[0][0];
    ch.gain12 = g[0][1];
    ch.gain21 = g[1][0];
    ch.gain22 = g[1][1];
    ch.power1 = p[0];
    ch.power2 = p[1];
    ch.bandwidth = GetOr<double>(j, "w", 2.0);
    ch.noise_density = GetOr<double>(j, "n0", 1.0);
    return NormalizeChannel(ch, GetOr<double>(j, "rate_w", 2.0));
  }

  StandardChannel sc;
  if (j.contains("snr_db")) {
    const auto s = Pair(j, "snr_db");
    sc.snr1 = DbToLinear(s[0]);
    sc.snr2 = DbToLinear(s[1]);
  } else if (j.contains("snr")) {
    const auto s = Pair(j, "snr");
    sc.snr1 = s[0];
    sc.snr2 = s[1];
  } else {
    throw InvalidArgument("channel descriptor needs \"h2\", \"h\", \"snr_db\" or \"snr\"");
  }
  sc.alpha = Get<double>(j, "alpha");
  sc.beta = Get<double>(j, "beta");
  sc.w = GetOr<double>(j, "w", 2.0);
  Validate(sc);
  return sc;
}

json RatesJson(const RatePair& r) { return {{"r1", r.r1}, {"r2", r.r2}}; }

json ChannelJson(const StandardChannel& sc) {
  return {{"snr", {sc.snr1, sc.snr2}},
          {"alpha", sc.alpha},
          {"beta", sc.beta},
          {"w", sc.w}};
}

}  // namespace

StandardChannel ParseChannelJson(std::string_view text) {
  return ChannelFromJson(ParseText(text));
}

DiscreteGame ParseGameJson(std::string_view text) {
  const json j = ParseText(text);
  if (!j.is_object()) throw InvalidArgument("game descriptor must be a JSON object");
  DiscreteGame g;
  g.k_bands = Get<std::size_t>(j, "k");
  g.n_players = Get<std::size_t>(j, "players");
  g.direct_gain = Get<std::vector<std::vector<double>>>(j, "direct");
  g.cross_gain = Get<std::vector<std::vector<std::vector<double>>>>(j, "cross");
  g.noise = Get<std::vector<std::vector<double>>>(j, "noise");
  g.power_budget = Get<std::vector<double>>(j, "power");
  g.band_edges = GetOr<std::vector<double>>(j, "band_edges", {});
  Validate(g);
  return g;
}

std::string ChannelToJson(const StandardChannel& sc) {
  return ChannelJson(sc).dump();
}

std::string OutcomeToJson(const BargainingOutcome& outcome,
                          const StandardChannel& sc) {
  const bool agreed = outcome.kind == OutcomeKind::kAgreement;
  json j;
  j["outcome"] = agreed ? "agreement" : "disagreement";
  j["competitive"] = RatesJson(outcome.competitive_rates);
  j["feasible"] = outcome.feasibility.feasible;
  j["rho1_min"] = outcome.feasibility.rho1_min;
  j["rho2_min"] = outcome.feasibility.rho2_min;
  j["rho_star"] = agreed ? json(outcome.rho_star->rho) : json(nullptr);
  j["nbs"] = RatesJson(outcome.nbs_rates);
  j["gains"] = {{"g1", outcome.gains.r1}, {"g2", outcome.gains.r2}};
  j["nash_product"] = outcome.nash_product;
  j["channel"] = ChannelJson(sc);
  return j.dump(2);
}

std::string EquilibriumToJson(const EquilibriumResult& result) {
  json j;
  j["allocation"] = result.allocation.p;
  j["rates"] = result.rates;
  j["iterations"] = result.iterations;
  j["converged"] = result.converged;
  j["residual"] = result.residual;
  return j.dump(2);
}

std::string BoundsToJson(const ReferenceBounds& bounds) {
  json j;
  j["vsi_applies"] = bounds.vsi_applies;
  j["vsi_rates"] = bounds.vsi_rates ? RatesJson(*bounds.vsi_rates) : json(nullptr);
  j["sato_sum_rate"] = bounds.sato_sum_rate;
  return j.dump(2);
}

void WriteRegionCsv(std::ostream& os, const std::vector<BoundaryPoint>& boundary,
                    const BargainingOutcome& outcome) {
  const RatePair& rc = outcome.competitive_rates;
  os << "# NE r1=" << FormatCsvNumber(rc.r1) << " r2=" << FormatCsvNumber(rc.r2) << '\n';
  if (outcome.kind == OutcomeKind::kAgreement) {
    os << "# NBS rho=" << FormatCsvNumber(outcome.rho_star->rho)
       << " r1=" << FormatCsvNumber(outcome.nbs_rates.r1)
       << " r2=" << FormatCsvNumber(outcome.nbs_rates.r2) << '\n';
  } else {
    os << "# NBS none\n";
  }
  os << "rho,r1,r2\n";
  for (const BoundaryPoint& p : boundary) {
    os << FormatCsvNumber(p.rho) << ',' << FormatCsvNumber(p.rates.r1) << ','
       << FormatCsvNumber(p.rates.r2) << '\n';
  }
}

}  // namespace icbargain
