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

#ifndef ICBARGAIN_IO_HPP_
#define ICBARGAIN_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "icbargain/channel.hpp"
#include "icbargain/competitive.hpp"
#include "icbargain/fdm.hpp"

namespace icbargain {

// Channel descriptors. Accepted shapes:
//   {"h2": [[g11, g12], [g21, g22]], "p": [P1, P2], "w": W, "n0": N0}
//     squared gains; "h" may replace "h2" with real or [re, im] entries.
//     Here "w" is the physical bandwidth; the rate scale is "rate_w".
//   {"snr_db": [s1, s2], "alpha": a, "beta": b, "w": w}
//   {"snr": [s1, s2], "alpha": a, "beta": b, "w": w}
//   a solve result carrying a "channel" object of one of the above shapes.
// Throws InvalidArgument on malformed input.
StandardChannel ParseChannelJson(std::string_view text);

// {"k": K, "players": N, "direct": [[..]], "cross": [[[..]]],
//  "noise": [[..]], "power": [..], "band_edges": [..] (optional)}
DiscreteGame ParseGameJson(std::string_view text);

std::string ChannelToJson(const StandardChannel& sc);
std::string OutcomeToJson(const BargainingOutcome& outcome,
                          const StandardChannel& sc);
std::string EquilibriumToJson(const EquilibriumResult& result);
std::string BoundsToJson(const ReferenceBounds& bounds);

// "rho,r1,r2" rows preceded by two comment lines marking the competitive
// point and the bargaining point (or "none" when there is no agreement).
void WriteRegionCsv(std::ostream& os, const std::vector<BoundaryPoint>& boundary,
                    const BargainingOutcome& outcome);

}  // namespace icbargain

#endif  // ICBARGAIN_IO_HPP_
