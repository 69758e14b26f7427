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

#include "icbargain/channel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace icbargain {
namespace {

void Require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

bool PositiveFinite(double x) { return std::isfinite(x) && x > 0.0; }
bool NonNegativeFinite(double x) { return std::isfinite(x) && x >= 0.0; }

}  // namespace

void Validate(const StandardChannel& sc) {
  Require(PositiveFinite(sc.snr1), "snr1 must be positive and finite");
  Require(PositiveFinite(sc.snr2), "snr2 must be positive and finite");
  Require(NonNegativeFinite(sc.alpha), "alpha must be nonnegative and finite");
  Require(NonNegativeFinite(sc.beta), "beta must be nonnegative and finite");
  Require(PositiveFinite(sc.w), "w must be positive and finite");
}

StandardChannel StandardChannelFromDb(double snr1_db, double snr2_db,
                                      double alpha, double beta, double w) {
  StandardChannel sc{DbToLinear(snr1_db), DbToLinear(snr2_db), alpha, beta, w};
  Validate(sc);
  return sc;
}

double DbToLinear(double x_db) { return std::pow(10.0, x_db / 10.0); }

double LinearToDb(double x_linear) {
  Require(PositiveFinite(x_linear), "linear ratio must be positive");
  return 10.0 * std::log10(x_linear);
}

StandardChannel NormalizeChannel(const GeneralChannel& ch, double w) {
  Require(PositiveFinite(ch.gain11), "direct gain h11 must be nonzero");
  Require(PositiveFinite(ch.gain22), "direct gain h22 must be nonzero");
  Require(NonNegativeFinite(ch.gain12), "cross gain h12 must be nonnegative");
  Require(NonNegativeFinite(ch.gain21), "cross gain h21 must be nonnegative");
  Require(PositiveFinite(ch.power1), "power P1 must be positive");
  Require(PositiveFinite(ch.power2), "power P2 must be positive");
  Require(PositiveFinite(ch.bandwidth), "bandwidth W must be positive");
  Require(PositiveFinite(ch.noise_density), "noise density N0 must be positive");

  const double noise_power = ch.bandwidth * ch.noise_density / 2.0;
  StandardChannel sc;
  sc.snr1 = ch.gain11 * ch.power1 / noise_power;
  sc.snr2 = ch.gain22 * ch.power2 / noise_power;
  sc.alpha = ch.gain12 / ch.gain22;
  sc.beta = ch.gain21 / ch.gain11;
  sc.w = w;
  Validate(sc);
  return sc;
}

ReferenceBounds ComputeReferenceBounds(const StandardChannel& sc) {
  Validate(sc);
  const double half_w = sc.w / 2.0;
  ReferenceBounds out;
  out.vsi_applies = sc.alpha >= 1.0 + sc.snr1 && sc.beta >= 1.0 + sc.snr2;
  if (out.vsi_applies) {
    out.vsi_rates = RatePair{half_w * std::log2(1.0 + sc.snr1),
                             half_w * std::log2(1.0 + sc.snr2)};
  }
  const double mac1 = 1.0 + sc.snr1 + sc.alpha * sc.snr2;
  const double mac2 = 1.0 + sc.snr2 + sc.beta * sc.snr1;
  out.sato_sum_rate = half_w * std::log2(std::min(mac1, mac2));
  return out;
}

std::string ToString(const StandardChannel& sc) {
  std::ostringstream os;
  os << "StandardChannel{snr1=" << sc.snr1 << ", snr2=" << sc.snr2
     << ", alpha=" << sc.alpha << ", beta=" << sc.beta << ", w=" << sc.w << "}";
  return os.str();
}

}  // namespace icbargain
