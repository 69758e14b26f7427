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

#ifndef ICBARGAIN_CHANNEL_HPP_
#define ICBARGAIN_CHANNEL_HPP_

#include <optional>
#include <stdexcept>
#include <string>

namespace icbargain {

// Raised when an input violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Physical 2x2 interference channel. Gains are squared magnitudes |h_ij|^2;
// gain_ij couples transmitter j into receiver i.
struct GeneralChannel {
  double gain11 = 1.0;
  double gain12 = 0.0;
  double gain21 = 0.0;
  double gain22 = 1.0;
  double power1 = 1.0;     // watts
  double power2 = 1.0;     // watts
  double bandwidth = 2.0;  // Hz
  double noise_density = 1.0;  // one-sided, watts/Hz
};

// Channel in standard form: unit direct gains and unit noise power, with
// crosstalk folded into alpha (into receiver 1) and beta (into receiver 2).
// `w` scales every rate by w/2; the default makes rates read log2(1 + SNR).
struct StandardChannel {
  double snr1 = 1.0;
  double snr2 = 1.0;
  double alpha = 0.0;
  double beta = 0.0;
  double w = 2.0;
};

// Throws InvalidArgument unless snr_i > 0, alpha, beta >= 0, w > 0, all finite.
void Validate(const StandardChannel& sc);

// Convenience constructor from SNRs quoted in decibels.
StandardChannel StandardChannelFromDb(double snr1_db, double snr2_db,
                                      double alpha, double beta,
                                      double w = 2.0);

struct RatePair {
  double r1 = 0.0;
  double r2 = 0.0;
};

struct ReferenceBounds {
  bool vsi_applies = false;
  std::optional<RatePair> vsi_rates;
  double sato_sum_rate = 0.0;
};

double DbToLinear(double x_db);
// Throws InvalidArgument for x_linear <= 0.
double LinearToDb(double x_linear);

// SNR_i = g_ii P_i / (W N0 / 2), alpha = g_12 / g_22, beta = g_21 / g_11.
StandardChannel NormalizeChannel(const GeneralChannel& ch, double w = 2.0);

// Very-strong-interference rectangle and the Sato sum-rate bound.
ReferenceBounds ComputeReferenceBounds(const StandardChannel& sc);

std::string ToString(const StandardChannel& sc);

}  // namespace icbargain

#endif  // ICBARGAIN_CHANNEL_HPP_
