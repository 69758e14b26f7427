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

#ifndef ICBARGAIN_SWEEP_HPP_
#define ICBARGAIN_SWEEP_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "icbargain/channel.hpp"
#include "icbargain/fdm.hpp"

namespace icbargain {

// Minimum per-player and sum-rate improvement of the bargaining rates over
// the competitive ones.
struct Deltas {
  double min = 1.0;
  double sum = 1.0;
};

// Throws InvalidArgument unless both competitive rates are positive.
Deltas ComputeDeltas(const RatePair& nbs, const RatePair& rc);

// Inclusive grid min, min + step, ..., up to max. Points are computed as
// min + i * step from the integer index.
struct AxisRange {
  double min = 0.0;
  double max = 0.0;
  double step = 1.0;

  std::size_t Count() const;
  double At(std::size_t i) const { return min + static_cast<double>(i) * step; }
};

enum class SweepMode { kSnrGrid, kInterferenceGrid };

struct SweepSpec {
  SweepMode mode = SweepMode::kSnrGrid;
  // kSnrGrid: snr1_db (outer) x snr2_db (inner), alpha/beta fixed.
  // kInterferenceGrid: alpha (outer) x beta (inner), snr1_db/snr2_db fixed.
  AxisRange outer{0.0, 40.0, 0.25};
  AxisRange inner{0.0, 40.0, 0.25};
  double alpha = 0.7;
  double beta = 0.7;
  double snr1_db = 20.0;
  double snr2_db = 20.0;
  double w = 2.0;

  static SweepSpec SnrGrid(double alpha, double beta,
                           AxisRange db_range = {0.0, 40.0, 0.25});
  static SweepSpec InterferenceGrid(double snr1_db, double snr2_db,
                                    AxisRange coeff_range = {0.0, 1.0, 0.01});

  std::size_t PointCount() const { return outer.Count() * inner.Count(); }
};

void Validate(const SweepSpec& spec);

struct SweepRecord {
  double snr1_db = 0.0;
  double snr2_db = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double rc1 = 0.0;
  double rc2 = 0.0;
  bool feasible = false;
  double rho_star = kInfeasibleRho;
  double r_nbs1 = 0.0;
  double r_nbs2 = 0.0;
  double delta_min = 1.0;
  double delta_sum = 1.0;

  static constexpr double kInfeasibleRho = -1.0;
};

// Record for an already solved channel; the dB coordinates are derived from
// the linear SNRs.
SweepRecord RecordFromOutcome(const StandardChannel& sc,
                              const BargainingOutcome& outcome);

SweepRecord EvaluatePoint(double snr1_db, double snr2_db, double alpha,
                          double beta, double w = 2.0);

// One record per grid point in row-major (outer, inner) order. `workers == 0`
// uses the hardware concurrency. Output does not depend on `workers`.
std::vector<SweepRecord> RunSweep(const SweepSpec& spec, std::size_t workers);

inline constexpr const char* kSweepCsvHeader =
    "snr1_db,snr2_db,alpha,beta,rc1,rc2,feasible,rho_star,r_nbs1,r_nbs2,"
    "delta_min,delta_sum";

// Header line plus one line per record; floats use 10 significant digits and
// `feasible` is written as 1 or 0.
void WriteSweepCsv(std::ostream& os, const std::vector<SweepRecord>& records);

// printf("%.10g") formatting shared by every CSV writer.
std::string FormatCsvNumber(double x);

}  // namespace icbargain

#endif  // ICBARGAIN_SWEEP_HPP_
