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

#include "icbargain/sweep.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "icbargain/competitive.hpp"
#include "icbargain/fdm.hpp"

namespace icbargain {
namespace {

std::string Csv(const std::vector<SweepRecord>& records) {
  std::ostringstream os;
  WriteSweepCsv(os, records);
  return os.str();
}

TEST(Deltas, Basics) {
  const RatePair rc{1.5, 0.25};
  Deltas d = ComputeDeltas(rc, rc);
  EXPECT_EQ(d.min, 1.0);
  EXPECT_EQ(d.sum, 1.0);
  d = ComputeDeltas({3.0, 0.5}, rc);
  EXPECT_EQ(d.min, 2.0);
  EXPECT_EQ(d.sum, 2.0);
  d = ComputeDeltas({3.0, 0.3}, rc);
  EXPECT_DOUBLE_EQ(d.min, 1.2);
  EXPECT_DOUBLE_EQ(d.sum, 3.3 / 1.75);
  EXPECT_THROW(ComputeDeltas({1.0, 1.0}, {0.0, 1.0}), InvalidArgument);
}

TEST(Deltas, FigureOneScenario) {
  const StandardChannel sc = StandardChannelFromDb(20.0, 15.0, 0.4, 0.7);
  const BargainingOutcome o = SolveNbs(sc);
  const Deltas d = ComputeDeltas(o.nbs_rates, o.competitive_rates);
  EXPECT_NEAR(d.min, 1.5925521157185864, 1e-9);
  EXPECT_NEAR(d.sum, 1.9571876825295948, 1e-9);
}

TEST(AxisRange, Counts) {
  EXPECT_EQ((AxisRange{0.0, 40.0, 0.25}).Count(), 161u);
  EXPECT_EQ((AxisRange{0.0, 1.0, 0.01}).Count(), 101u);
  EXPECT_EQ((AxisRange{3.0, 3.0, 1.0}).Count(), 1u);
  EXPECT_EQ((AxisRange{0.0, 1.0, 0.3}).Count(), 4u);
  EXPECT_DOUBLE_EQ((AxisRange{0.0, 40.0, 0.25}).At(160), 40.0);
  EXPECT_EQ(SweepSpec::SnrGrid(0.7, 0.7).PointCount(), 25921u);
  EXPECT_EQ(SweepSpec::InterferenceGrid(20.0, 20.0).PointCount(), 10201u);
}

TEST(SweepSpec, ValidationErrors) {
  SweepSpec s = SweepSpec::SnrGrid(0.7, 0.7, {0.0, 10.0, 0.0});
  EXPECT_THROW(RunSweep(s, 1), InvalidArgument);
  s = SweepSpec::SnrGrid(0.7, 0.7, {10.0, 0.0, 1.0});
  EXPECT_THROW(RunSweep(s, 1), InvalidArgument);
  s = SweepSpec::SnrGrid(-0.1, 0.7, {0.0, 10.0, 1.0});
  EXPECT_THROW(RunSweep(s, 1), InvalidArgument);
  s = SweepSpec::InterferenceGrid(20.0, 20.0, {0.0, 1.5, 0.1});
  EXPECT_THROW(RunSweep(s, 1), InvalidArgument);
  s = SweepSpec::InterferenceGrid(20.0, 20.0, {-0.5, 1.0, 0.1});
  EXPECT_THROW(RunSweep(s, 1), InvalidArgument);
}

TEST(RunSweep, SinglePointMatchesSolver) {
  SweepSpec s = SweepSpec::SnrGrid(0.4, 0.7, {20.0, 20.0, 1.0});
  s.inner = {15.0, 15.0, 1.0};
  const auto records = RunSweep(s, 4);
  ASSERT_EQ(records.size(), 1u);
  const SweepRecord& r = records[0];
  const BargainingOutcome o = SolveNbs(StandardChannelFromDb(20.0, 15.0, 0.4, 0.7));
  EXPECT_EQ(r.snr1_db, 20.0);
  EXPECT_EQ(r.snr2_db, 15.0);
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.rho_star, o.rho_star->rho);
  EXPECT_EQ(r.rc1, o.competitive_rates.r1);
  EXPECT_EQ(r.rc2, o.competitive_rates.r2);
  EXPECT_EQ(r.r_nbs1, o.nbs_rates.r1);
  EXPECT_EQ(r.r_nbs2, o.nbs_rates.r2);
  EXPECT_EQ(r.delta_min, o.gains.r1);
}

TEST(RunSweep, HighSnrCorner) {
  const SweepRecord r = EvaluatePoint(40.0, 40.0, 0.7, 0.7);
  EXPECT_NEAR(r.delta_sum, 5.5, 0.3);
  EXPECT_NEAR(r.delta_sum, 5.5812238326878018, 1e-9);
  EXPECT_EQ(r.rho_star, 0.5);
}

TEST(RunSweep, ZeroCouplingAxesAreInfeasible) {
  const auto records = RunSweep(SweepSpec::InterferenceGrid(20.0, 20.0, {0.0, 1.0, 0.1}), 2);
  ASSERT_EQ(records.size(), 121u);
  int zero_axis = 0;
  for (const SweepRecord& r : records) {
    if (r.alpha != 0.0 && r.beta != 0.0) continue;
    ++zero_axis;
    EXPECT_FALSE(r.feasible);
    EXPECT_EQ(r.rho_star, SweepRecord::kInfeasibleRho);
    EXPECT_EQ(r.delta_min, 1.0);
    EXPECT_EQ(r.delta_sum, 1.0);
    EXPECT_EQ(r.r_nbs1, r.rc1);
    EXPECT_EQ(r.r_nbs2, r.rc2);
  }
  EXPECT_EQ(zero_axis, 21);
}

TEST(RunSweep, RowMajorOrder) {
  const auto records = RunSweep(SweepSpec::SnrGrid(0.7, 0.5, {0.0, 2.0, 1.0}), 3);
  ASSERT_EQ(records.size(), 9u);
  for (std::size_t i = 0; i < 9; ++i) {
    EXPECT_EQ(records[i].snr1_db, static_cast<double>(i / 3));
    EXPECT_EQ(records[i].snr2_db, static_cast<double>(i % 3));
    EXPECT_EQ(records[i].alpha, 0.7);
    EXPECT_EQ(records[i].beta, 0.5);
  }
}

TEST(RunSweep, WorkerCountDoesNotChangeOutput) {
  const SweepSpec s = SweepSpec::SnrGrid(0.7, 0.7, {0.0, 40.0, 1.0});
  const std::string reference = Csv(RunSweep(s, 1));
  for (std::size_t w : {2u, 4u, 16u, 0u}) EXPECT_EQ(Csv(RunSweep(s, w)), reference);
}

TEST(RunSweep, Dominance) {
  for (const SweepSpec& s : {SweepSpec::SnrGrid(0.7, 0.7, {0.0, 40.0, 2.0}),
                             SweepSpec::InterferenceGrid(20.0, 20.0, {0.0, 1.0, 0.05})}) {
    for (const SweepRecord& r : RunSweep(s, 4)) {
      if (r.feasible) {
        EXPECT_GE(r.r_nbs1, r.rc1);
        EXPECT_GE(r.r_nbs2, r.rc2);
        EXPECT_GE(r.delta_min, 1.0);
        EXPECT_GE(r.delta_sum, 1.0);
        EXPECT_GE(r.rho_star, 0.0);
      } else {
        EXPECT_EQ(r.delta_min, 1.0);
        EXPECT_EQ(r.delta_sum, 1.0);
        EXPECT_EQ(r.rho_star, -1.0);
      }
    }
  }
}

TEST(WriteSweepCsv, Format) {
  const SweepRecord r = EvaluatePoint(40.0, 40.0, 0.7, 0.7);
  const std::string csv = Csv({r, EvaluatePoint(10.0, 10.0, 0.0, 0.0)});
  std::istringstream in(csv);
  std::string header, row, infeasible;
  std::getline(in, header);
  std::getline(in, row);
  std::getline(in, infeasible);
  EXPECT_EQ(header, kSweepCsvHeader);
  EXPECT_EQ(row,
            "40,40,0.7,0.7,1.279986697,1.279986697,1,0.5,7.143892256,"
            "7.143892256,5.581223833,5.581223833");
  EXPECT_EQ(infeasible.substr(0, 10), "10,10,0,0,");
  EXPECT_NE(infeasible.find(",0,-1,"), std::string::npos);
  EXPECT_EQ(FormatCsvNumber(1.0 / 3.0), "0.3333333333");
}

}  // namespace
}  // namespace icbargain
