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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

namespace icbargain {
namespace {

TEST(DbConversion, KnownValues) {
  EXPECT_DOUBLE_EQ(DbToLinear(0.0), 1.0);
  EXPECT_NEAR(DbToLinear(20.0), 100.0, 1e-12);
  EXPECT_NEAR(DbToLinear(15.0), 31.6228, 1e-4);
  EXPECT_NEAR(LinearToDb(100.0), 20.0, 1e-12);
}

TEST(DbConversion, RoundTrip) {
  for (int i = -600; i <= 600; ++i) {
    const double db = i / 10.0;
    EXPECT_NEAR(LinearToDb(DbToLinear(db)), db, 1e-10) << db;
  }
}

TEST(DbConversion, RejectsNonPositive) {
  EXPECT_THROW(LinearToDb(0.0), InvalidArgument);
  EXPECT_THROW(LinearToDb(-1.0), InvalidArgument);
}

TEST(NormalizeChannel, IdentityChannel) {
  GeneralChannel ch;  // identity gains, unit powers, W = 2, N0 = 1
  const StandardChannel sc = NormalizeChannel(ch);
  EXPECT_DOUBLE_EQ(sc.snr1, 1.0);
  EXPECT_DOUBLE_EQ(sc.snr2, 1.0);
  EXPECT_DOUBLE_EQ(sc.alpha, 0.0);
  EXPECT_DOUBLE_EQ(sc.beta, 0.0);
  EXPECT_DOUBLE_EQ(sc.w, 2.0);
}

TEST(NormalizeChannel, FigureOneScenario) {
  GeneralChannel ch{1.0, 0.4, 0.7, 1.0, 100.0, 31.6228, 2.0, 1.0};
  const StandardChannel sc = NormalizeChannel(ch);
  EXPECT_DOUBLE_EQ(sc.snr1, 100.0);
  EXPECT_DOUBLE_EQ(sc.snr2, 31.6228);
  EXPECT_DOUBLE_EQ(sc.alpha, 0.4);
  EXPECT_DOUBLE_EQ(sc.beta, 0.7);
}

TEST(NormalizeChannel, NonUnitGains) {
  // Ratios worked by hand: noise power = 4 * 0.5 / 2 = 1.
  GeneralChannel ch{2.0, 0.5, 3.0, 4.0, 5.0, 0.25, 4.0, 0.5};
  const StandardChannel sc = NormalizeChannel(ch);
  EXPECT_DOUBLE_EQ(sc.snr1, 10.0);
  EXPECT_DOUBLE_EQ(sc.snr2, 1.0);
  EXPECT_DOUBLE_EQ(sc.alpha, 0.125);
  EXPECT_DOUBLE_EQ(sc.beta, 1.5);
}

TEST(NormalizeChannel, InvariantUnderJointRescaling) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    GeneralChannel ch{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
    const double c2 = u(rng);  // |c|^2
    GeneralChannel scaled = ch;
    scaled.gain11 *= c2;
    scaled.gain12 *= c2;
    scaled.gain21 *= c2;
    scaled.gain22 *= c2;
    scaled.noise_density *= c2;
    const StandardChannel a = NormalizeChannel(ch);
    const StandardChannel b = NormalizeChannel(scaled);
    EXPECT_NEAR(a.snr1, b.snr1, 1e-12 * a.snr1);
    EXPECT_NEAR(a.snr2, b.snr2, 1e-12 * a.snr2);
    EXPECT_NEAR(a.alpha, b.alpha, 1e-12 * a.alpha);
    EXPECT_NEAR(a.beta, b.beta, 1e-12 * a.beta);
  }
}

TEST(NormalizeChannel, RejectsInvalid) {
  GeneralChannel ch;
  ch.gain11 = 0.0;
  EXPECT_THROW(NormalizeChannel(ch), InvalidArgument);
  ch = {};
  ch.gain22 = 0.0;
  EXPECT_THROW(NormalizeChannel(ch), InvalidArgument);
  ch = {};
  ch.power1 = 0.0;
  EXPECT_THROW(NormalizeChannel(ch), InvalidArgument);
  ch = {};
  ch.bandwidth = -1.0;
  EXPECT_THROW(NormalizeChannel(ch), InvalidArgument);
  ch = {};
  ch.noise_density = 0.0;
  EXPECT_THROW(NormalizeChannel(ch), InvalidArgument);
}

TEST(StandardChannel, ValidateRejects) {
  EXPECT_THROW(Validate(StandardChannel{0.0, 1.0, 0.1, 0.1, 2.0}), InvalidArgument);
  EXPECT_THROW(Validate(StandardChannel{1.0, 1.0, -0.1, 0.1, 2.0}), InvalidArgument);
  EXPECT_THROW(Validate(StandardChannel{1.0, 1.0, 0.1, 0.1, 0.0}), InvalidArgument);
  EXPECT_THROW(Validate(StandardChannel{1.0, NAN, 0.1, 0.1, 2.0}), InvalidArgument);
  EXPECT_NO_THROW(Validate(StandardChannel{1.0, 1.0, 0.0, 0.0, 2.0}));
}

TEST(ReferenceBounds, VeryStrongInterference) {
  const ReferenceBounds b = ComputeReferenceBounds({1.0, 1.0, 2.0, 2.0, 2.0});
  EXPECT_TRUE(b.vsi_applies);
  ASSERT_TRUE(b.vsi_rates.has_value());
  EXPECT_DOUBLE_EQ(b.vsi_rates->r1, 1.0);
  EXPECT_DOUBLE_EQ(b.vsi_rates->r2, 1.0);
  EXPECT_DOUBLE_EQ(b.sato_sum_rate, 2.0);
}

TEST(ReferenceBounds, FigureOneIsNotVeryStrong) {
  const ReferenceBounds b = ComputeReferenceBounds({100.0, 31.6228, 0.4, 0.7, 2.0});
  EXPECT_FALSE(b.vsi_applies);
  EXPECT_FALSE(b.vsi_rates.has_value());
}

TEST(ReferenceBounds, SatoHandValue) {
  // min(1 + 3 + 5 * 1, 1 + 1 + 1.5 * 3) = min(9, 6.5)
  const ReferenceBounds b = ComputeReferenceBounds({3.0, 1.0, 5.0, 1.5, 2.0});
  EXPECT_FALSE(b.vsi_applies);
  EXPECT_NEAR(b.sato_sum_rate, std::log2(6.5), 1e-12);
  EXPECT_NEAR(b.sato_sum_rate, 2.7004397181410922, 1e-12);
}

TEST(ReferenceBounds, SatoMonotoneInSnr) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coeff(0.0, 3.0);
  std::uniform_real_distribution<double> db(-20.0, 50.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double a = coeff(rng), b = coeff(rng);
    const double s1 = DbToLinear(db(rng)), s2 = DbToLinear(db(rng));
    const double base = ComputeReferenceBounds({s1, s2, a, b, 2.0}).sato_sum_rate;
    EXPECT_GE(base, 0.0);
    EXPECT_GE(ComputeReferenceBounds({s1 * 1.5, s2, a, b, 2.0}).sato_sum_rate, base);
    EXPECT_GE(ComputeReferenceBounds({s1, s2 * 1.5, a, b, 2.0}).sato_sum_rate, base);
  }
}

}  // namespace
}  // namespace icbargain
