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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "icbargain/fdm.hpp"

namespace icbargain {
namespace {

void Require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

void ValidateAxis(const AxisRange& r) {
  Require(std::isfinite(r.min) && std::isfinite(r.max), "axis bounds must be finite");
  Require(std::isfinite(r.step) && r.step > 0.0, "axis step must be positive");
  Require(r.max >= r.min, "axis range must be nonempty");
}

constexpr std::size_t kChunk = 64;

}  // namespace

Deltas ComputeDeltas(const RatePair& nbs, const RatePair& rc) {
  Require(rc.r1 > 0.0 && rc.r2 > 0.0, "competitive rates must be positive");
  return {std::min(nbs.r1 / rc.r1, nbs.r2 / rc.r2),
          (nbs.r1 + nbs.r2) / (rc.r1 + rc.r2)};
}

std::size_t AxisRange::Count() const {
  return static_cast<std::size_t>(std::floor((max - min) / step + 1e-9)) + 1;
}

SweepSpec SweepSpec::SnrGrid(double alpha, double beta, AxisRange db_range) {
  SweepSpec s;
  s.mode = SweepMode::kSnrGrid;
  s.outer = db_range;
  s.inner = db_range;
  s.alpha = alpha;
  s.beta = beta;
  return s;
}

SweepSpec SweepSpec::InterferenceGrid(double snr1_db, double snr2_db,
                                      AxisRange coeff_range) {
  SweepSpec s;
  s.mode = SweepMode::kInterferenceGrid;
  s.outer = coeff_range;
  s.inner = coeff_range;
  s.snr1_db = snr1_db;
  s.snr2_db = snr2_db;
  return s;
}

void Validate(const SweepSpec& spec) {
  ValidateAxis(spec.outer);
  ValidateAxis(spec.inner);
  Require(std::isfinite(spec.w) && spec.w > 0.0, "w must be positive");
  if (spec.mode == SweepMode::kSnrGrid) {
    Require(std::isfinite(spec.alpha) && spec.alpha >= 0.0, "alpha must be nonnegative");
    Require(std::isfinite(spec.beta) && spec.beta >= 0.0, "beta must be nonnegative");
  } else {
    Require(std::isfinite(spec.snr1_db) && std::isfinite(spec.snr2_db),
            "SNRs must be finite");
    for (const AxisRange* r : {&spec.outer, &spec.inner}) {
      Require(r->min >= 0.0 && r->At(r->Count() - 1) <= 1.0 + 1e-12,
              "interference coefficients must lie in [0, 1]");
    }
  }
}

SweepRecord RecordFromOutcome(const StandardChannel& sc,
                              const BargainingOutcome& outcome) {
  SweepRecord rec;
  rec.snr1_db = LinearToDb(sc.snr1);
  rec.snr2_db = LinearToDb(sc.snr2);
  rec.alpha = sc.alpha;
  rec.beta = sc.beta;
  rec.rc1 = outcome.competitive_rates.r1;
  rec.rc2 = outcome.competitive_rates.r2;
  rec.r_nbs1 = outcome.nbs_rates.r1;
  rec.r_nbs2 = outcome.nbs_rates.r2;
  if (outcome.kind == OutcomeKind::kAgreement) {
    rec.feasible = true;
    rec.rho_star = outcome.rho_star->rho;
    const Deltas d = ComputeDeltas(outcome.nbs_rates, outcome.competitive_rates);
    rec.delta_min = d.min;
    rec.delta_sum = d.sum;
  }
  return rec;
}

SweepRecord EvaluatePoint(double snr1_db, double snr2_db, double alpha,
                          double beta, double w) {
  const StandardChannel sc = StandardChannelFromDb(snr1_db, snr2_db, alpha, beta, w);
  SweepRecord rec = RecordFromOutcome(sc, SolveNbs(sc));
  rec.snr1_db = snr1_db;
  rec.snr2_db = snr2_db;
  return rec;
}

std::vector<SweepRecord> RunSweep(const SweepSpec& spec, std::size_t workers) {
  Validate(spec);
  const std::size_t n_inner = spec.inner.Count();
  const std::size_t total = spec.PointCount();
  std::vector<SweepRecord> out(total);

  auto evaluate = [&](std::size_t idx) {
    const double u = spec.outer.At(idx / n_inner);
    const double v = spec.inner.At(idx % n_inner);
    out[idx] = spec.mode == SweepMode::kSnrGrid
                   ? EvaluatePoint(u, v, spec.alpha, spec.beta, spec.w)
                   : EvaluatePoint(spec.snr1_db, spec.snr2_db, u, v, spec.w);
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, (total + kChunk - 1) / kChunk);
  if (workers <= 1) {
    for (std::size_t i = 0; i < total; ++i) evaluate(i);
    return out;
  }

  // Workers claim chunks from a shared counter and write into fixed slots.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (;;) {
            const std::size_t begin = next.fetch_add(kChunk);
            if (begin >= total) break;
            const std::size_t end = std::min(total, begin + kChunk);
            for (std::size_t i = begin; i < end; ++i) evaluate(i);
          }
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
          next.store(total);
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::string FormatCsvNumber(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

void WriteSweepCsv(std::ostream& os, const std::vector<SweepRecord>& records) {
  os << kSweepCsvHeader << '\n';
  for (const SweepRecord& r : records) {
    os << FormatCsvNumber(r.snr1_db) << ',' << FormatCsvNumber(r.snr2_db) << ','
       << FormatCsvNumber(r.alpha) << ',' << FormatCsvNumber(r.beta) << ','
       << FormatCsvNumber(r.rc1) << ',' << FormatCsvNumber(r.rc2) << ','
       << (r.feasible ? 1 : 0) << ',' << FormatCsvNumber(r.rho_star) << ','
       << FormatCsvNumber(r.r_nbs1) << ',' << FormatCsvNumber(r.r_nbs2) << ','
       << FormatCsvNumber(r.delta_min) << ',' << FormatCsvNumber(r.delta_sum)
       << '\n';
  }
}

}  // namespace icbargain
