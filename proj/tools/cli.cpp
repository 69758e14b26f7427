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

#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "icbargain/channel.hpp"
#include "icbargain/competitive.hpp"
#include "icbargain/fdm.hpp"
#include "icbargain/io.hpp"
#include "icbargain/sweep.hpp"

namespace icbargain::cli {
namespace {

using nlohmann::json;

// Usage problems detected after CLI11 has accepted the command line.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct ChannelFlags {
  std::optional<double> snr1_db;
  std::optional<double> snr2_db;
  std::optional<double> snr1;
  std::optional<double> snr2;
  std::optional<double> alpha;
  std::optional<double> beta;
  double w = 2.0;
  std::string channel_file;

  void Register(CLI::App* app) {
    auto* s1db = app->add_option("--snr1-db", snr1_db, "SNR of player 1 in dB");
    auto* s1 = app->add_option("--snr1", snr1, "SNR of player 1, linear");
    auto* s2db = app->add_option("--snr2-db", snr2_db, "SNR of player 2 in dB");
    auto* s2 = app->add_option("--snr2", snr2, "SNR of player 2, linear");
    auto* a = app->add_option("--alpha", alpha, "interference of player 2 into receiver 1");
    auto* b = app->add_option("--beta", beta, "interference of player 1 into receiver 2");
    auto* wo = app->add_option("--w", w, "rate scale; rates are (w/2) log2(1 + SINR)")
                   ->capture_default_str();
    s1db->excludes(s1);
    s2db->excludes(s2);
    auto* file = app->add_option("--channel", channel_file,
                                 "channel descriptor JSON (replaces the flags above)");
    for (CLI::Option* o : {s1db, s1, s2db, s2, a, b, wo}) file->excludes(o);
  }

  StandardChannel Resolve() const {
    if (!channel_file.empty()) return ParseChannelJson(ReadFile(channel_file));
    if (!(snr1_db || snr1) || !(snr2_db || snr2)) {
      throw UsageError("both SNRs are required (--snr1[-db], --snr2[-db]) or --channel");
    }
    if (!alpha || !beta) throw UsageError("--alpha and --beta are required");
    StandardChannel sc;
    sc.snr1 = snr1_db ? DbToLinear(*snr1_db) : *snr1;
    sc.snr2 = snr2_db ? DbToLinear(*snr2_db) : *snr2;
    sc.alpha = *alpha;
    sc.beta = *beta;
    sc.w = w;
    Validate(sc);
    return sc;
  }
};

// Writes to --output when given, else to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw IoError("cannot write " + path);
    os_ = file_.get();
  }
  std::ostream& stream() { return *os_; }
  void Finish() {
    os_->flush();
    if (!*os_) throw IoError("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

json RecordJson(const SweepRecord& r) {
  return {{"snr1_db", r.snr1_db}, {"snr2_db", r.snr2_db}, {"alpha", r.alpha},
          {"beta", r.beta},       {"rc1", r.rc1},         {"rc2", r.rc2},
          {"feasible", r.feasible}, {"rho_star", r.rho_star},
          {"r_nbs1", r.r_nbs1},   {"r_nbs2", r.r_nbs2},   {"delta_min", r.delta_min},
          {"delta_sum", r.delta_sum}};
}

void EmitRecords(std::ostream& os, const std::vector<SweepRecord>& records,
                 const std::string& format) {
  if (format == "csv") {
    WriteSweepCsv(os, records);
    return;
  }
  json arr = json::array();
  for (const SweepRecord& r : records) arr.push_back(RecordJson(r));
  os << arr.dump(2) << '\n';
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Competitive and Nash-bargaining operating points for the 2x2 "
               "Gaussian interference channel under FDM"};
  app.name("icbargain");
  app.require_subcommand(1);

  std::string output;
  std::size_t jobs = 0;
  double tol = kDefaultRhoTolerance;

  // solve
  ChannelFlags solve_ch;
  std::string solve_format = "json";
  auto* solve = app.add_subcommand("solve", "Nash bargaining solution for one channel");
  solve_ch.Register(solve);
  solve->add_option("--tol", tol, "rho tolerance")->capture_default_str();
  solve->add_option("--format", solve_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  solve->add_option("-o,--output", output, "output file (default stdout)");

  // region
  ChannelFlags region_ch;
  std::size_t samples = 512;
  std::string region_format = "csv";
  auto* region = app.add_subcommand("region", "sample the FDM rate-region boundary");
  region_ch.Register(region);
  region->add_option("--samples", samples, "number of rho samples")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  region->add_option("--format", region_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  region->add_option("-o,--output", output, "output file (default stdout)");

  // sweep-snr
  double sweep_alpha = 0.7;
  double sweep_beta = 0.7;
  AxisRange db_axis{0.0, 40.0, 0.25};
  double sweep_w = 2.0;
  std::string sweep_format = "csv";
  auto* sweep_snr = app.add_subcommand("sweep-snr", "delta metrics over an SNR1 x SNR2 grid");
  sweep_snr->add_option("--alpha", sweep_alpha, "fixed alpha")->capture_default_str();
  sweep_snr->add_option("--beta", sweep_beta, "fixed beta")->capture_default_str();
  sweep_snr->add_option("--min-db", db_axis.min, "lowest SNR (dB)")->capture_default_str();
  sweep_snr->add_option("--max-db", db_axis.max, "highest SNR (dB)")->capture_default_str();
  sweep_snr->add_option("--step-db", db_axis.step, "SNR step (dB)")->capture_default_str();

  // sweep-interference
  double sweep_snr1_db = 20.0;
  double sweep_snr2_db = 20.0;
  AxisRange coeff_axis{0.0, 1.0, 0.01};
  auto* sweep_int = app.add_subcommand("sweep-interference",
                                       "delta metrics over an alpha x beta grid");
  sweep_int->add_option("--snr1-db", sweep_snr1_db, "fixed SNR1 (dB)")->capture_default_str();
  sweep_int->add_option("--snr2-db", sweep_snr2_db, "fixed SNR2 (dB)")->capture_default_str();
  sweep_int->add_option("--min", coeff_axis.min, "lowest alpha/beta")->capture_default_str();
  sweep_int->add_option("--max", coeff_axis.max, "highest alpha/beta")->capture_default_str();
  sweep_int->add_option("--step", coeff_axis.step, "alpha/beta step")->capture_default_str();

  for (CLI::App* s : {sweep_snr, sweep_int}) {
    s->add_option("--w", sweep_w, "rate scale")->capture_default_str();
    s->add_option("-j,--jobs", jobs, "worker threads (0 = all cores)")
        ->envname("ICBARGAIN_JOBS")
        ->capture_default_str();
    s->add_option("--format", sweep_format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    s->add_option("-o,--output", output, "output file (default stdout)");
  }

  // iwf
  std::string game_file;
  double iwf_tol = 1e-10;
  std::size_t max_iters = 1000;
  auto* iwf = app.add_subcommand("iwf", "iterative water-filling on a K-band game");
  iwf->add_option("--game", game_file, "game descriptor JSON")->required();
  iwf->add_option("--tol", iwf_tol, "max per-band power change per round")
      ->capture_default_str();
  iwf->add_option("--max-iters", max_iters, "round limit")->capture_default_str();
  iwf->add_option("-o,--output", output, "output file (default stdout)");

  // bounds
  ChannelFlags bounds_ch;
  auto* bounds = app.add_subcommand("bounds", "very-strong-interference and Sato bounds");
  bounds_ch.Register(bounds);
  bounds->add_option("-o,--output", output, "output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "icbargain: " << e.what() << "\n";
    err << "run 'icbargain --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (solve->parsed()) {
      const StandardChannel sc = solve_ch.Resolve();
      const BargainingOutcome outcome = SolveNbs(sc, tol);
      Sink sink(output, out);
      if (solve_format == "json") {
        sink.stream() << OutcomeToJson(outcome, sc) << '\n';
      } else {
        WriteSweepCsv(sink.stream(), {RecordFromOutcome(sc, outcome)});
      }
      sink.Finish();
    } else if (region->parsed()) {
      const StandardChannel sc = region_ch.Resolve();
      const auto boundary = RegionBoundary(sc, samples);
      const BargainingOutcome outcome = SolveNbs(sc);
      Sink sink(output, out);
      if (region_format == "csv") {
        WriteRegionCsv(sink.stream(), boundary, outcome);
      } else {
        json arr = json::array();
        for (const BoundaryPoint& p : boundary) {
          arr.push_back({{"rho", p.rho}, {"r1", p.rates.r1}, {"r2", p.rates.r2}});
        }
        sink.stream() << arr.dump(2) << '\n';
      }
      sink.Finish();
    } else if (sweep_snr->parsed() || sweep_int->parsed()) {
      SweepSpec spec = sweep_snr->parsed()
                           ? SweepSpec::SnrGrid(sweep_alpha, sweep_beta, db_axis)
                           : SweepSpec::InterferenceGrid(sweep_snr1_db, sweep_snr2_db,
                                                         coeff_axis);
      spec.w = sweep_w;
      const auto records = RunSweep(spec, jobs);
      Sink sink(output, out);
      EmitRecords(sink.stream(), records, sweep_format);
      sink.Finish();
    } else if (iwf->parsed()) {
      const DiscreteGame game = ParseGameJson(ReadFile(game_file));
      const EquilibriumResult result = IterateWaterfilling(game, iwf_tol, max_iters);
      Sink sink(output, out);
      sink.stream() << EquilibriumToJson(result) << '\n';
      sink.Finish();
    } else if (bounds->parsed()) {
      const StandardChannel sc = bounds_ch.Resolve();
      Sink sink(output, out);
      sink.stream() << BoundsToJson(ComputeReferenceBounds(sc)) << '\n';
      sink.Finish();
    }
  } catch (const UsageError& e) {
    err << "icbargain: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "icbargain: invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IoError& e) {
    err << "icbargain: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace icbargain::cli
