// Copyright 2026 The rlinit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rlinit/initializers.hpp"
#include "rlinit/vqa.hpp"

namespace rlinit {

enum class TaskKind { kHeisenberg, kPauliFile };
enum class AnsatzKind { kLayered, kGivens };

std::string to_string(TaskKind task);
std::string to_string(AnsatzKind ansatz);

struct ExperimentConfig {
  TaskKind task = TaskKind::kHeisenberg;
  int num_qubits = 4;
  int num_layers = 2;
  std::filesystem::path hamiltonian_path;
  /// Unset: layered for Heisenberg, Givens for Pauli files.
  std::optional<AnsatzKind> ansatz;
  int num_electrons = 2;
  InitMethod init_method = InitMethod::kDpg;
  OptimizerConfig optimizer;
  NoiseModel noise;
  int epochs = 100;
  int rounds = 5;
  std::uint64_t base_seed = 0;
  RLHyperparams rl;
  /// Unset: the Heisenberg preset for Heisenberg, the chemistry preset otherwise.
  std::optional<GaussianInitParams> gaussian;
  UniformRange uniform;
  bool remap_to_0_2pi = false;
  /// Feed the configured gradient noise to the RL pre-training as well.
  bool noisy_pretraining = false;
  GradientMethod gradient_method = GradientMethod::kAdjoint;
  /// Compute the exact ground energy and report loss - f_*.
  bool report_fstar = false;
  std::filesystem::path output_dir = "out";

  AnsatzKind resolved_ansatz() const;
  GaussianInitParams resolved_gaussian() const;
  void validate() const;
};

/// Hamiltonian and circuit described by a config.
struct Problem {
  PauliSum hamiltonian;
  CircuitTemplate circuit;
};

Problem build_problem(const ExperimentConfig& config);

struct SummaryRecord {
  int rounds = 0;
  std::vector<int> epochs;
  std::vector<double> loss_mean;
  std::vector<double> loss_std;
  std::vector<double> grad_mean;
  std::vector<double> grad_std;
  std::optional<double> f_star;
  /// Per-epoch mean of (loss - f_star); empty without f_star.
  std::vector<double> loss_minus_fstar_mean;

  double final_loss_mean() const { return loss_mean.back(); }
  double final_loss_std() const { return loss_std.back(); }
};

/// Per-epoch mean and sample standard deviation (n - 1; zero for one round).
SummaryRecord summarize(const std::vector<RunTrace>& traces, std::optional<double> f_star);

struct ExperimentResult {
  std::vector<ParameterVector> initial_thetas;
  std::vector<RunTrace> traces;
  SummaryRecord summary;
};

/// Round k draws theta0 with seed base_seed + k and trains with seed
/// base_seed + 1000 + k. Nothing is written to disk.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Same, reusing an already-built problem and ground energy.
ExperimentResult run_experiment(const ExperimentConfig& config, const Problem& problem,
                                std::optional<double> f_star);

// ---------------------------------------------------------------------------
// Output

/// Header `round,epoch,loss,grad_l2_norm`, one row per (round, epoch).
void write_trace_csv(const std::vector<RunTrace>& traces, const std::filesystem::path& path);
std::string format_trace_csv(const std::vector<RunTrace>& traces);
std::vector<RunTrace> parse_trace_csv(const std::string& text);

void write_summary_csv(const SummaryRecord& summary, const std::filesystem::path& path);
std::string format_summary_csv(const SummaryRecord& summary);

enum class PlotMetric { kLoss, kGradNorm, kLossMinusFstar };
std::string to_string(PlotMetric metric);

std::string render_comparison_plot(const std::vector<std::pair<std::string, SummaryRecord>>& series,
                                   PlotMetric metric);
void emit_comparison_plot(const std::vector<std::pair<std::string, SummaryRecord>>& series,
                          PlotMetric metric, const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Command line

struct CliOptions {
  ExperimentConfig config;
  std::vector<InitMethod> methods;
  bool dry_run = false;
};

/// Options are written with the same names the command line accepts, so the
/// output can be passed back through --config.
std::string format_config(const CliOptions& options);

struct CliParseResult {
  std::optional<CliOptions> options;
  int exit_code = 0;
  std::string message;
};

/// `options` is set when the experiment should run. Otherwise exit_code is 0
/// for --help and 2 for usage errors, and `message` holds the text to print.
CliParseResult parse_cli(int argc, const char* const* argv);

/// Parses, runs every requested initializer, writes outputs. Returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rlinit
