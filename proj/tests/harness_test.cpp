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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "rlinit/harness.hpp"

namespace rlinit {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("rlinit_harness_" + name);
  fs::remove_all(dir);
  return dir;
}

int run(std::vector<std::string> args, std::string* out_text = nullptr, std::string* err_text = nullptr) {
  args.insert(args.begin(), "rlinit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

CliParseResult parse(std::vector<std::string> args) {
  args.insert(args.begin(), "rlinit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return parse_cli(static_cast<int>(argv.size()), argv.data());
}

RunTrace synthetic_trace(Rng& rng, int epochs) {
  RunTrace t;
  for (int e = 0; e <= epochs; ++e) t.rows.push_back({e, rng.uniform(-5, 5), rng.uniform(0, 2)});
  return t;
}

SummaryRecord summary_of(std::vector<double> losses) {
  std::vector<RunTrace> traces(1);
  for (std::size_t e = 0; e < losses.size(); ++e) {
    traces[0].rows.push_back({static_cast<int>(e), losses[e], 0.5});
  }
  return summarize(traces, std::nullopt);
}

TEST(TraceCsv, HeaderAndRowCount) {
  Rng rng(1);
  std::vector<RunTrace> traces{synthetic_trace(rng, 4), synthetic_trace(rng, 4)};
  const std::string csv = format_trace_csv(traces);
  EXPECT_EQ(csv.rfind("round,epoch,loss,grad_l2_norm\n", 0), 0u);
  EXPECT_EQ(count(csv, "\n"), 1 + 2 * 5);
  EXPECT_THROW(format_trace_csv({}), std::invalid_argument);
}

// Property: printing with 17 significant digits and parsing back is exact.
TEST(TraceCsvProperty, RoundTripIsExact) {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RunTrace> traces;
    const int rounds = 1 + static_cast<int>(rng.next_u64() % 4);
    const int epochs = static_cast<int>(rng.next_u64() % 6);
    for (int r = 0; r < rounds; ++r) traces.push_back(synthetic_trace(rng, epochs));
    const auto back = parse_trace_csv(format_trace_csv(traces));
    ASSERT_EQ(back.size(), traces.size());
    for (std::size_t r = 0; r < traces.size(); ++r) EXPECT_EQ(back[r].rows, traces[r].rows);
  }
}

TEST(TraceCsv, ParseRejectsGarbage) {
  EXPECT_ANY_THROW(parse_trace_csv("round,epoch,loss,grad_l2_norm\n0,0,abc,1\n"));
  EXPECT_ANY_THROW(parse_trace_csv("nope\n"));
}

// Property: summary statistics equal a direct recomputation.
TEST(SummaryProperty, MatchesBruteForce) {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const int rounds = 1 + static_cast<int>(rng.next_u64() % 5);
    const int epochs = 1 + static_cast<int>(rng.next_u64() % 5);
    std::vector<RunTrace> traces;
    for (int r = 0; r < rounds; ++r) traces.push_back(synthetic_trace(rng, epochs));
    const double fstar = -7.0;
    const auto s = summarize(traces, fstar);
    EXPECT_EQ(s.rounds, rounds);
    ASSERT_EQ(s.loss_mean.size(), static_cast<std::size_t>(epochs + 1));
    for (int e = 0; e <= epochs; ++e) {
      double m = 0, g = 0;
      for (const auto& t : traces) {
        m += t.rows[e].loss;
        g += t.rows[e].grad_l2_norm;
      }
      m /= rounds;
      g /= rounds;
      double v = 0, w = 0;
      for (const auto& t : traces) {
        v += std::pow(t.rows[e].loss - m, 2);
        w += std::pow(t.rows[e].grad_l2_norm - g, 2);
      }
      const double sd = rounds > 1 ? std::sqrt(v / (rounds - 1)) : 0.0;
      const double sdg = rounds > 1 ? std::sqrt(w / (rounds - 1)) : 0.0;
      EXPECT_NEAR(s.loss_mean[e], m, 1e-12);
      EXPECT_NEAR(s.loss_std[e], sd, 1e-12);
      EXPECT_NEAR(s.grad_mean[e], g, 1e-12);
      EXPECT_NEAR(s.grad_std[e], sdg, 1e-12);
      EXPECT_NEAR(s.loss_minus_fstar_mean[e], m - fstar, 1e-12);
      EXPECT_EQ(s.epochs[e], e);
    }
  }
}

TEST(SummaryCsv, ColumnsDependOnFstar) {
  Rng rng(4);
  std::vector<RunTrace> traces{synthetic_trace(rng, 2)};
  const auto plain = format_summary_csv(summarize(traces, std::nullopt));
  EXPECT_EQ(plain.rfind("epoch,loss_mean,loss_std,grad_l2_norm_mean,grad_l2_norm_std\n", 0), 0u);
  const auto with = format_summary_csv(summarize(traces, -1.0));
  EXPECT_NE(with.find("loss_minus_fstar_mean"), std::string::npos);
  EXPECT_EQ(count(with, "\n"), 4);
}

TEST(Plot, OnePolylinePerSeriesAndLegend) {
  const auto a = summary_of({3, 2, 1, 0.5});
  const auto b = summary_of({3, 2.5, 2.2, 2.1});
  const auto one = render_comparison_plot({{"dpg", a}}, PlotMetric::kLoss);
  EXPECT_EQ(count(one, "<polyline"), 1);
  EXPECT_NE(one.find(">dpg</text>"), std::string::npos);
  const auto two = render_comparison_plot({{"dpg", a}, {"a<b&c", b}}, PlotMetric::kLoss);
  EXPECT_EQ(count(two, "<polyline"), 2);
  EXPECT_NE(two.find("a&lt;b&amp;c"), std::string::npos);
  EXPECT_EQ(two.rfind("<svg", 0) == 0 || two.rfind("<?xml", 0) == 0, true);
  EXPECT_NE(two.find("</svg>"), std::string::npos);
  EXPECT_EQ(count(two, "<text"), count(two, "</text>"));
}

TEST(Plot, ConstantSeriesIsHorizontal) {
  const auto flat = render_comparison_plot({{"zero", summary_of({3, 3, 3})}}, PlotMetric::kLoss);
  const auto start = flat.find("points=\"");
  ASSERT_NE(start, std::string::npos);
  const auto end = flat.find('"', start + 8);
  std::istringstream pts(flat.substr(start + 8, end - start - 8));
  std::string pair;
  std::set<std::string> ys;
  while (pts >> pair) ys.insert(pair.substr(pair.find(',') + 1));
  EXPECT_EQ(ys.size(), 1u);
}

TEST(Plot, RejectsMismatchedEpochsAndMissingFstar) {
  EXPECT_ANY_THROW(render_comparison_plot({{"a", summary_of({1, 2})}, {"b", summary_of({1, 2, 3})}},
                                          PlotMetric::kLoss));
  EXPECT_ANY_THROW(render_comparison_plot({{"a", summary_of({1, 2})}}, PlotMetric::kLossMinusFstar));
  EXPECT_ANY_THROW(render_comparison_plot({}, PlotMetric::kLoss));
}

TEST(Cli, HelpExitsZero) {
  std::string out;
  EXPECT_EQ(run({"--help"}, &out), 0);
  EXPECT_NE(out.find("--init"), std::string::npos);
  EXPECT_NE(out.find("trace.csv"), std::string::npos);
}

TEST(Cli, UnknownInitializerListsValidNames) {
  std::string err;
  EXPECT_EQ(run({"--init", "dqg"}, nullptr, &err), 2);
  EXPECT_NE(err.find("unknown initializer 'dqg'"), std::string::npos);
  EXPECT_NE(err.find("zero, uniform, gaussian, dpg, ddpg, ppo, sac, a2c, trpo"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"--bogus"}), 2);
  EXPECT_EQ(run({"--rounds", "0"}), 2);
  EXPECT_EQ(run({"--task", "pauli-file"}), 2);
  EXPECT_EQ(run({"--qubits", "15", "--fstar"}), 2);
  EXPECT_EQ(run({"--optimizer", "sgd"}), 2);
}

TEST(Cli, PaperScaleFlagsParse) {
  const auto r = parse({"--qubits", "15", "--layers", "10", "--optimizer", "adam", "--lr", "0.01",
                        "--init", "dpg,zero,a3c"});
  ASSERT_TRUE(r.options.has_value()) << r.message;
  const auto& c = r.options->config;
  EXPECT_EQ(c.num_qubits, 15);
  EXPECT_EQ(c.num_layers, 10);
  EXPECT_EQ(c.optimizer.kind, OptimizerKind::kAdam);
  EXPECT_EQ(c.optimizer.learning_rate, 0.01);
  EXPECT_EQ(build_problem(c).circuit.num_params, 300u);
  EXPECT_EQ(r.options->methods,
            (std::vector<InitMethod>{InitMethod::kDpg, InitMethod::kZero, InitMethod::kA2c}));
}

TEST(Cli, ConfigDumpShowsDefaults) {
  const auto r = parse({});
  ASSERT_TRUE(r.options.has_value());
  const auto dump = format_config(*r.options);
  for (const char* line : {"rl-episodes = 50\n", "rl-alpha = 0.05\n", "ddpg-lr = 0.02\n",
                           "trpo-delta = 0.01\n", "ppo-clip = 0.2\n", "sac-entropy = 0.01\n",
                           "gaussian-var = 0.00625\n", "epochs = 100\n", "rounds = 5\n"}) {
    EXPECT_NE(dump.find(line), std::string::npos) << line;
  }
}

TEST(Cli, ConfigFileRoundTripAndOverride) {
  const auto dir = scratch_dir("config");
  fs::create_directories(dir);
  const auto first = parse({"--qubits", "3", "--layers", "1", "--init", "dpg,sac", "--rl-sigma", "0.3",
                            "--noise", "constant", "--noise-var", "0.002", "--remap"});
  ASSERT_TRUE(first.options.has_value()) << first.message;
  const auto dump = format_config(*first.options);
  const auto path = dir / "config.txt";
  std::ofstream(path) << dump;
  const auto again = parse({"--config", path.string()});
  ASSERT_TRUE(again.options.has_value()) << again.message;
  EXPECT_EQ(format_config(*again.options), dump);
  const auto overridden = parse({"--config", path.string(), "--qubits", "5"});
  ASSERT_TRUE(overridden.options.has_value());
  EXPECT_EQ(overridden.options->config.num_qubits, 5);
  EXPECT_EQ(overridden.options->config.rl.policy_sigma, 0.3);
  fs::remove_all(dir);
}

TEST(Cli, RunWritesOutputsAndIsDeterministic) {
  const auto a = scratch_dir("det_a");
  const auto b = scratch_dir("det_b");
  const std::vector<std::string> common{"--qubits", "3", "--layers", "1", "--epochs", "5",
                                        "--rounds", "2", "--rl-episodes", "5", "--init",
                                        "dpg,uniform,sac", "--noise", "constant", "--fstar"};
  auto args_a = common, args_b = common;
  args_a.insert(args_a.end(), {"--out", a.string()});
  args_b.insert(args_b.end(), {"--out", b.string()});
  std::string out;
  ASSERT_EQ(run(args_a, &out), 0) << out;
  ASSERT_EQ(run(args_b), 0);
  for (const char* f : {"dpg/trace.csv", "dpg/summary.csv", "uniform/trace.csv", "sac/summary.csv",
                        "loss.svg", "grad_norm.svg", "loss_minus_fstar.svg"}) {
    ASSERT_TRUE(fs::exists(a / f)) << f;
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
  }
  EXPECT_EQ(count(slurp(a / "dpg/trace.csv"), "\n"), 1 + 2 * 6);
  EXPECT_EQ(count(slurp(a / "loss.svg"), "<polyline"), 3);
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(Experiment, ZeroInitRoundsAgreeWithoutNoise) {
  ExperimentConfig c;
  c.num_qubits = 3;
  c.num_layers = 1;
  c.init_method = InitMethod::kZero;
  c.epochs = 5;
  c.rounds = 2;
  const auto r = run_experiment(c);
  ASSERT_EQ(r.traces.size(), 2u);
  EXPECT_EQ(r.traces[0].rows, r.traces[1].rows);
  c.base_seed = 99;
  EXPECT_EQ(run_experiment(c).traces[0].rows, r.traces[0].rows);
  EXPECT_EQ(r.summary.loss_std.back(), 0.0);
}

TEST(Experiment, RoundsUseDistinctSeeds) {
  ExperimentConfig c;
  c.num_qubits = 3;
  c.num_layers = 1;
  c.init_method = InitMethod::kUniform;
  c.epochs = 1;
  c.rounds = 3;
  const auto r = run_experiment(c);
  EXPECT_NE(r.initial_thetas[0], r.initial_thetas[1]);
  EXPECT_NE(r.initial_thetas[1], r.initial_thetas[2]);
}

TEST(Experiment, PauliFileUsesGivensAnsatz) {
  ExperimentConfig c;
  c.task = TaskKind::kPauliFile;
  c.hamiltonian_path = fs::path(RLINIT_DATA_DIR) / "h2_sto3g.pauli";
  c.init_method = InitMethod::kZero;
  c.epochs = 60;
  c.rounds = 1;
  c.optimizer.learning_rate = 0.1;
  c.report_fstar = true;
  EXPECT_EQ(c.resolved_ansatz(), AnsatzKind::kGivens);
  EXPECT_EQ(c.resolved_gaussian().variance_gamma2, 1.0 / 288.0);
  const auto r = run_experiment(c);
  ASSERT_TRUE(r.summary.f_star.has_value());
  EXPECT_NEAR(*r.summary.f_star, -1.1372838, 1e-6);
  EXPECT_LT(r.summary.loss_minus_fstar_mean.back(), r.summary.loss_minus_fstar_mean.front());
  EXPECT_GE(r.summary.loss_minus_fstar_mean.back(), -1e-9);
}

TEST(Experiment, DpgNotWorseThanZeroOnSixQubits) {
  ExperimentConfig c;
  c.num_qubits = 6;
  c.num_layers = 4;
  c.optimizer.kind = OptimizerKind::kAdam;
  c.epochs = 50;
  c.rounds = 3;
  c.init_method = InitMethod::kZero;
  const double zero = run_experiment(c).summary.final_loss_mean();
  c.init_method = InitMethod::kDpg;
  const double dpg = run_experiment(c).summary.final_loss_mean();
  EXPECT_LE(dpg, zero);
}

}  // namespace
}  // namespace rlinit
