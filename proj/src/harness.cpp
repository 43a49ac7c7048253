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

#include "rlinit/harness.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "rlinit/ansatz.hpp"
#include "rlinit/eigensolver.hpp"
#include "rlinit/hamiltonians.hpp"

namespace rlinit {

std::string to_string(TaskKind task) {
  return task == TaskKind::kHeisenberg ? "heisenberg" : "pauli-file";
}

std::string to_string(AnsatzKind ansatz) {
  return ansatz == AnsatzKind::kLayered ? "layered" : "givens";
}

AnsatzKind ExperimentConfig::resolved_ansatz() const {
  if (ansatz) return *ansatz;
  return task == TaskKind::kHeisenberg ? AnsatzKind::kLayered : AnsatzKind::kGivens;
}

GaussianInitParams ExperimentConfig::resolved_gaussian() const {
  if (gaussian) return *gaussian;
  return task == TaskKind::kHeisenberg ? GaussianInitParams::heisenberg()
                                       : GaussianInitParams::chemistry();
}

void ExperimentConfig::validate() const {
  if (task == TaskKind::kHeisenberg) {
    if (num_qubits < 2) throw std::invalid_argument("--qubits must be at least 2");
    if (num_qubits > kMaxQubits) {
      throw std::invalid_argument("--qubits must be at most " +
                                  std::to_string(kMaxQubits));
    }
    if (report_fstar && num_qubits > kMaxExactQubits) {
      throw std::invalid_argument("--fstar needs an exact ground energy, available up to " +
                                  std::to_string(kMaxExactQubits) + " qubits");
    }
  } else if (hamiltonian_path.empty()) {
    throw std::invalid_argument("--task pauli-file requires --hamiltonian");
  }
  if (resolved_ansatz() == AnsatzKind::kLayered && num_layers < 1) {
    throw std::invalid_argument("--layers must be at least 1");
  }
  if (rounds < 1) throw std::invalid_argument("--rounds must be at least 1");
  if (epochs < 1) throw std::invalid_argument("--epochs must be at least 1");
  if (!(optimizer.learning_rate > 0.0)) throw std::invalid_argument("--lr must be positive");
  noise.validate();
  rl.validate();
  if (!(resolved_gaussian().variance_gamma2 > 0.0)) {
    throw std::invalid_argument("--gaussian-var must be positive");
  }
  if (!(uniform.high > uniform.low)) {
    throw std::invalid_argument("--uniform-high must exceed --uniform-low");
  }
}

Problem build_problem(const ExperimentConfig& config) {
  Problem problem;
  problem.hamiltonian = config.task == TaskKind::kHeisenberg
                            ? build_heisenberg(config.num_qubits)
                            : load_pauli_sum(config.hamiltonian_path);
  const int n = problem.hamiltonian.num_qubits();
  if (config.resolved_ansatz() == AnsatzKind::kLayered) {
    problem.circuit = build_heisenberg_ansatz(n, config.num_layers);
  } else {
    problem.circuit = build_givens_ansatz(excitation_layout(config.num_electrons, n));
  }
  return problem;
}

// ---------------------------------------------------------------------------
// Experiment

SummaryRecord summarize(const std::vector<RunTrace>& traces, std::optional<double> f_star) {
  if (traces.empty()) throw std::invalid_argument("no traces to summarize");
  const std::size_t rows = traces.front().rows.size();
  for (const auto& t : traces) {
    if (t.rows.size() != rows) throw std::invalid_argument("traces have different epoch counts");
  }
  SummaryRecord s;
  s.rounds = static_cast<int>(traces.size());
  s.f_star = f_star;
  const double n = static_cast<double>(traces.size());
  const auto mean_std = [&](std::size_t e, auto field) {
    double mean = 0.0;
    for (const auto& t : traces) mean += field(t.rows[e]);
    mean /= n;
    double ss = 0.0;
    for (const auto& t : traces) {
      const double d = field(t.rows[e]) - mean;
      ss += d * d;
    }
    const double sd = traces.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    return std::pair{mean, sd};
  };
  for (std::size_t e = 0; e < rows; ++e) {
    s.epochs.push_back(traces.front().rows[e].epoch);
    const auto [lm, ls] = mean_std(e, [](const RunTrace::Row& r) { return r.loss; });
    const auto [gm, gs] = mean_std(e, [](const RunTrace::Row& r) { return r.grad_l2_norm; });
    s.loss_mean.push_back(lm);
    s.loss_std.push_back(ls);
    s.grad_mean.push_back(gm);
    s.grad_std.push_back(gs);
    if (f_star) {
      double gap = 0.0;
      for (const auto& t : traces) gap += t.rows[e].loss - *f_star;
      s.loss_minus_fstar_mean.push_back(gap / n);
    }
  }
  return s;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  const Problem problem = build_problem(config);
  std::optional<double> f_star;
  if (config.report_fstar) {
    f_star = exact_ground_energy(problem.hamiltonian, problem.hamiltonian.num_qubits());
  }
  return run_experiment(config, problem, f_star);
}

ExperimentResult run_experiment(const ExperimentConfig& config, const Problem& problem,
                                std::optional<double> f_star) {
  config.validate();
  const PauliSum& h = problem.hamiltonian;
  const CircuitTemplate& circuit = problem.circuit;

  NoiseModel noise = config.noise;
  if (noise.kind == NoiseKind::kAdaptive) {
    noise.hamiltonian_norm = hamiltonian_norm(h, noise.norm_mode).value;
  }

  InitializerSettings settings;
  settings.rl = config.rl;
  settings.gaussian = config.resolved_gaussian();
  settings.uniform = config.uniform;
  settings.remap_to_0_2pi = config.remap_to_0_2pi;

  ExperimentResult result;
  for (int k = 0; k < config.rounds; ++k) {
    const std::uint64_t round = static_cast<std::uint64_t>(k);
    Objective objective = make_circuit_objective(circuit, h, config.gradient_method);
    if (config.noisy_pretraining && noise.kind != NoiseKind::kNone) {
      auto clean = objective.cost_and_gradient;
      auto noise_rng = std::make_shared<Rng>(config.base_seed + 2000 + round);
      objective.cost_and_gradient = [clean, noise, noise_rng](std::span<const double> theta) {
        CostAndGradient cg = clean(theta);
        cg.gradient = inject_noise(cg.gradient, noise, *noise_rng);
        return cg;
      };
    }
    Rng init_rng(config.base_seed + round);
    InitResult init = initialize(config.init_method, objective, settings, init_rng);

    TrainingConfig training;
    training.optimizer = config.optimizer;
    training.noise = noise;
    training.epochs = config.epochs;
    training.seed = config.base_seed + 1000 + round;
    training.gradient_method = config.gradient_method;
    result.traces.push_back(run_training(circuit, h, init.theta, training));
    result.initial_thetas.push_back(std::move(init.theta));
  }
  result.summary = summarize(result.traces, f_star);
  return result;
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string shortest(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing: " +
                             std::strerror(errno));
  }
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

double parse_double(const std::string& field, int line) {
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (field.empty() || *end != '\0') {
    throw std::invalid_argument("line " + std::to_string(line) + ": bad number '" + field + "'");
  }
  return v;
}

}  // namespace

std::string format_trace_csv(const std::vector<RunTrace>& traces) {
  if (traces.empty()) throw std::invalid_argument("no traces to write");
  std::string out = "round,epoch,loss,grad_l2_norm\n";
  for (std::size_t k = 0; k < traces.size(); ++k) {
    for (const auto& row : traces[k].rows) {
      out += std::to_string(k) + ',' + std::to_string(row.epoch) + ',' + fmt17(row.loss) + ',' +
             fmt17(row.grad_l2_norm) + '\n';
    }
  }
  return out;
}

void write_trace_csv(const std::vector<RunTrace>& traces, const std::filesystem::path& path) {
  write_file(path, format_trace_csv(traces));
}

std::vector<RunTrace> parse_trace_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "round,epoch,loss,grad_l2_norm") {
    throw std::invalid_argument("missing trace CSV header");
  }
  std::vector<RunTrace> traces;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::array<std::string, 4> f;
    std::istringstream fields(line);
    for (auto& s : f) {
      if (!std::getline(fields, s, ',')) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 4 fields");
      }
    }
    const auto round = static_cast<std::size_t>(parse_double(f[0], line_no));
    if (round == traces.size()) traces.emplace_back();
    if (round + 1 != traces.size()) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": rounds out of order");
    }
    RunTrace::Row row;
    row.epoch = static_cast<int>(parse_double(f[1], line_no));
    row.loss = parse_double(f[2], line_no);
    row.grad_l2_norm = parse_double(f[3], line_no);
    traces.back().rows.push_back(row);
  }
  return traces;
}

std::string format_summary_csv(const SummaryRecord& s) {
  std::string out = "epoch,loss_mean,loss_std,grad_l2_norm_mean,grad_l2_norm_std";
  const bool gap = !s.loss_minus_fstar_mean.empty();
  if (gap) out += ",loss_minus_fstar_mean";
  out += '\n';
  for (std::size_t e = 0; e < s.epochs.size(); ++e) {
    out += std::to_string(s.epochs[e]) + ',' + fmt17(s.loss_mean[e]) + ',' + fmt17(s.loss_std[e]) +
           ',' + fmt17(s.grad_mean[e]) + ',' + fmt17(s.grad_std[e]);
    if (gap) out += ',' + fmt17(s.loss_minus_fstar_mean[e]);
    out += '\n';
  }
  return out;
}

void write_summary_csv(const SummaryRecord& summary, const std::filesystem::path& path) {
  write_file(path, format_summary_csv(summary));
}

// ---------------------------------------------------------------------------
// SVG

std::string to_string(PlotMetric metric) {
  switch (metric) {
    case PlotMetric::kLoss:
      return "loss";
    case PlotMetric::kGradNorm:
      return "grad_norm";
    case PlotMetric::kLossMinusFstar:
      return "loss_minus_fstar";
  }
  return "?";
}

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

double nice_step(double range) {
  const double raw = range / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double f = raw / mag;
  const double nice = f < 1.5 ? 1.0 : f < 3.5 ? 2.0 : f < 7.5 ? 5.0 : 10.0;
  return nice * mag;
}

const std::vector<double>& metric_values(const SummaryRecord& s, PlotMetric metric) {
  switch (metric) {
    case PlotMetric::kLoss:
      return s.loss_mean;
    case PlotMetric::kGradNorm:
      return s.grad_mean;
    case PlotMetric::kLossMinusFstar:
      if (s.loss_minus_fstar_mean.empty()) {
        throw std::invalid_argument("summary has no ground energy for loss - f*");
      }
      return s.loss_minus_fstar_mean;
  }
  throw std::logic_error("unknown metric");
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#17becf"};

}  // namespace

std::string render_comparison_plot(const std::vector<std::pair<std::string, SummaryRecord>>& series,
                                   PlotMetric metric) {
  if (series.empty()) throw std::invalid_argument("nothing to plot");
  const std::vector<int>& epochs = series.front().second.epochs;
  if (epochs.empty()) throw std::invalid_argument("summary has no epochs");
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const auto& [label, s] : series) {
    if (s.epochs != epochs) {
      throw std::invalid_argument("summary '" + label + "' has a different epoch count");
    }
    for (double v : metric_values(s, metric)) {
      if (!std::isfinite(v)) throw std::invalid_argument("non-finite value in '" + label + "'");
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi))) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double ystep = nice_step(hi - lo);
  const double ylo = std::floor(lo / ystep) * ystep;
  const double yhi = std::ceil(hi / ystep) * ystep;
  const double xlo = epochs.front();
  const double xhi = epochs.back() > epochs.front() ? epochs.back() : epochs.front() + 1.0;
  const double xstep = nice_step(xhi - xlo);

  constexpr double kWidth = 800, kHeight = 500;
  constexpr double kLeft = 80, kRight = 200, kTop = 40, kBottom = 60;
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  const auto px = [&](double x) { return kLeft + (x - xlo) / (xhi - xlo) * pw; };
  const auto py = [&](double y) { return kTop + (yhi - y) / (yhi - ylo) * ph; };

  std::string title = metric == PlotMetric::kLoss       ? "Loss"
                      : metric == PlotMetric::kGradNorm ? "Gradient L2 norm"
                                                        : "Loss minus ground energy";
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n"
      << "<text x=\"" << coord(kLeft + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << title << " (mean over rounds)</text>\n";

  svg << "<g stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (double y = ylo; y <= yhi + ystep * 1e-9; y += ystep) {
    svg << "<line x1=\"" << coord(kLeft) << "\" y1=\"" << coord(py(y)) << "\" x2=\""
        << coord(kLeft + pw) << "\" y2=\"" << coord(py(y)) << "\"/>\n";
  }
  svg << "</g>\n";
  svg << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << coord(kLeft) << "\" y1=\"" << coord(kTop + ph) << "\" x2=\""
      << coord(kLeft + pw) << "\" y2=\"" << coord(kTop + ph) << "\"/>\n"
      << "<line x1=\"" << coord(kLeft) << "\" y1=\"" << coord(kTop) << "\" x2=\"" << coord(kLeft)
      << "\" y2=\"" << coord(kTop + ph) << "\"/>\n"
      << "</g>\n";

  svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (double x = std::ceil(xlo / xstep) * xstep; x <= xhi + xstep * 1e-9; x += xstep) {
    svg << "<line x1=\"" << coord(px(x)) << "\" y1=\"" << coord(kTop + ph) << "\" x2=\""
        << coord(px(x)) << "\" y2=\"" << coord(kTop + ph + 5) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << coord(px(x)) << "\" y=\"" << coord(kTop + ph + 20)
        << "\" text-anchor=\"middle\">" << tick_label(x) << "</text>\n";
  }
  for (double y = ylo; y <= yhi + ystep * 1e-9; y += ystep) {
    svg << "<text x=\"" << coord(kLeft - 8) << "\" y=\"" << coord(py(y) + 4)
        << "\" text-anchor=\"end\">" << tick_label(y) << "</text>\n";
  }
  svg << "<text x=\"" << coord(kLeft + pw / 2) << "\" y=\"" << coord(kHeight - 15)
      << "\" text-anchor=\"middle\">epoch</text>\n"
      << "</g>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& values = metric_values(series[i].second, metric);
    const char* color = kPalette[i % std::size(kPalette)];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t e = 0; e < values.size(); ++e) {
      if (e) svg << ' ';
      svg << coord(px(epochs[e])) << ',' << coord(py(values[e]));
    }
    svg << "\"/>\n";
  }

  svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double y = kTop + 10 + 20.0 * static_cast<double>(i);
    const double x = kLeft + pw + 20;
    svg << "<line x1=\"" << coord(x) << "\" y1=\"" << coord(y) << "\" x2=\"" << coord(x + 24)
        << "\" y2=\"" << coord(y) << "\" stroke=\"" << kPalette[i % std::size(kPalette)]
        << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << coord(x + 30) << "\" y=\"" << coord(y + 4) << "\">"
        << xml_escape(series[i].first) << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

void emit_comparison_plot(const std::vector<std::pair<std::string, SummaryRecord>>& series,
                          PlotMetric metric, const std::filesystem::path& path) {
  write_file(path, render_comparison_plot(series, metric));
}

// ---------------------------------------------------------------------------
// Command line

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

constexpr const char* kFooter = R"(Output layout (under --out):
  config.txt               resolved options, reusable with --config
  <init>/trace.csv         round,epoch,loss,grad_l2_norm for every round
  <init>/summary.csv       per-epoch mean and sample std across rounds
  loss.svg, grad_norm.svg  comparison plots over all --init methods
  loss_minus_fstar.svg     with --fstar

Row epoch 0 holds the loss and noiseless gradient norm at the initial
parameters. Row e >= 1 holds the loss after optimizer step e and the norm of
the (possibly noisy) gradient used by that step.

Round k initializes with seed --seed + k and trains with seed --seed + 1000 + k.)";

}  // namespace

std::string format_config(const CliOptions& o) {
  const ExperimentConfig& c = o.config;
  std::vector<std::string> methods;
  for (InitMethod m : o.methods) methods.push_back(to_string(m));
  std::ostringstream out;
  const auto kv = [&out](const char* key, const std::string& value) {
    out << key << " = " << value << '\n';
  };
  const auto num = [](double v) { return shortest(v); };
  const auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  kv("task", to_string(c.task));
  if (c.task == TaskKind::kHeisenberg) {
    kv("qubits", std::to_string(c.num_qubits));
  } else {
    kv("hamiltonian", '"' + c.hamiltonian_path.string() + '"');
  }
  kv("ansatz", to_string(c.resolved_ansatz()));
  kv("layers", std::to_string(c.num_layers));
  kv("electrons", std::to_string(c.num_electrons));
  kv("init", '"' + join(methods, ",") + '"');
  kv("optimizer", to_string(c.optimizer.kind));
  kv("lr", num(c.optimizer.learning_rate));
  kv("adam-beta1", num(c.optimizer.adam_beta1));
  kv("adam-beta2", num(c.optimizer.adam_beta2));
  kv("adam-eps", num(c.optimizer.adam_epsilon));
  kv("noise", to_string(c.noise.kind));
  kv("noise-var", num(c.noise.constant_variance));
  kv("noise-prefactor", num(c.noise.adaptive_prefactor));
  kv("norm", to_string(c.noise.norm_mode));
  kv("noisy-pretraining", flag(c.noisy_pretraining));
  kv("epochs", std::to_string(c.epochs));
  kv("rounds", std::to_string(c.rounds));
  kv("seed", std::to_string(c.base_seed));
  kv("gradient", to_string(c.gradient_method));
  kv("fstar", flag(c.report_fstar));
  kv("out", '"' + c.output_dir.string() + '"');
  kv("gaussian-var", num(c.resolved_gaussian().variance_gamma2));
  kv("uniform-low", num(c.uniform.low));
  kv("uniform-high", num(c.uniform.high));
  kv("remap", flag(c.remap_to_0_2pi));
  kv("rl-episodes", std::to_string(c.rl.episodes));
  kv("rl-alpha", num(c.rl.step_size_alpha));
  kv("rl-sigma", num(c.rl.policy_sigma));
  kv("rl-batch", std::to_string(c.rl.batch_size));
  kv("rl-phi-std", num(c.rl.initial_phi_std));
  kv("trpo-delta", num(c.rl.trpo_kl_delta));
  kv("ppo-clip", num(c.rl.ppo_clip_epsilon));
  kv("ppo-epochs", std::to_string(c.rl.ppo_inner_epochs));
  kv("baseline-beta", num(c.rl.baseline_lr_beta));
  kv("sac-entropy", num(c.rl.sac_entropy_alpha));
  kv("sac-lr", num(c.rl.sac_actor_lr));
  kv("ddpg-lr", num(c.rl.ddpg_actor_lr));
  kv("ddpg-noise", num(c.rl.ddpg_exploration_std));
  kv("ddpg-critic-steps", std::to_string(c.rl.ddpg_critic_steps));
  kv("critic-lr", num(c.rl.critic_lr));
  kv("critic-hidden", std::to_string(c.rl.critic_hidden));
  kv("critic-steps", std::to_string(c.rl.critic_steps));
  return out.str();
}

CliParseResult parse_cli(int argc, const char* const* argv) {
  CliOptions opts;
  ExperimentConfig& c = opts.config;

  std::string task = "heisenberg";
  std::string ansatz;
  std::string init = "dpg";
  std::string optimizer = to_string(c.optimizer.kind);
  std::string noise = "none";
  std::string norm = to_string(c.noise.norm_mode);
  std::string gradient = "adjoint";
  std::string hamiltonian;
  std::string out_dir = c.output_dir.string();
  std::optional<double> gaussian_var;
  double ddpg_lr = c.rl.ddpg_actor_lr;

  CLI::App app{"Reinforcement-learning parameter initialization for variational circuits.",
               "rlinit"};
  app.footer(kFooter);
  app.set_config("--config", "", "Read options from a file of `key = value` lines")
      ->check(CLI::ExistingFile);

  const auto choice = [](std::initializer_list<std::string> names) {
    return CLI::IsMember(std::vector<std::string>(names));
  };
  app.add_option("--task", task, "heisenberg or pauli-file")
      ->check(choice({"heisenberg", "pauli-file"}))
      ->capture_default_str();
  app.add_option("--qubits", c.num_qubits, "Qubits for the Heisenberg task")->capture_default_str();
  app.add_option("--layers", c.num_layers, "Layers of the layered ansatz")->capture_default_str();
  app.add_option("--hamiltonian", hamiltonian, "Pauli-sum file for --task pauli-file");
  app.add_option("--ansatz", ansatz, "layered or givens (default: by task)")
      ->check(choice({"layered", "givens"}));
  app.add_option("--electrons", c.num_electrons, "Electrons for the Givens ansatz")
      ->capture_default_str();
  app.add_option("--init", init,
                 "Comma-separated initializers: " + join(init_method_names(), ", "))
      ->capture_default_str();
  app.add_option("--optimizer", optimizer, "gd or adam")
      ->check(choice({"gd", "adam"}))
      ->capture_default_str();
  app.add_option("--lr", c.optimizer.learning_rate, "Learning rate")->capture_default_str();
  app.add_option("--adam-beta1", c.optimizer.adam_beta1)->capture_default_str();
  app.add_option("--adam-beta2", c.optimizer.adam_beta2)->capture_default_str();
  app.add_option("--adam-eps", c.optimizer.adam_epsilon)->capture_default_str();
  app.add_option("--noise", noise, "Gradient noise: none, constant, adaptive")
      ->check(choice({"none", "constant", "adaptive"}))
      ->capture_default_str();
  app.add_option("--noise-var", c.noise.constant_variance, "Variance of constant noise")
      ->capture_default_str();
  app.add_option("--noise-prefactor", c.noise.adaptive_prefactor, "Adaptive noise prefactor")
      ->capture_default_str();
  app.add_option("--norm", norm, "Hamiltonian norm for adaptive noise: coeff-l1 or spectral")
      ->check(choice({"coeff-l1", "spectral"}))
      ->capture_default_str();
  app.add_flag("--noisy-pretraining", c.noisy_pretraining,
               "Apply the gradient noise during RL pre-training too");
  app.add_option("--epochs", c.epochs, "Optimizer steps per round")->capture_default_str();
  app.add_option("--rounds", c.rounds, "Independent rounds per initializer")
      ->capture_default_str();
  app.add_option("--seed", c.base_seed, "Base seed")->capture_default_str();
  app.add_option("--gradient", gradient, "adjoint or shift")
      ->check(choice({"adjoint", "shift"}))
      ->capture_default_str();
  app.add_flag("--fstar", c.report_fstar, "Report loss minus the exact ground energy");
  app.add_option("--out", out_dir, "Output directory")->capture_default_str();
  app.add_option("--gaussian-var", gaussian_var, "Variance of the Gaussian baseline");
  app.add_option("--uniform-low", c.uniform.low)->capture_default_str();
  app.add_option("--uniform-high", c.uniform.high)->capture_default_str();
  app.add_flag("--remap", c.remap_to_0_2pi, "Map RL actions from (-1, 1) to (0, 2 pi)");
  app.add_option("--rl-episodes", c.rl.episodes)->capture_default_str();
  app.add_option("--rl-alpha", c.rl.step_size_alpha, "Actor step size")->capture_default_str();
  app.add_option("--rl-sigma", c.rl.policy_sigma, "Policy standard deviation")
      ->capture_default_str();
  app.add_option("--rl-batch", c.rl.batch_size, "Actions per episode")->capture_default_str();
  app.add_option("--rl-phi-std", c.rl.initial_phi_std, "Spread of the initial policy parameters")
      ->capture_default_str();
  app.add_option("--trpo-delta", c.rl.trpo_kl_delta)->capture_default_str();
  app.add_option("--ppo-clip", c.rl.ppo_clip_epsilon)->capture_default_str();
  app.add_option("--ppo-epochs", c.rl.ppo_inner_epochs)->capture_default_str();
  app.add_option("--baseline-beta", c.rl.baseline_lr_beta)->capture_default_str();
  app.add_option("--sac-entropy", c.rl.sac_entropy_alpha)->capture_default_str();
  app.add_option("--sac-lr", c.rl.sac_actor_lr)->capture_default_str();
  app.add_option("--ddpg-lr", ddpg_lr, "DDPG actor and critic rate")->capture_default_str();
  app.add_option("--ddpg-noise", c.rl.ddpg_exploration_std)->capture_default_str();
  app.add_option("--ddpg-critic-steps", c.rl.ddpg_critic_steps)->capture_default_str();
  app.add_option("--critic-lr", c.rl.critic_lr, "SAC and A2C critic rate")->capture_default_str();
  app.add_option("--critic-hidden", c.rl.critic_hidden)->capture_default_str();
  app.add_option("--critic-steps", c.rl.critic_steps)->capture_default_str();
  app.add_flag("--dry-run", opts.dry_run, "Print the resolved options and exit");

  CliParseResult result;
  const auto usage_error = [&](const std::string& msg) {
    result.exit_code = 2;
    result.message = "error: " + msg + "\nRun with --help for usage.\n";
    return result;
  };
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    result.exit_code = 0;
    result.message = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    return usage_error(e.what());
  }

  for (const auto& name : split_list(init)) {
    const auto m = parse_init_method(name);
    if (!m) {
      return usage_error("unknown initializer '" + name +
                         "'; valid names: " + join(init_method_names(), ", "));
    }
    if (std::find(opts.methods.begin(), opts.methods.end(), *m) == opts.methods.end()) {
      opts.methods.push_back(*m);
    }
  }
  if (opts.methods.empty()) {
    return usage_error("--init is empty; valid names: " + join(init_method_names(), ", "));
  }
  c.init_method = opts.methods.front();
  c.task = task == "heisenberg" ? TaskKind::kHeisenberg : TaskKind::kPauliFile;
  c.hamiltonian_path = hamiltonian;
  if (!ansatz.empty()) c.ansatz = ansatz == "layered" ? AnsatzKind::kLayered : AnsatzKind::kGivens;
  c.optimizer.kind = optimizer == "gd" ? OptimizerKind::kGradientDescent : OptimizerKind::kAdam;
  c.noise.kind = noise == "none"       ? NoiseKind::kNone
                 : noise == "constant" ? NoiseKind::kConstant
                                       : NoiseKind::kAdaptive;
  c.noise.norm_mode = norm == "spectral" ? NormMode::kSpectral : NormMode::kCoeffL1;
  c.gradient_method = gradient == "shift" ? GradientMethod::kParameterShift
                                          : GradientMethod::kAdjoint;
  c.output_dir = out_dir;
  if (gaussian_var) {
    if (!(*gaussian_var > 0.0)) return usage_error("--gaussian-var must be positive");
    c.gaussian = GaussianInitParams::explicit_variance(*gaussian_var);
  }
  c.rl.ddpg_actor_lr = ddpg_lr;
  c.rl.ddpg_critic_lr = ddpg_lr;
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  result.options = std::move(opts);
  return result;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliParseResult parsed = parse_cli(argc, argv);
  if (!parsed.options) {
    (parsed.exit_code == 0 ? out : err) << parsed.message;
    return parsed.exit_code;
  }
  const CliOptions& opts = *parsed.options;
  if (opts.dry_run) {
    out << format_config(opts);
    return 0;
  }
  try {
    ExperimentConfig config = opts.config;
    const Problem problem = build_problem(config);
    const int n = problem.hamiltonian.num_qubits();
    std::optional<double> f_star;
    if (config.report_fstar) {
      if (n > kMaxExactQubits) {
        err << "error: --fstar needs an exact ground energy, available up to "
            << kMaxExactQubits << " qubits; the Hamiltonian has " << n << '\n';
        return 2;
      }
      f_star = exact_ground_energy(problem.hamiltonian, n);
    }
    out << "qubits " << n << ", parameters " << problem.circuit.num_params << ", terms "
        << problem.hamiltonian.size() << '\n';
    if (f_star) out << "ground energy " << fmt17(*f_star) << '\n';

    std::vector<std::pair<std::string, ExperimentResult>> results;
    for (InitMethod m : opts.methods) {
      config.init_method = m;
      results.emplace_back(to_string(m), run_experiment(config, problem, f_star));
      const SummaryRecord& s = results.back().second.summary;
      char line[160];
      std::snprintf(line, sizeof line, "%-9s epoch0 %.6f  final %.6f +- %.6f\n",
                    to_string(m).c_str(), s.loss_mean.front(), s.final_loss_mean(),
                    s.final_loss_std());
      out << line;
    }

    const auto& dir = config.output_dir;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
    write_file(dir / "config.txt", format_config(opts));
    std::vector<std::pair<std::string, SummaryRecord>> summaries;
    for (const auto& [label, r] : results) {
      const auto sub = dir / label;
      std::filesystem::create_directories(sub, ec);
      if (ec) throw std::runtime_error("cannot create " + sub.string() + ": " + ec.message());
      write_trace_csv(r.traces, sub / "trace.csv");
      write_summary_csv(r.summary, sub / "summary.csv");
      summaries.emplace_back(label, r.summary);
    }
    emit_comparison_plot(summaries, PlotMetric::kLoss, dir / "loss.svg");
    emit_comparison_plot(summaries, PlotMetric::kGradNorm, dir / "grad_norm.svg");
    if (f_star) {
      emit_comparison_plot(summaries, PlotMetric::kLossMinusFstar, dir / "loss_minus_fstar.svg");
    }
    out << "wrote " << dir.string() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace rlinit
