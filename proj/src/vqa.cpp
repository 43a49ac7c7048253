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

#include "rlinit/vqa.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rlinit {

namespace {

void check_length(const CircuitTemplate& circuit, std::span<const double> theta) {
  if (theta.size() != circuit.num_params) {
    throw std::invalid_argument("parameter vector has length " + std::to_string(theta.size()) +
                                ", circuit expects " + std::to_string(circuit.num_params));
  }
}

}  // namespace

double cost(const CircuitTemplate& circuit, const PauliSum& h, std::span<const double> theta) {
  check_length(circuit, theta);
  return pauli_expectation(run_circuit(circuit, theta, circuit.initial_state()), h);
}

ParameterVector gradient(const CircuitTemplate& circuit, const PauliSum& h,
                         std::span<const double> theta) {
  check_length(circuit, theta);
  const auto owners = slot_owners(circuit);
  ParameterVector shifted(theta.begin(), theta.end());
  ParameterVector grad(theta.size(), 0.0);
  for (std::size_t j = 0; j < theta.size(); ++j) {
    const GateKind kind = circuit.gates[owners[j]].kind;
    const bool two_term = kind == GateKind::kRX || kind == GateKind::kRY;
    const double step = two_term ? std::numbers::pi / 2.0 : kGivensFiniteDifferenceStep;
    shifted[j] = theta[j] + step;
    const double plus = cost(circuit, h, shifted);
    shifted[j] = theta[j] - step;
    const double minus = cost(circuit, h, shifted);
    shifted[j] = theta[j];
    grad[j] = two_term ? (plus - minus) / 2.0 : (plus - minus) / (2.0 * step);
  }
  return grad;
}

CostAndGradient adjoint_cost_and_gradient(const CircuitTemplate& circuit, const PauliSum& h,
                                          std::span<const double> theta) {
  check_length(circuit, theta);
  Statevector phi = run_circuit(circuit, theta, circuit.initial_state());
  Statevector lambda = apply_pauli_sum(phi, h);
  CostAndGradient out;
  out.cost = inner_product(phi, lambda).real();
  out.gradient.assign(theta.size(), 0.0);

  Statevector scratch;
  for (std::size_t k = circuit.gates.size(); k-- > 0;) {
    const GateDescriptor& gate = circuit.gates[k];
    if (!gate.param_slot) {
      apply_gate_inplace(phi, gate, std::nullopt);
      apply_gate_inplace(lambda, gate, std::nullopt);
      continue;
    }
    scratch = phi;
    apply_generator_inplace(scratch, gate);
    out.gradient[*gate.param_slot] = 2.0 * inner_product(lambda, scratch).imag();
    // Every parameterized gate here satisfies U(t)^dagger = U(-t).
    const double angle = -theta[*gate.param_slot];
    apply_gate_inplace(phi, gate, angle);
    apply_gate_inplace(lambda, gate, angle);
  }
  return out;
}

std::string to_string(GradientMethod method) {
  return method == GradientMethod::kAdjoint ? "adjoint" : "shift";
}

CostAndGradient cost_and_gradient(const CircuitTemplate& circuit, const PauliSum& h,
                                  std::span<const double> theta, GradientMethod method) {
  if (method == GradientMethod::kAdjoint) return adjoint_cost_and_gradient(circuit, h, theta);
  return {cost(circuit, h, theta), gradient(circuit, h, theta)};
}

double l2_norm(std::span<const double> v) {
  double total = 0.0;
  for (double x : v) total += x * x;
  return std::sqrt(total);
}

std::string to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::kNone:
      return "none";
    case NoiseKind::kConstant:
      return "constant";
    case NoiseKind::kAdaptive:
      return "adaptive";
  }
  return "?";
}

void NoiseModel::validate() const {
  if (!(constant_variance >= 0.0) || !(adaptive_prefactor >= 0.0) ||
      !(hamiltonian_norm >= 0.0)) {
    throw std::invalid_argument("noise variances and norms must be non-negative");
  }
}

ParameterVector inject_noise(std::span<const double> grad, const NoiseModel& model, Rng& rng) {
  model.validate();
  ParameterVector out(grad.begin(), grad.end());
  switch (model.kind) {
    case NoiseKind::kNone:
      break;
    case NoiseKind::kConstant: {
      const double sd = std::sqrt(model.constant_variance);
      for (double& g : out) g += sd * rng.normal();
      break;
    }
    case NoiseKind::kAdaptive: {
      const double scale = std::sqrt(model.adaptive_prefactor) * model.hamiltonian_norm;
      for (double& g : out) g += scale * std::abs(g) * rng.normal();
      break;
    }
  }
  return out;
}

std::string to_string(OptimizerKind kind) {
  return kind == OptimizerKind::kAdam ? "adam" : "gd";
}

OptimizerState OptimizerState::create(const OptimizerConfig& config, std::size_t num_params) {
  OptimizerState state;
  state.config = config;
  state.first_moment.assign(num_params, 0.0);
  state.second_moment.assign(num_params, 0.0);
  return state;
}

OptimizerUpdate optimizer_step(OptimizerState state, ParameterVector theta,
                               std::span<const double> grad) {
  if (theta.size() != grad.size()) {
    throw std::invalid_argument("gradient length does not match parameters");
  }
  const OptimizerConfig& c = state.config;
  if (c.kind == OptimizerKind::kGradientDescent) {
    for (std::size_t j = 0; j < theta.size(); ++j) theta[j] -= c.learning_rate * grad[j];
    ++state.step_count;
    return {std::move(state), std::move(theta)};
  }

  if (state.first_moment.size() != theta.size() || state.second_moment.size() != theta.size()) {
    throw std::invalid_argument("Adam moments do not match parameter count");
  }
  ++state.step_count;
  const double t = static_cast<double>(state.step_count);
  const double bias1 = 1.0 - std::pow(c.adam_beta1, t);
  const double bias2 = 1.0 - std::pow(c.adam_beta2, t);
  for (std::size_t j = 0; j < theta.size(); ++j) {
    double& m = state.first_moment[j];
    double& v = state.second_moment[j];
    m = c.adam_beta1 * m + (1.0 - c.adam_beta1) * grad[j];
    v = c.adam_beta2 * v + (1.0 - c.adam_beta2) * grad[j] * grad[j];
    const double m_hat = m / bias1;
    const double v_hat = v / bias2;
    theta[j] -= c.learning_rate * m_hat / (std::sqrt(v_hat) + c.adam_epsilon);
  }
  return {std::move(state), std::move(theta)};
}

RunTrace run_training(const CircuitTemplate& circuit, const PauliSum& h,
                      ParameterVector theta0, const TrainingConfig& config) {
  if (config.epochs < 1) throw std::invalid_argument("training needs at least one epoch");
  config.noise.validate();
  for (double v : theta0) {
    if (!std::isfinite(v)) throw std::invalid_argument("initial parameters must be finite");
  }

  Rng rng(config.seed);
  OptimizerState state = OptimizerState::create(config.optimizer, theta0.size());
  ParameterVector theta = std::move(theta0);
  RunTrace trace;
  trace.rows.reserve(static_cast<std::size_t>(config.epochs) + 1);

  CostAndGradient current = cost_and_gradient(circuit, h, theta, config.gradient_method);
  trace.rows.push_back({0, current.cost, l2_norm(current.gradient)});
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    const ParameterVector used = inject_noise(current.gradient, config.noise, rng);
    auto update = optimizer_step(std::move(state), std::move(theta), used);
    state = std::move(update.state);
    theta = std::move(update.theta);
    if (epoch < config.epochs) {
      current = cost_and_gradient(circuit, h, theta, config.gradient_method);
    } else {
      current.cost = cost(circuit, h, theta);
    }
    trace.rows.push_back({epoch, current.cost, l2_norm(used)});
  }
  trace.final_theta = std::move(theta);
  return trace;
}

}  // namespace rlinit
