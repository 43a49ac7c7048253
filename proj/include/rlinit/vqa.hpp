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
#include <span>
#include <string>
#include <vector>

#include "rlinit/circuit.hpp"
#include "rlinit/hamiltonians.hpp"
#include "rlinit/pauli.hpp"
#include "rlinit/rng.hpp"

namespace rlinit {

using ParameterVector = std::vector<double>;

/// <psi(theta)| h |psi(theta)> with psi(theta) = V(theta)|initial>.
double cost(const CircuitTemplate& circuit, const PauliSum& h, std::span<const double> theta);

/// Central-difference step used for Givens slots by `gradient`.
inline constexpr double kGivensFiniteDifferenceStep = 1e-4;

/// Gradient of `cost`. RX/RY slots use the two-term parameter-shift rule
/// [f(t + pi/2) - f(t - pi/2)] / 2; Givens slots use a central finite
/// difference with step kGivensFiniteDifferenceStep. Costs 2P circuit runs.
ParameterVector gradient(const CircuitTemplate& circuit, const PauliSum& h,
                         std::span<const double> theta);

struct CostAndGradient {
  double cost = 0.0;
  ParameterVector gradient;
};

/// Exact gradient by reverse-mode (adjoint) state propagation: one forward
/// pass, one application of h, then one backward sweep that undoes each gate
/// and reads d f / d t_k = 2 Im <lambda_k| G_k |phi_k>. Agrees with the
/// parameter-shift rule on RX/RY slots to rounding and is exact on Givens slots.
CostAndGradient adjoint_cost_and_gradient(const CircuitTemplate& circuit, const PauliSum& h,
                                          std::span<const double> theta);

enum class GradientMethod { kParameterShift, kAdjoint };

std::string to_string(GradientMethod method);

CostAndGradient cost_and_gradient(const CircuitTemplate& circuit, const PauliSum& h,
                                  std::span<const double> theta, GradientMethod method);

double l2_norm(std::span<const double> v);

// ---------------------------------------------------------------------------
// Gradient noise

enum class NoiseKind { kNone, kConstant, kAdaptive };

std::string to_string(NoiseKind kind);

/// Default adaptive prefactor 1 / (96 * 24 * 8^2) for the chemistry task.
inline constexpr double kDefaultAdaptivePrefactor = 1.0 / (96.0 * 24.0 * 64.0);

struct NoiseModel {
  NoiseKind kind = NoiseKind::kNone;
  double constant_variance = 0.001;
  double adaptive_prefactor = kDefaultAdaptivePrefactor;
  NormMode norm_mode = NormMode::kCoeffL1;
  /// ||H|| under norm_mode; filled in by the caller for kAdaptive.
  double hamiltonian_norm = 0.0;

  void validate() const;
};

/// kNone returns grad unchanged. kConstant adds N(0, constant_variance) to every
/// component. kAdaptive adds N(0, prefactor * ||H||^2 * g_j^2) to component j.
/// One normal is drawn per component for every kind except kNone.
ParameterVector inject_noise(std::span<const double> grad, const NoiseModel& model, Rng& rng);

// ---------------------------------------------------------------------------
// Optimizers

enum class OptimizerKind { kGradientDescent, kAdam };

std::string to_string(OptimizerKind kind);

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::kGradientDescent;
  double learning_rate = 0.01;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_epsilon = 1e-8;
};

struct OptimizerState {
  OptimizerConfig config;
  std::vector<double> first_moment;
  std::vector<double> second_moment;
  std::uint64_t step_count = 0;

  static OptimizerState create(const OptimizerConfig& config, std::size_t num_params);
};

struct OptimizerUpdate {
  OptimizerState state;
  ParameterVector theta;
};

/// GD: theta - lr * g. Adam: bias-corrected moment update.
OptimizerUpdate optimizer_step(OptimizerState state, ParameterVector theta,
                               std::span<const double> grad);

// ---------------------------------------------------------------------------
// Training

struct RunTrace {
  struct Row {
    int epoch = 0;
    double loss = 0.0;
    double grad_l2_norm = 0.0;

    bool operator==(const Row&) const = default;
  };
  std::vector<Row> rows;
  ParameterVector final_theta;
};

struct TrainingConfig {
  OptimizerConfig optimizer;
  NoiseModel noise;
  int epochs = 100;
  std::uint64_t seed = 0;
  GradientMethod gradient_method = GradientMethod::kAdjoint;
};

/// Row 0 holds the loss and clean gradient norm at theta0. Row e (1..epochs)
/// holds the loss after the e-th optimizer step and the norm of the (possibly
/// noisy) gradient that step consumed.
RunTrace run_training(const CircuitTemplate& circuit, const PauliSum& h,
                      ParameterVector theta0, const TrainingConfig& config);

}  // namespace rlinit
