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

#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rlinit/rng.hpp"
#include "rlinit/vqa.hpp"

namespace rlinit {

/// Black-box cost over a parameter vector of fixed length. `cost_and_gradient`
/// is only required by initializers that differentiate the cost (DPG).
struct Objective {
  std::size_t dimension = 0;
  std::function<double(std::span<const double>)> cost;
  std::function<CostAndGradient(std::span<const double>)> cost_and_gradient;
};

/// Objective for a circuit and observable, with gradients from `method`.
Objective make_circuit_objective(const CircuitTemplate& circuit, const PauliSum& h,
                                 GradientMethod method = GradientMethod::kAdjoint);

/// Objective seen by an initializer whose actions a in (-1, 1) are mapped to
/// angles pi * (a + 1) in (0, 2 pi).
Objective remap_objective_to_0_2pi(Objective inner);

std::vector<double> remap_to_0_2pi(std::span<const double> a);

// ---------------------------------------------------------------------------
// Hyperparameters

struct RLHyperparams {
  int episodes = 50;
  /// Actor step size for DPG, PPO, and A2C.
  double step_size_alpha = 0.05;
  double ddpg_actor_lr = 0.02;
  double ddpg_critic_lr = 0.02;
  double trpo_kl_delta = 0.01;
  double ppo_clip_epsilon = 0.20;
  double sac_entropy_alpha = 0.01;
  /// Actor and critic rates for SAC, and the A2C critic rate.
  double sac_actor_lr = 0.1;
  double critic_lr = 0.1;
  /// Fixed standard deviation of the Gaussian policies (PPO, SAC, A2C, TRPO).
  double policy_sigma = 0.1;
  /// Actions sampled per episode by every stochastic method.
  int batch_size = 16;
  double baseline_lr_beta = 0.1;
  int ppo_inner_epochs = 4;
  int critic_hidden = 32;
  /// Full-batch critic steps on each episode's actions (SAC, A2C).
  int critic_steps = 20;
  int ddpg_critic_steps = 300;
  double ddpg_exploration_std = 0.1;
  int trpo_backtrack_steps = 10;
  double trpo_cg_tolerance = 1e-10;
  /// Standard deviation of the random starting policy parameters.
  double initial_phi_std = 0.1;
  /// When non-empty, used verbatim as the starting policy parameters.
  std::vector<double> initial_phi;

  void validate() const;
};

// ---------------------------------------------------------------------------
// Baselines

enum class GaussianDerivation { kHeisenbergSK, kChemistryLHAE, kExplicit };

struct GaussianInitParams {
  double variance_gamma2 = 1.0 / 160.0;
  GaussianDerivation derivation = GaussianDerivation::kHeisenbergSK;

  /// gamma^2 = 1 / (4 S (K + 2)); (S, K) = (2, 18) gives 1/160.
  static GaussianInitParams heisenberg(int max_pauli_weight = 2, int k = 18);

  /// gamma^2 = h^3 e / (48 a^2 L); (L, h, a, e) = (24, 8, 8, 1/2) gives 1/288.
  static GaussianInitParams chemistry(int num_gates = 24, int h = 8, int a = 8,
                                      double e = 0.5);

  static GaussianInitParams explicit_variance(double variance);
};

struct UniformRange {
  double low = 0.0;
  double high = 2.0 * std::numbers::pi;
};

enum class BaselineKind { kZero, kUniform, kGaussian };

ParameterVector baseline_init(BaselineKind kind, std::size_t num_params,
                              const GaussianInitParams& gaussian, Rng& rng,
                              UniformRange uniform = {});

// ---------------------------------------------------------------------------
// Reinforcement-learning initializers

struct InitDiagnostics {
  /// Cost of every action the method evaluated, in evaluation order.
  std::vector<double> sampled_costs;
  /// TRPO: KL between consecutive policies for each accepted update.
  std::vector<double> accepted_kl;
  int rejected_updates = 0;
  int cg_fallbacks = 0;
};

struct InitResult {
  ParameterVector theta;
  std::vector<double> phi;
  InitDiagnostics diagnostics;
};

/// Starting policy parameters: hp.initial_phi if set, else N(0, initial_phi_std^2).
std::vector<double> initial_policy_parameters(std::size_t dimension, const RLHyperparams& hp,
                                              Rng& rng);

/// Deterministic policy a = tanh(phi); gradient ascent on R = -cost(tanh(phi))
/// with grad_phi R = -(d cost / d a) * (1 - a^2).
InitResult dpg_init(const Objective& objective, const RLHyperparams& hp, Rng& rng);

/// Deterministic actor with exploration noise and a tanh-MLP critic regressed
/// onto each episode's observed rewards; the actor ascends Q(tanh(phi)).
InitResult ddpg_init(const Objective& objective, const RLHyperparams& hp, Rng& rng);

/// Clipped-ratio policy optimization with a scalar learned baseline.
InitResult ppo_init(const Objective& objective, const RLHyperparams& hp, Rng& rng);

/// Gaussian actor with entropy bonus and a tanh-MLP Q critic.
InitResult sac_init(const Objective& objective, const RLHyperparams& hp, Rng& rng);

/// Advantage actor-critic with a tanh-MLP value critic V(a); the advantage of
/// each sampled action uses the critic from before this episode's fit.
InitResult a2c_init(const Objective& objective, const RLHyperparams& hp, Rng& rng);

/// Natural-gradient step (conjugate gradient on Fisher-vector products),
/// scaled to the KL radius, then backtracking until the exact KL is within
/// the trust region and the surrogate improves.
InitResult trpo_init(const Objective& objective, const RLHyperparams& hp, Rng& rng);

// Building blocks exposed for testing.

/// mean_t min(r_t A_t, clip(r_t, 1 - eps, 1 + eps) A_t).
double ppo_clipped_objective(std::span<const double> ratios, std::span<const double> advantages,
                             double clip_epsilon);

/// One baseline update v <- v - beta * d/dv mean_t (r_t - v)^2.
double update_scalar_baseline(double baseline, std::span<const double> rewards, double beta);

/// Gradient of the SAC actor loss -(Q(a) + alpha * (-log pi_phi(a))) with
/// respect to phi, for a sampled action a held fixed in the entropy term and
/// differentiated through a = tanh(phi) + sigma * eps in the critic term.
std::vector<double> sac_actor_loss_gradient(std::span<const double> dq_da,
                                            std::span<const double> a,
                                            std::span<const double> phi, double sigma,
                                            double entropy_alpha);

/// mean_t (r_t - V(a_t)) * grad_phi log pi(a_t).
std::vector<double> a2c_actor_gradient(const std::vector<std::vector<double>>& actions,
                                       std::span<const double> rewards,
                                       std::span<const double> values,
                                       std::span<const double> phi, double sigma);

struct ConjugateGradientResult {
  std::vector<double> x;
  int iterations = 0;
  bool converged = false;
};

/// Solves A x = b for symmetric positive-definite A given as a matvec.
ConjugateGradientResult conjugate_gradient(
    const std::function<std::vector<double>(std::span<const double>)>& matvec,
    std::span<const double> b, int max_iterations, double tolerance);

// ---------------------------------------------------------------------------
// Dispatch

enum class InitMethod { kZero, kUniform, kGaussian, kDpg, kDdpg, kPpo, kSac, kA2c, kTrpo };

std::string to_string(InitMethod method);
std::optional<InitMethod> parse_init_method(std::string_view name);
std::vector<std::string> init_method_names();
bool is_rl_method(InitMethod method);

struct InitializerSettings {
  RLHyperparams rl;
  GaussianInitParams gaussian;
  UniformRange uniform;
  /// Map RL actions from (-1, 1) to (0, 2 pi) before handing them to the circuit.
  bool remap_to_0_2pi = false;
};

/// Produces theta0 for `method`. RL methods see `objective` (remapped when
/// requested); baselines only use its dimension.
InitResult initialize(InitMethod method, const Objective& objective,
                      const InitializerSettings& settings, Rng& rng);

}  // namespace rlinit
