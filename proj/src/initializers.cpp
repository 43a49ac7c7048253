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

#include "rlinit/initializers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rlinit/critic.hpp"
#include "rlinit/policy.hpp"

namespace rlinit {

Objective make_circuit_objective(const CircuitTemplate& circuit, const PauliSum& h,
                                 GradientMethod method) {
  Objective obj;
  obj.dimension = circuit.num_params;
  obj.cost = [&circuit, &h](std::span<const double> theta) { return cost(circuit, h, theta); };
  obj.cost_and_gradient = [&circuit, &h, method](std::span<const double> theta) {
    return cost_and_gradient(circuit, h, theta, method);
  };
  return obj;
}

std::vector<double> remap_to_0_2pi(std::span<const double> a) {
  std::vector<double> theta(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) theta[i] = std::numbers::pi * (a[i] + 1.0);
  return theta;
}

Objective remap_objective_to_0_2pi(Objective inner) {
  Objective obj;
  obj.dimension = inner.dimension;
  auto inner_cost = inner.cost;
  obj.cost = [inner_cost](std::span<const double> a) { return inner_cost(remap_to_0_2pi(a)); };
  if (inner.cost_and_gradient) {
    auto inner_cg = inner.cost_and_gradient;
    obj.cost_and_gradient = [inner_cg](std::span<const double> a) {
      CostAndGradient cg = inner_cg(remap_to_0_2pi(a));
      for (double& g : cg.gradient) g *= std::numbers::pi;
      return cg;
    };
  }
  return obj;
}

void RLHyperparams::validate() const {
  const auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(std::string(name) + " must be positive");
    }
  };
  if (episodes < 1) throw std::invalid_argument("episodes must be positive");
  positive(step_size_alpha, "step_size_alpha");
  positive(ddpg_actor_lr, "ddpg_actor_lr");
  positive(ddpg_critic_lr, "ddpg_critic_lr");
  positive(trpo_kl_delta, "trpo_kl_delta");
  positive(ppo_clip_epsilon, "ppo_clip_epsilon");
  if (ppo_clip_epsilon >= 1.0) throw std::invalid_argument("ppo_clip_epsilon must be < 1");
  positive(sac_entropy_alpha, "sac_entropy_alpha");
  positive(sac_actor_lr, "sac_actor_lr");
  positive(critic_lr, "critic_lr");
  positive(policy_sigma, "policy_sigma");
  if (batch_size < 1) throw std::invalid_argument("batch_size must be positive");
  positive(baseline_lr_beta, "baseline_lr_beta");
  if (ppo_inner_epochs < 1) throw std::invalid_argument("ppo_inner_epochs must be positive");
  if (critic_hidden < 1) throw std::invalid_argument("critic_hidden must be positive");
  if (critic_steps < 1) throw std::invalid_argument("critic_steps must be positive");
  if (ddpg_critic_steps < 1) throw std::invalid_argument("ddpg_critic_steps must be positive");
  positive(ddpg_exploration_std, "ddpg_exploration_std");
  if (trpo_backtrack_steps < 1) {
    throw std::invalid_argument("trpo_backtrack_steps must be positive");
  }
  positive(trpo_cg_tolerance, "trpo_cg_tolerance");
  if (!(initial_phi_std >= 0.0)) throw std::invalid_argument("initial_phi_std must be >= 0");
  for (double v : initial_phi) {
    if (!std::isfinite(v)) throw std::invalid_argument("initial_phi must be finite");
  }
}

// ---------------------------------------------------------------------------
// Baselines

GaussianInitParams GaussianInitParams::heisenberg(int max_pauli_weight, int k) {
  if (max_pauli_weight < 1 || k < 0) throw std::invalid_argument("invalid (S, K)");
  return {1.0 / (4.0 * max_pauli_weight * (k + 2.0)), GaussianDerivation::kHeisenbergSK};
}

GaussianInitParams GaussianInitParams::chemistry(int num_gates, int h, int a, double e) {
  if (num_gates < 1 || h < 1 || a < 1 || !(e > 0.0)) {
    throw std::invalid_argument("invalid (L, h, a, e)");
  }
  const double hd = h;
  const double ad = a;
  return {(hd * hd * hd * e) / (48.0 * ad * ad * num_gates), GaussianDerivation::kChemistryLHAE};
}

GaussianInitParams GaussianInitParams::explicit_variance(double variance) {
  if (!(variance > 0.0)) throw std::invalid_argument("Gaussian variance must be positive");
  return {variance, GaussianDerivation::kExplicit};
}

ParameterVector baseline_init(BaselineKind kind, std::size_t num_params,
                              const GaussianInitParams& gaussian, Rng& rng,
                              UniformRange uniform) {
  if (num_params < 1) throw std::invalid_argument("need at least one parameter");
  ParameterVector theta(num_params, 0.0);
  switch (kind) {
    case BaselineKind::kZero:
      break;
    case BaselineKind::kUniform:
      if (!(uniform.high > uniform.low)) throw std::invalid_argument("empty uniform range");
      for (double& t : theta) t = rng.uniform(uniform.low, uniform.high);
      break;
    case BaselineKind::kGaussian: {
      if (!(gaussian.variance_gamma2 > 0.0)) {
        throw std::invalid_argument("Gaussian variance must be positive");
      }
      const double sd = std::sqrt(gaussian.variance_gamma2);
      for (double& t : theta) t = sd * rng.normal();
      break;
    }
  }
  return theta;
}

// ---------------------------------------------------------------------------
// Shared pieces

namespace {

void check_objective(const Objective& objective) {
  if (objective.dimension < 1) throw std::invalid_argument("objective has no parameters");
  if (!objective.cost) throw std::invalid_argument("objective has no cost function");
}

// reward = -cost, rejecting non-finite costs.
double observe_reward(const Objective& objective, std::span<const double> a,
                      InitDiagnostics& diag) {
  const double c = objective.cost(a);
  if (!std::isfinite(c)) {
    throw std::runtime_error("cost function returned a non-finite value (" + std::to_string(c) +
                             ") after " + std::to_string(diag.sampled_costs.size()) +
                             " evaluations");
  }
  diag.sampled_costs.push_back(c);
  return -c;
}

std::vector<double> sample_action(std::span<const double> mu, double sigma, Rng& rng) {
  std::vector<double> a(mu.begin(), mu.end());
  for (double& x : a) x += sigma * rng.normal();
  return a;
}

InitResult finish(std::vector<double> phi, InitDiagnostics diag) {
  for (double p : phi) {
    if (!std::isfinite(p)) throw std::runtime_error("policy parameters diverged");
  }
  InitResult result;
  result.theta = tanh_mean(phi);
  result.phi = std::move(phi);
  result.diagnostics = std::move(diag);
  return result;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::vector<double> initial_policy_parameters(std::size_t dimension, const RLHyperparams& hp,
                                              Rng& rng) {
  if (!hp.initial_phi.empty()) {
    if (hp.initial_phi.size() != dimension) {
      throw std::invalid_argument("initial_phi has length " +
                                  std::to_string(hp.initial_phi.size()) + ", expected " +
                                  std::to_string(dimension));
    }
    return hp.initial_phi;
  }
  std::vector<double> phi(dimension);
  for (double& p : phi) p = hp.initial_phi_std * rng.normal();
  return phi;
}

// ---------------------------------------------------------------------------
// DPG

InitResult dpg_init(const Objective& objective, const RLHyperparams& hp, Rng& rng) {
  check_objective(objective);
  hp.validate();
  if (!objective.cost_and_gradient) {
    throw std::invalid_argument("DPG needs the cost gradient");
  }
  std::vector<double> phi = initial_policy_parameters(objective.dimension, hp, rng);
  InitDiagnostics diag;
  for (int episode = 0; episode < hp.episodes; ++episode) {
    const std::vector<double> a = tanh_mean(phi);
    const CostAndGradient cg = objective.cost_and_gradient(a);
    if (!std::isfinite(cg.cost)) {
      throw std::runtime_error("cost function returned a non-finite value at episode " +
                               std::to_string(episode));
    }
    diag.sampled_costs.push_back(cg.cost);
    for (std::size_t j = 0; j < phi.size(); ++j) {
      const double reward_grad = -cg.gradient[j] * (1.0 - a[j] * a[j]);
      phi[j] += hp.step_size_alpha * reward_grad;
    }
  }
  return finish(std::move(phi), std::move(diag));
}

// ---------------------------------------------------------------------------
// DDPG

InitResult ddpg_init(const Objective& objective, const RLHyperparams& hp, Rng& rng) {
  check_objective(objective);
  hp.validate();
  std::vector<double> phi = initial_policy_parameters(objective.dimension, hp, rng);
  CriticNet critic = CriticNet::random(objective.dimension, hp.critic_hidden, rng);
  TransitionBatch transitions;
  const std::size_t batch = static_cast<std::size_t>(hp.batch_size);
  InitDiagnostics diag;
  for (int episode = 0; episode < hp.episodes; ++episode) {
    const std::vector<double> mu = tanh_mean(phi);
    transitions.clear();
    for (std::size_t t = 0; t < batch; ++t) {
      const std::vector<double> a = sample_action(mu, hp.ddpg_exploration_std, rng);
      transitions.add(a, observe_reward(objective, a, diag));
    }
    fit_batch(critic, transitions, hp.ddpg_critic_lr, hp.ddpg_critic_steps);

    const CriticGradient dq = mlp_backward(critic, mu, 1.0);
    for (std::size_t j = 0; j < phi.size(); ++j) {
      phi[j] += hp.ddpg_actor_lr * dq.input[j] * (1.0 - mu[j] * mu[j]);
    }
  }
  return finish(std::move(phi), std::move(diag));
}

// ---------------------------------------------------------------------------
// PPO

double ppo_clipped_objective(std::span<const double> ratios, std::span<const double> advantages,
                             double clip_epsilon) {
  if (ratios.size() != advantages.size() || ratios.empty()) {
    throw std::invalid_argument("ratios and advantages must be non-empty and equal length");
  }
  double total = 0.0;
  for (std::size_t t = 0; t < ratios.size(); ++t) {
    const double clipped = std::clamp(ratios[t], 1.0 - clip_epsilon, 1.0 + clip_epsilon);
    total += std::min(ratios[t] * advantages[t], clipped * advantages[t]);
  }
  return total / static_cast<double>(ratios.size());
}

double update_scalar_baseline(double baseline, std::span<const double> rewards, double beta) {
  if (rewards.empty()) return baseline;
  double mean_residual = 0.0;
  for (double r : rewards) mean_residual += r - baseline;
  mean_residual /= static_cast<double>(rewards.size());
  // d/dv mean (r - v)^2 = -2 mean (r - v).
  return baseline + 2.0 * beta * mean_residual;
}

InitResult ppo_init(const Objective& objective, const RLHyperparams& hp, Rng& rng) {
  check_objective(objective);
  hp.validate();
  const std::size_t dim = objective.dimension;
  const std::size_t batch = static_cast<std::size_t>(hp.batch_size);
  const double sigma = hp.policy_sigma;
  std::vector<double> phi = initial_policy_parameters(dim, hp, rng);
  double baseline = 0.0;
  InitDiagnostics diag;

  std::vector<std::vector<double>> actions(batch);
  std::vector<double> rewards(batch);
  std::vector<double> advantages(batch);
  std::vector<double> old_log_prob(batch);
  for (int episode = 0; episode < hp.episodes; ++episode) {
    const std::vector<double> mu_old = tanh_mean(phi);
    for (std::size_t t = 0; t < batch; ++t) {
      actions[t] = sample_action(mu_old, sigma, rng);
      rewards[t] = observe_reward(objective, actions[t], diag);
      old_log_prob[t] = gaussian_log_prob(actions[t], phi, sigma);
    }
    if (episode == 0) {
      baseline = 0.0;
      for (double r : rewards) baseline += r;
      baseline /= static_cast<double>(batch);
    }
    for (std::size_t t = 0; t < batch; ++t) advantages[t] = rewards[t] - baseline;
    baseline = update_scalar_baseline(baseline, rewards, hp.baseline_lr_beta);

    for (int inner = 0; inner < hp.ppo_inner_epochs; ++inner) {
      std::vector<double> grad(dim, 0.0);
      for (std::size_t t = 0; t < batch; ++t) {
        const double ratio = std::exp(gaussian_log_prob(actions[t], phi, sigma) - old_log_prob[t]);
        const double adv = advantages[t];
        // The min() selects the unclipped branch unless the ratio has moved
        // past the clip boundary in the direction the advantage rewards.
        const bool active = adv >= 0.0 ? ratio <= 1.0 + hp.ppo_clip_epsilon
                                       : ratio >= 1.0 - hp.ppo_clip_epsilon;
        if (!active) continue;
        const auto score = gaussian_score(actions[t], phi, sigma);
        for (std::size_t j = 0; j < dim; ++j) grad[j] += adv * ratio * score[j];
      }
      for (std::size_t j = 0; j < dim; ++j) {
        phi[j] += hp.step_size_alpha * grad[j] / static_cast<double>(batch);
      }
    }
  }
  return finish(std::move(phi), std::move(diag));
}

// ---------------------------------------------------------------------------
// SAC

std::vector<double> sac_actor_loss_gradient(std::span<const double> dq_da,
                                            std::span<const double> a,
                                            std::span<const double> phi, double sigma,
                                            double entropy_alpha) {
  // grad_phi(-alpha log pi(a)) = -alpha * score; the critic term follows
  // da/dmu = I and dmu/dphi = 1 - mu^2.
  const auto score = gaussian_score(a, phi, sigma);
  std::vector<double> g(phi.size());
  for (std::size_t j = 0; j < phi.size(); ++j) {
    const double mu = std::tanh(phi[j]);
    g[j] = -(dq_da[j] * (1.0 - mu * mu) - entropy_alpha * score[j]);
  }
  return g;
}

InitResult sac_init(const Objective& objective, const RLHyperparams& hp, Rng& rng) {
  check_objective(objective);
  hp.validate();
  std::vector<double> phi = initial_policy_parameters(objective.dimension, hp, rng);
  CriticNet critic = CriticNet::random(objective.dimension, hp.critic_hidden, rng);
  TransitionBatch transitions;
  const std::size_t batch = static_cast<std::size_t>(hp.batch_size);
  InitDiagnostics diag;
  for (int episode = 0; episode < hp.episodes; ++episode) {
    const std::vector<double> mu = tanh_mean(phi);
    transitions.clear();
    for (std::size_t t = 0; t < batch; ++t) {
      const std::vector<double> a = sample_action(mu, hp.policy_sigma, rng);
      transitions.add(a, observe_reward(objective, a, diag));
    }
    fit_batch(critic, transitions, hp.critic_lr, hp.critic_steps);

    std::vector<double> grad(phi.size(), 0.0);
    for (const auto& a : transitions.actions) {
      const CriticGradient dq = mlp_backward(critic, a, 1.0);
      const auto g =
          sac_actor_loss_gradient(dq.input, a, phi, hp.policy_sigma, hp.sac_entropy_alpha);
      for (std::size_t j = 0; j < phi.size(); ++j) grad[j] += g[j];
    }
    for (std::size_t j = 0; j < phi.size(); ++j) {
      phi[j] -= hp.sac_actor_lr * grad[j] / static_cast<double>(batch);
    }
  }
  return finish(std::move(phi), std::move(diag));
}

// ---------------------------------------------------------------------------
// A2C

std::vector<double> a2c_actor_gradient(const std::vector<std::vector<double>>& actions,
                                       std::span<const double> rewards,
                                       std::span<const double> values,
                                       std::span<const double> phi, double sigma) {
  if (actions.empty() || actions.size() != rewards.size() || rewards.size() != values.size()) {
    throw std::invalid_argument("actions, rewards and values must be non-empty and equal length");
  }
  std::vector<double> grad(phi.size(), 0.0);
  for (std::size_t t = 0; t < actions.size(); ++t) {
    const double advantage = rewards[t] - values[t];
    const auto score = gaussian_score(actions[t], phi, sigma);
    for (std::size_t j = 0; j < phi.size(); ++j) grad[j] += advantage * score[j];
  }
  for (double& g : grad) g /= static_cast<double>(actions.size());
  return grad;
}

InitResult a2c_init(const Objective& objective, const RLHyperparams& hp, Rng& rng) {
  check_objective(objective);
  hp.validate();
  std::vector<double> phi = initial_policy_parameters(objective.dimension, hp, rng);
  CriticNet critic = CriticNet::random(objective.dimension, hp.critic_hidden, rng);
  TransitionBatch transitions;
  const std::size_t batch = static_cast<std::size_t>(hp.batch_size);
  std::vector<double> values(batch);
  InitDiagnostics diag;
  for (int episode = 0; episode < hp.episodes; ++episode) {
    const std::vector<double> mu = tanh_mean(phi);
    transitions.clear();
    for (std::size_t t = 0; t < batch; ++t) {
      const std::vector<double> a = sample_action(mu, hp.policy_sigma, rng);
      transitions.add(a, observe_reward(objective, a, diag));
      values[t] = mlp_forward(critic, a);
    }
    const auto grad =
        a2c_actor_gradient(transitions.actions, transitions.targets, values, phi, hp.policy_sigma);
    fit_batch(critic, transitions, hp.critic_lr, hp.critic_steps);
    for (std::size_t j = 0; j < phi.size(); ++j) phi[j] += hp.step_size_alpha * grad[j];
  }
  return finish(std::move(phi), std::move(diag));
}

// ---------------------------------------------------------------------------
// TRPO

ConjugateGradientResult conjugate_gradient(
    const std::function<std::vector<double>(std::span<const double>)>& matvec,
    std::span<const double> b, int max_iterations, double tolerance) {
  ConjugateGradientResult result;
  result.x.assign(b.size(), 0.0);
  std::vector<double> r(b.begin(), b.end());
  std::vector<double> p = r;
  double rr = dot(r, r);
  const double threshold = tolerance * std::max(rr, 1e-300);
  if (rr == 0.0) {
    result.converged = true;
    return result;
  }
  for (int it = 0; it < max_iterations; ++it) {
    const std::vector<double> ap = matvec(p);
    const double pap = dot(p, ap);
    if (!(pap > 0.0)) break;
    const double step = rr / pap;
    for (std::size_t i = 0; i < r.size(); ++i) {
      result.x[i] += step * p[i];
      r[i] -= step * ap[i];
    }
    const double rr_next = dot(r, r);
    result.iterations = it + 1;
    if (rr_next <= threshold) {
      result.converged = true;
      break;
    }
    const double beta = rr_next / rr;
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = r[i] + beta * p[i];
    rr = rr_next;
  }
  return result;
}

InitResult trpo_init(const Objective& objective, const RLHyperparams& hp, Rng& rng) {
  check_objective(objective);
  hp.validate();
  const std::size_t dim = objective.dimension;
  const std::size_t batch = static_cast<std::size_t>(hp.batch_size);
  const double sigma = hp.policy_sigma;
  const double delta = hp.trpo_kl_delta;
  std::vector<double> phi = initial_policy_parameters(dim, hp, rng);
  InitDiagnostics diag;

  std::vector<std::vector<double>> actions(batch);
  std::vector<double> rewards(batch);
  std::vector<double> advantages(batch);
  std::vector<double> old_log_prob(batch);
  for (int episode = 0; episode < hp.episodes; ++episode) {
    const std::vector<double> phi_old = phi;
    const std::vector<double> mu_old = tanh_mean(phi_old);
    double mean_reward = 0.0;
    for (std::size_t t = 0; t < batch; ++t) {
      actions[t] = sample_action(mu_old, sigma, rng);
      rewards[t] = observe_reward(objective, actions[t], diag);
      old_log_prob[t] = gaussian_log_prob(actions[t], phi_old, sigma);
      mean_reward += rewards[t];
    }
    mean_reward /= static_cast<double>(batch);
    for (std::size_t t = 0; t < batch; ++t) advantages[t] = rewards[t] - mean_reward;

    // Surrogate gradient at phi_old, where every ratio equals one.
    std::vector<double> g(dim, 0.0);
    for (std::size_t t = 0; t < batch; ++t) {
      const auto score = gaussian_score(actions[t], phi_old, sigma);
      for (std::size_t j = 0; j < dim; ++j) g[j] += advantages[t] * score[j];
    }
    for (double& x : g) x /= static_cast<double>(batch);
    if (dot(g, g) == 0.0) {
      ++diag.rejected_updates;
      continue;
    }

    const auto fvp = [&phi_old, sigma](std::span<const double> v) {
      return fisher_vector_product(phi_old, sigma, v);
    };
    ConjugateGradientResult cg =
        conjugate_gradient(fvp, g, static_cast<int>(dim), hp.trpo_cg_tolerance);
    std::vector<double> direction = std::move(cg.x);
    double curvature = direction.empty() ? 0.0 : dot(direction, fvp(direction));
    if (!cg.converged || !(curvature > 0.0) || !(dot(direction, g) > 0.0)) {
      ++diag.cg_fallbacks;
      direction = g;
      curvature = dot(g, fvp(g));
      if (!(curvature > 0.0)) {
        ++diag.rejected_updates;
        continue;
      }
    }
    const double scale = std::sqrt(2.0 * delta / curvature);

    const double surrogate_old = 0.0;  // mean advantage with unit ratios
    bool accepted = false;
    std::vector<double> candidate(dim);
    for (int k = 0; k < hp.trpo_backtrack_steps && !accepted; ++k) {
      const double fraction = scale * std::ldexp(1.0, -k);
      for (std::size_t j = 0; j < dim; ++j) candidate[j] = phi_old[j] + fraction * direction[j];
      const double kl = gaussian_kl(phi_old, candidate, sigma);
      double surrogate = 0.0;
      for (std::size_t t = 0; t < batch; ++t) {
        const double ratio =
            std::exp(gaussian_log_prob(actions[t], candidate, sigma) - old_log_prob[t]);
        surrogate += ratio * advantages[t];
      }
      surrogate /= static_cast<double>(batch);
      if (kl <= delta && surrogate > surrogate_old) {
        phi = candidate;
        diag.accepted_kl.push_back(kl);
        accepted = true;
      }
    }
    if (!accepted) ++diag.rejected_updates;
  }
  return finish(std::move(phi), std::move(diag));
}

// ---------------------------------------------------------------------------
// Dispatch

namespace {
struct MethodName {
  InitMethod method;
  const char* name;
};
constexpr MethodName kMethodNames[] = {
    {InitMethod::kZero, "zero"}, {InitMethod::kUniform, "uniform"},
    {InitMethod::kGaussian, "gaussian"}, {InitMethod::kDpg, "dpg"},
    {InitMethod::kDdpg, "ddpg"}, {InitMethod::kPpo, "ppo"},
    {InitMethod::kSac, "sac"}, {InitMethod::kA2c, "a2c"},
    {InitMethod::kTrpo, "trpo"},
};
}  // namespace

std::string to_string(InitMethod method) {
  for (const auto& m : kMethodNames) {
    if (m.method == method) return m.name;
  }
  return "?";
}

std::optional<InitMethod> parse_init_method(std::string_view name) {
  if (name == "a3c") return InitMethod::kA2c;
  for (const auto& m : kMethodNames) {
    if (name == m.name) return m.method;
  }
  return std::nullopt;
}

std::vector<std::string> init_method_names() {
  std::vector<std::string> names;
  for (const auto& m : kMethodNames) names.emplace_back(m.name);
  return names;
}

bool is_rl_method(InitMethod method) {
  return method != InitMethod::kZero && method != InitMethod::kUniform &&
         method != InitMethod::kGaussian;
}

InitResult initialize(InitMethod method, const Objective& objective,
                      const InitializerSettings& settings, Rng& rng) {
  check_objective(objective);
  const std::size_t dim = objective.dimension;
  InitResult result;
  switch (method) {
    case InitMethod::kZero:
      result.theta = baseline_init(BaselineKind::kZero, dim, settings.gaussian, rng);
      return result;
    case InitMethod::kUniform:
      result.theta = baseline_init(BaselineKind::kUniform, dim, settings.gaussian, rng,
                                   settings.uniform);
      return result;
    case InitMethod::kGaussian:
      result.theta = baseline_init(BaselineKind::kGaussian, dim, settings.gaussian, rng);
      return result;
    default:
      break;
  }

  const Objective seen =
      settings.remap_to_0_2pi ? remap_objective_to_0_2pi(objective) : objective;
  switch (method) {
    case InitMethod::kDpg:
      result = dpg_init(seen, settings.rl, rng);
      break;
    case InitMethod::kDdpg:
      result = ddpg_init(seen, settings.rl, rng);
      break;
    case InitMethod::kPpo:
      result = ppo_init(seen, settings.rl, rng);
      break;
    case InitMethod::kSac:
      result = sac_init(seen, settings.rl, rng);
      break;
    case InitMethod::kA2c:
      result = a2c_init(seen, settings.rl, rng);
      break;
    case InitMethod::kTrpo:
      result = trpo_init(seen, settings.rl, rng);
      break;
    default:
      throw std::logic_error("unhandled initializer");
  }
  if (settings.remap_to_0_2pi) result.theta = remap_to_0_2pi(result.theta);
  return result;
}

}  // namespace rlinit
