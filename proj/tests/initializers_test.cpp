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
#include <limits>
#include <numbers>

#include <gtest/gtest.h>

#include "rlinit/ansatz.hpp"
#include "rlinit/hamiltonians.hpp"
#include "rlinit/initializers.hpp"
#include "rlinit/policy.hpp"

namespace rlinit {
namespace {

using InitFn = InitResult (*)(const Objective&, const RLHyperparams&, Rng&);

struct NamedInit {
  const char* name;
  InitFn fn;
};

void PrintTo(const NamedInit& m, std::ostream* os) { *os << m.name; }

constexpr NamedInit kRlMethods[] = {
    {"dpg", dpg_init}, {"ddpg", ddpg_init}, {"ppo", ppo_init},
    {"sac", sac_init}, {"a2c", a2c_init},   {"trpo", trpo_init},
};

Objective quadratic_probe(std::vector<double> c) {
  Objective obj;
  obj.dimension = c.size();
  obj.cost = [c](std::span<const double> a) {
    double s = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) s += (a[i] - c[i]) * (a[i] - c[i]);
    return s;
  };
  obj.cost_and_gradient = [c](std::span<const double> a) {
    CostAndGradient r;
    r.gradient.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      r.cost += (a[i] - c[i]) * (a[i] - c[i]);
      r.gradient[i] = 2.0 * (a[i] - c[i]);
    }
    return r;
  };
  return obj;
}

class RlMethodTest : public ::testing::TestWithParam<NamedInit> {};

TEST_P(RlMethodTest, ActionsStayInsideOpenInterval) {
  const auto obj = quadratic_probe({0.9, -0.9, 0.5});
  Rng rng(1);
  const auto res = GetParam().fn(obj, RLHyperparams{}, rng);
  ASSERT_EQ(res.theta.size(), 3u);
  for (double t : res.theta) {
    EXPECT_GT(t, -1.0);
    EXPECT_LT(t, 1.0);
  }
}

TEST_P(RlMethodTest, SameSeedSameResult) {
  const auto obj = quadratic_probe({0.1, 0.2, -0.3, 0.4});
  Rng r1(42), r2(42);
  const auto a = GetParam().fn(obj, RLHyperparams{}, r1);
  const auto b = GetParam().fn(obj, RLHyperparams{}, r2);
  EXPECT_EQ(a.theta, b.theta);
  EXPECT_EQ(a.diagnostics.sampled_costs, b.diagnostics.sampled_costs);
}

TEST_P(RlMethodTest, RewardIsNegatedCostOfEverySample) {
  auto obj = quadratic_probe({0.3, -0.6});
  auto inner = obj.cost;
  std::vector<double> costs;
  obj.cost = [&](std::span<const double> a) {
    const double c = inner(a);
    costs.push_back(c);
    return c;
  };
  auto inner_cg = obj.cost_and_gradient;
  obj.cost_and_gradient = [&](std::span<const double> a) {
    auto cg = inner_cg(a);
    costs.push_back(cg.cost);
    return cg;
  };
  Rng rng(3);
  const auto res = GetParam().fn(obj, RLHyperparams{}, rng);
  ASSERT_FALSE(res.diagnostics.sampled_costs.empty());
  EXPECT_EQ(res.diagnostics.sampled_costs, costs);
}

// Property: on ||a - c||^2 with ||c||_inf <= 0.8 the returned cost is at most
// the cost at the method's own starting policy.
TEST_P(RlMethodTest, ConvexProbeDescent) {
  for (int trial = 0; trial < 5; ++trial) {
    for (std::size_t p : {2u, 4u, 8u}) {
      Rng crng(500 + trial * 17 + p);
      std::vector<double> c(p);
      for (double& x : c) x = crng.uniform(-0.8, 0.8);
      const auto obj = quadratic_probe(c);
      Rng start_rng(trial);
      const double start = obj.cost(tanh_mean(initial_policy_parameters(p, RLHyperparams{}, start_rng)));
      Rng rng(trial);
      const auto res = GetParam().fn(obj, RLHyperparams{}, rng);
      EXPECT_LE(obj.cost(res.theta), start) << GetParam().name << " P=" << p << " trial " << trial;
    }
  }
}

TEST_P(RlMethodTest, NonFiniteCostAborts) {
  Objective obj = quadratic_probe({0.1});
  obj.cost = [](std::span<const double>) { return std::nan(""); };
  obj.cost_and_gradient = [](std::span<const double>) {
    return CostAndGradient{std::numeric_limits<double>::infinity(), {0.0}};
  };
  Rng rng(0);
  EXPECT_THROW(GetParam().fn(obj, RLHyperparams{}, rng), std::runtime_error);
}

INSTANTIATE_TEST_SUITE_P(All, RlMethodTest, ::testing::ValuesIn(kRlMethods),
                         [](const auto& info) { return std::string(info.param.name); });

TEST(Dpg, ZeroStartOnCenteredQuadraticStaysAtZero) {
  RLHyperparams hp;
  hp.initial_phi = {0.0, 0.0, 0.0};
  Rng rng(0);
  const auto res = dpg_init(quadratic_probe({0, 0, 0}), hp, rng);
  for (double t : res.theta) EXPECT_EQ(t, 0.0);
}

TEST(Dpg, ZeroStartDescendsOnShiftedQuadratic) {
  RLHyperparams hp;
  hp.initial_phi = {0.0, 0.0, 0.0};
  Rng rng(0);
  const auto obj = quadratic_probe({0.5, 0.5, 0.5});
  const auto res = dpg_init(obj, hp, rng);
  EXPECT_LT(obj.cost(res.theta), obj.cost(std::vector<double>(3, 0.0)));
}

TEST(Ddpg, DescendsFromHalfStart) {
  RLHyperparams hp;
  hp.initial_phi.assign(4, 0.5);
  const auto obj = quadratic_probe(std::vector<double>(4, 0.0));
  Rng rng(0);
  const auto res = ddpg_init(obj, hp, rng);
  EXPECT_LE(obj.cost(res.theta), obj.cost(tanh_mean(hp.initial_phi)));
}

TEST(Dpg, RequiresGradient) {
  auto obj = quadratic_probe({0.1});
  obj.cost_and_gradient = nullptr;
  Rng rng(0);
  EXPECT_THROW(dpg_init(obj, RLHyperparams{}, rng), std::invalid_argument);
}

TEST(HeisenbergInit, DpgBeatsZeroInit) {
  const auto h = build_heisenberg(4);
  const auto circuit = build_heisenberg_ansatz(4, 2);
  const auto obj = make_circuit_objective(circuit, h);
  Rng rng(0);
  const auto res = dpg_init(obj, RLHyperparams{}, rng);
  EXPECT_LT(obj.cost(res.theta), obj.cost(std::vector<double>(circuit.num_params, 0.0)));
}

TEST(HeisenbergInit, SacBeatsMeanUniformSample) {
  const auto h = build_heisenberg(4);
  const auto circuit = build_heisenberg_ansatz(4, 2);
  const auto obj = make_circuit_objective(circuit, h);
  Rng urng(11);
  double uniform_mean = 0.0;
  for (int i = 0; i < 100; ++i) {
    uniform_mean += obj.cost(baseline_init(BaselineKind::kUniform, circuit.num_params, {}, urng));
  }
  uniform_mean /= 100.0;
  Rng rng(0);
  const auto res = sac_init(obj, RLHyperparams{}, rng);
  EXPECT_LT(obj.cost(res.theta), uniform_mean);
}

TEST(Baselines, ZeroIsAllZeros) {
  Rng rng(0);
  const auto t = baseline_init(BaselineKind::kZero, 300, {}, rng);
  EXPECT_EQ(t, std::vector<double>(300, 0.0));
}

TEST(Baselines, GaussianPresetsAreExact) {
  EXPECT_EQ(GaussianInitParams::heisenberg().variance_gamma2, 1.0 / 160.0);
  EXPECT_EQ(GaussianInitParams::chemistry().variance_gamma2, 1.0 / 288.0);
  EXPECT_EQ(GaussianInitParams::heisenberg().derivation, GaussianDerivation::kHeisenbergSK);
  EXPECT_THROW(GaussianInitParams::explicit_variance(0.0), std::invalid_argument);
}

TEST(Baselines, GaussianSampleVarianceWithinFivePercent) {
  for (const auto& params : {GaussianInitParams::heisenberg(), GaussianInitParams::chemistry()}) {
    Rng rng(5);
    const auto t = baseline_init(BaselineKind::kGaussian, 100000, params, rng);
    double mean = 0.0, sq = 0.0;
    for (double x : t) mean += x;
    mean /= t.size();
    for (double x : t) sq += (x - mean) * (x - mean);
    const double var = sq / (t.size() - 1);
    EXPECT_NEAR(var, params.variance_gamma2, 0.05 * params.variance_gamma2);
  }
}

TEST(Baselines, UniformCoversConfiguredRange) {
  Rng rng(6);
  const auto t = baseline_init(BaselineKind::kUniform, 20000, {}, rng);
  double lo = 10, hi = -10;
  for (double x : t) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  EXPECT_GE(lo, 0.0);
  EXPECT_LT(hi, 2 * std::numbers::pi);
  EXPECT_LT(lo, 0.01);
  EXPECT_GT(hi, 2 * std::numbers::pi - 0.01);
  Rng rng2(6);
  const auto s = baseline_init(BaselineKind::kUniform, 1000, {}, rng2, {-1.0, 1.0});
  for (double x : s) {
    EXPECT_GE(x, -1.0);
    EXPECT_LT(x, 1.0);
  }
  EXPECT_THROW(baseline_init(BaselineKind::kUniform, 3, {}, rng2, {1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(baseline_init(BaselineKind::kZero, 0, {}, rng2), std::invalid_argument);
}

TEST(Ppo, RatioIsOneAtOldPolicy) {
  Rng rng(7);
  const std::vector<double> phi{0.2, -0.7, 1.3};
  for (int t = 0; t < 20; ++t) {
    std::vector<double> a = tanh_mean(phi);
    for (double& x : a) x += 0.1 * rng.normal();
    EXPECT_EQ(std::exp(gaussian_log_prob(a, phi, 0.1) - gaussian_log_prob(a, phi, 0.1)), 1.0);
  }
}

// Property: the clipped objective never exceeds the unclipped surrogate mean.
TEST(PpoProperty, ClippedObjectiveIsBoundedByUnclipped) {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.next_u64() % 10;
    std::vector<double> r(n), adv(n);
    double unclipped = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      r[t] = rng.uniform(0.0, 3.0);
      adv[t] = trial % 2 ? rng.uniform(0.0, 2.0) : rng.uniform(-2.0, 2.0);
      unclipped += r[t] * adv[t];
    }
    unclipped /= n;
    EXPECT_LE(ppo_clipped_objective(r, adv, 0.2), unclipped + 1e-15);
  }
  const std::vector<double> r{1.5}, adv{1.0};
  EXPECT_DOUBLE_EQ(ppo_clipped_objective(r, adv, 0.2), 1.2);
}

TEST(Ppo, BaselineConvergesUnderConstantReward) {
  const std::vector<double> rewards(16, -2.5);
  double v = 0.0;
  for (int e = 0; e < 50; ++e) v = update_scalar_baseline(v, rewards, 0.1);
  EXPECT_NEAR(v, -2.5, 1e-3);
}

TEST(Trpo, KlWithinTrustRegionOnHeisenberg) {
  const auto h = build_heisenberg(4);
  const auto circuit = build_heisenberg_ansatz(4, 2);
  const auto obj = make_circuit_objective(circuit, h);
  const RLHyperparams hp;
  Rng rng(0);
  const auto res = trpo_init(obj, hp, rng);
  EXPECT_FALSE(res.diagnostics.accepted_kl.empty());
  EXPECT_EQ(res.diagnostics.accepted_kl.size() + res.diagnostics.rejected_updates,
            static_cast<std::size_t>(hp.episodes));
  for (double kl : res.diagnostics.accepted_kl) EXPECT_LE(kl, hp.trpo_kl_delta + 1e-6);
}

TEST(Trpo, ConjugateGradientSolvesSpdSystem) {
  // A = [[4, 1, 0], [1, 3, 1], [0, 1, 2]].
  const auto matvec = [](std::span<const double> x) {
    return std::vector<double>{4 * x[0] + x[1], x[0] + 3 * x[1] + x[2], x[1] + 2 * x[2]};
  };
  const std::vector<double> b{1.0, 2.0, 3.0};
  const auto res = conjugate_gradient(matvec, b, 10, 1e-20);
  EXPECT_TRUE(res.converged);
  EXPECT_LE(res.iterations, 3);
  const auto ax = matvec(res.x);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(ax[i], b[i], 1e-12);
}

TEST(A2c, PerfectCriticGivesZeroUpdate) {
  const std::vector<std::vector<double>> actions{{0.1, 0.2}, {-0.3, 0.4}};
  const std::vector<double> rewards{-1.0, -2.0};
  const auto g = a2c_actor_gradient(actions, rewards, rewards, std::vector<double>{0.1, -0.1}, 0.1);
  for (double x : g) EXPECT_EQ(x, 0.0);
}

TEST(A2c, SaturatedMeanGivesVanishingUpdate) {
  const std::vector<std::vector<double>> actions{{0.5}};
  const std::vector<double> rewards{3.0}, values{0.0};
  for (double phi : {25.0, -25.0}) {
    const auto g = a2c_actor_gradient(actions, rewards, values, std::vector<double>{phi}, 0.1);
    EXPECT_NEAR(g[0], 0.0, 1e-15);
  }
}

TEST(Dispatch, NamesRoundTrip) {
  for (const auto& name : init_method_names()) {
    const auto m = parse_init_method(name);
    ASSERT_TRUE(m.has_value()) << name;
    EXPECT_EQ(to_string(*m), name);
  }
  EXPECT_EQ(init_method_names().size(), 9u);
  EXPECT_EQ(parse_init_method("a3c"), InitMethod::kA2c);
  EXPECT_FALSE(parse_init_method("dqg").has_value());
  EXPECT_TRUE(is_rl_method(InitMethod::kTrpo));
  EXPECT_FALSE(is_rl_method(InitMethod::kGaussian));
}

TEST(Dispatch, RemapSendsActionsIntoZeroTwoPi) {
  InitializerSettings settings;
  settings.remap_to_0_2pi = true;
  const auto obj = quadratic_probe({0.3, 0.4});
  Rng rng(1);
  const auto res = initialize(InitMethod::kDpg, obj, settings, rng);
  for (std::size_t i = 0; i < res.theta.size(); ++i) {
    EXPECT_GT(res.theta[i], 0.0);
    EXPECT_LT(res.theta[i], 2 * std::numbers::pi);
    EXPECT_DOUBLE_EQ(res.theta[i], std::numbers::pi * (std::tanh(res.phi[i]) + 1.0));
  }
}

TEST(Dispatch, RemappedGradientIsScaled) {
  const auto inner = quadratic_probe({1.0});
  const auto outer = remap_objective_to_0_2pi(inner);
  const std::vector<double> a{0.2};
  const auto cg = outer.cost_and_gradient(a);
  EXPECT_DOUBLE_EQ(cg.cost, inner.cost(remap_to_0_2pi(a)));
  EXPECT_DOUBLE_EQ(cg.gradient[0], std::numbers::pi * 2.0 * (std::numbers::pi * 1.2 - 1.0));
}

TEST(Dispatch, BaselinesIgnoreCost) {
  Objective obj;
  obj.dimension = 5;
  obj.cost = [](std::span<const double>) -> double { throw std::logic_error("called"); };
  Rng rng(0);
  EXPECT_EQ(initialize(InitMethod::kZero, obj, {}, rng).theta, std::vector<double>(5, 0.0));
}

TEST(Hyperparams, DefaultsAndValidation) {
  const RLHyperparams hp;
  EXPECT_EQ(hp.episodes, 50);
  EXPECT_EQ(hp.step_size_alpha, 0.05);
  EXPECT_EQ(hp.ddpg_actor_lr, 0.02);
  EXPECT_EQ(hp.ddpg_critic_lr, 0.02);
  EXPECT_EQ(hp.trpo_kl_delta, 0.01);
  EXPECT_EQ(hp.ppo_clip_epsilon, 0.20);
  EXPECT_EQ(hp.sac_entropy_alpha, 0.01);
  EXPECT_EQ(hp.policy_sigma, 0.1);
  EXPECT_EQ(hp.batch_size, 16);
  EXPECT_EQ(hp.critic_hidden, 32);
  EXPECT_NO_THROW(hp.validate());
  RLHyperparams bad = hp;
  bad.ppo_clip_epsilon = 1.0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = hp;
  bad.episodes = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Hyperparams, InitialPhiLengthIsChecked) {
  RLHyperparams hp;
  hp.initial_phi = {0.0, 0.0};
  Rng rng(0);
  EXPECT_THROW(initial_policy_parameters(3, hp, rng), std::invalid_argument);
  EXPECT_EQ(initial_policy_parameters(2, hp, rng), hp.initial_phi);
}

}  // namespace
}  // namespace rlinit
