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

#include <cstddef>
#include <span>
#include <vector>

#include "rlinit/rng.hpp"

namespace rlinit {

/// One-hidden-layer scalar network Q(a) = w2^T tanh(W1 a + b1) + b2.
///
/// Used as the action-value critic for DDPG and SAC and as the value critic
/// for A2C. W1 is stored row-major, hidden x input.
struct CriticNet {
  std::size_t input_dim = 0;
  std::size_t hidden_dim = 0;
  std::vector<double> w1;
  std::vector<double> b1;
  std::vector<double> w2;
  double b2 = 0.0;

  static CriticNet zeros(std::size_t input_dim, std::size_t hidden_dim);

  /// W1 ~ N(0, 1/input_dim); output weights and biases start at zero.
  static CriticNet random(std::size_t input_dim, std::size_t hidden_dim, Rng& rng);

  void validate() const;
};

struct CriticGradient {
  std::vector<double> w1;
  std::vector<double> b1;
  std::vector<double> w2;
  double b2 = 0.0;
  std::vector<double> input;
};

double mlp_forward(const CriticNet& net, std::span<const double> a);

/// Gradient of upstream * Q(a) with respect to every parameter block and to a.
CriticGradient mlp_backward(const CriticNet& net, std::span<const double> a, double upstream);

/// net <- net - lr * grad (parameter blocks only).
void apply_gradient(CriticNet& net, const CriticGradient& grad, double lr);

/// One gradient-descent step on (Q(a) - target)^2. Returns Q(a) before the step.
double regress_step(CriticNet& net, std::span<const double> a, double target, double lr);

/// (action, target) pairs collected during one episode.
struct TransitionBatch {
  std::vector<std::vector<double>> actions;
  std::vector<double> targets;

  void add(std::span<const double> a, double target);
  void clear();
  std::size_t size() const { return targets.size(); }
};

/// `steps` full-batch gradient-descent steps on mean (Q(a) - target)^2. The
/// step is capped at 1 / (2 max_t |(h_t, 1)|^2).
void fit_batch(CriticNet& net, const TransitionBatch& batch, double lr, int steps);

}  // namespace rlinit
