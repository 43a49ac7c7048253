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

#include "rlinit/critic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rlinit {

CriticNet CriticNet::zeros(std::size_t input_dim, std::size_t hidden_dim) {
  if (input_dim == 0 || hidden_dim == 0) {
    throw std::invalid_argument("critic dimensions must be positive");
  }
  CriticNet net;
  net.input_dim = input_dim;
  net.hidden_dim = hidden_dim;
  net.w1.assign(hidden_dim * input_dim, 0.0);
  net.b1.assign(hidden_dim, 0.0);
  net.w2.assign(hidden_dim, 0.0);
  return net;
}

CriticNet CriticNet::random(std::size_t input_dim, std::size_t hidden_dim, Rng& rng) {
  CriticNet net = zeros(input_dim, hidden_dim);
  const double sd = 1.0 / std::sqrt(static_cast<double>(input_dim));
  for (double& w : net.w1) w = sd * rng.normal();
  return net;
}

void CriticNet::validate() const {
  if (w1.size() != hidden_dim * input_dim || b1.size() != hidden_dim ||
      w2.size() != hidden_dim) {
    throw std::invalid_argument("critic parameter blocks have inconsistent shapes");
  }
}

namespace {

std::vector<double> hidden_activations(const CriticNet& net, std::span<const double> a) {
  net.validate();
  if (a.size() != net.input_dim) {
    throw std::invalid_argument("critic expects input of length " +
                                std::to_string(net.input_dim) + ", got " +
                                std::to_string(a.size()));
  }
  std::vector<double> h(net.hidden_dim);
  for (std::size_t i = 0; i < net.hidden_dim; ++i) {
    double z = net.b1[i];
    const double* row = net.w1.data() + i * net.input_dim;
    for (std::size_t j = 0; j < net.input_dim; ++j) z += row[j] * a[j];
    h[i] = std::tanh(z);
  }
  return h;
}

}  // namespace

double mlp_forward(const CriticNet& net, std::span<const double> a) {
  const auto h = hidden_activations(net, a);
  double q = net.b2;
  for (std::size_t i = 0; i < net.hidden_dim; ++i) q += net.w2[i] * h[i];
  return q;
}

CriticGradient mlp_backward(const CriticNet& net, std::span<const double> a, double upstream) {
  const auto h = hidden_activations(net, a);
  CriticGradient g;
  g.b2 = upstream;
  g.w2.resize(net.hidden_dim);
  g.b1.resize(net.hidden_dim);
  g.w1.resize(net.hidden_dim * net.input_dim);
  g.input.assign(net.input_dim, 0.0);
  for (std::size_t i = 0; i < net.hidden_dim; ++i) {
    g.w2[i] = upstream * h[i];
    const double dz = upstream * net.w2[i] * (1.0 - h[i] * h[i]);
    g.b1[i] = dz;
    const double* row = net.w1.data() + i * net.input_dim;
    double* grow = g.w1.data() + i * net.input_dim;
    for (std::size_t j = 0; j < net.input_dim; ++j) {
      grow[j] = dz * a[j];
      g.input[j] += dz * row[j];
    }
  }
  return g;
}

void apply_gradient(CriticNet& net, const CriticGradient& grad, double lr) {
  for (std::size_t k = 0; k < net.w1.size(); ++k) net.w1[k] -= lr * grad.w1[k];
  for (std::size_t i = 0; i < net.hidden_dim; ++i) {
    net.b1[i] -= lr * grad.b1[i];
    net.w2[i] -= lr * grad.w2[i];
  }
  net.b2 -= lr * grad.b2;
}

double regress_step(CriticNet& net, std::span<const double> a, double target, double lr) {
  const double q = mlp_forward(net, a);
  apply_gradient(net, mlp_backward(net, a, 2.0 * (q - target)), lr);
  return q;
}

void TransitionBatch::add(std::span<const double> a, double target) {
  actions.emplace_back(a.begin(), a.end());
  targets.push_back(target);
}

void TransitionBatch::clear() {
  actions.clear();
  targets.clear();
}

void fit_batch(CriticNet& net, const TransitionBatch& batch, double lr, int steps) {
  net.validate();
  const std::size_t n = batch.size();
  if (n == 0) return;
  const std::size_t hid = net.hidden_dim;
  const std::size_t in = net.input_dim;
  const double scale = 1.0 / static_cast<double>(n);
  std::vector<double> h(hid);
  CriticGradient g = mlp_backward(net, batch.actions[0], 0.0);
  for (int s = 0; s < steps; ++s) {
    std::fill(g.w1.begin(), g.w1.end(), 0.0);
    std::fill(g.b1.begin(), g.b1.end(), 0.0);
    std::fill(g.w2.begin(), g.w2.end(), 0.0);
    g.b2 = 0.0;
    double max_feature_norm = 1.0;
    for (std::size_t t = 0; t < n; ++t) {
      const auto& a = batch.actions[t];
      if (a.size() != in) throw std::invalid_argument("batch action has the wrong length");
      double q = net.b2;
      for (std::size_t i = 0; i < hid; ++i) {
        double z = net.b1[i];
        const double* row = net.w1.data() + i * in;
        for (std::size_t j = 0; j < in; ++j) z += row[j] * a[j];
        h[i] = std::tanh(z);
        q += net.w2[i] * h[i];
      }
      double feature_norm = 1.0;
      for (std::size_t i = 0; i < hid; ++i) feature_norm += h[i] * h[i];
      max_feature_norm = std::max(max_feature_norm, feature_norm);
      const double up = 2.0 * (q - batch.targets[t]) * scale;
      g.b2 += up;
      for (std::size_t i = 0; i < hid; ++i) {
        g.w2[i] += up * h[i];
        const double dz = up * net.w2[i] * (1.0 - h[i] * h[i]);
        g.b1[i] += dz;
        double* grow = g.w1.data() + i * in;
        for (std::size_t j = 0; j < in; ++j) grow[j] += dz * a[j];
      }
    }
    // Output-layer curvature is at most 2 * max |(h, 1)|^2.
    apply_gradient(net, g, std::min(lr, 0.5 / max_feature_norm));
  }
}

}  // namespace rlinit
