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

#include "rlinit/policy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rlinit {

namespace {
void check_sizes(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("policy vectors have mismatched lengths");
}
}  // namespace

std::vector<double> tanh_mean(std::span<const double> phi) {
  std::vector<double> mu(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) mu[i] = std::tanh(phi[i]);
  return mu;
}

double gaussian_log_prob(std::span<const double> a, std::span<const double> phi, double sigma) {
  check_sizes(a.size(), phi.size());
  double quad = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double z = (a[i] - std::tanh(phi[i])) / sigma;
    quad += z * z;
  }
  const double d = static_cast<double>(a.size());
  return -0.5 * quad - 0.5 * d * std::log(2.0 * std::numbers::pi * sigma * sigma);
}

std::vector<double> gaussian_score(std::span<const double> a, std::span<const double> phi,
                                   double sigma) {
  check_sizes(a.size(), phi.size());
  std::vector<double> g(a.size());
  const double inv_var = 1.0 / (sigma * sigma);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double mu = std::tanh(phi[i]);
    g[i] = (a[i] - mu) * inv_var * (1.0 - mu * mu);
  }
  return g;
}

double gaussian_kl(std::span<const double> phi_old, std::span<const double> phi_new,
                   double sigma) {
  check_sizes(phi_old.size(), phi_new.size());
  double total = 0.0;
  for (std::size_t i = 0; i < phi_old.size(); ++i) {
    const double d = std::tanh(phi_old[i]) - std::tanh(phi_new[i]);
    total += d * d;
  }
  return total / (2.0 * sigma * sigma);
}

std::vector<double> fisher_vector_product(std::span<const double> phi, double sigma,
                                          std::span<const double> v) {
  check_sizes(phi.size(), v.size());
  std::vector<double> out(v.size());
  const double inv_var = 1.0 / (sigma * sigma);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double mu = std::tanh(phi[i]);
    const double j = 1.0 - mu * mu;
    out[i] = j * j * inv_var * v[i];
  }
  return out;
}

}  // namespace rlinit
