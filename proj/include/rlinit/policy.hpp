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

#include <span>
#include <vector>

namespace rlinit {

// Fixed-variance Gaussian policy with mean tanh(phi), shared by the stochastic
// initializers.

std::vector<double> tanh_mean(std::span<const double> phi);

/// log N(a; tanh(phi), sigma^2 I).
double gaussian_log_prob(std::span<const double> a, std::span<const double> phi, double sigma);

/// grad_phi log pi(a) = ((a - mu) / sigma^2) * (1 - mu^2), elementwise.
std::vector<double> gaussian_score(std::span<const double> a, std::span<const double> phi,
                                   double sigma);

/// KL(pi_old || pi_new) = sum (tanh(phi_old) - tanh(phi_new))^2 / (2 sigma^2).
double gaussian_kl(std::span<const double> phi_old, std::span<const double> phi_new,
                   double sigma);

/// Fisher information of the policy at phi, applied to v. The Fisher matrix is
/// diagonal with entries (1 - mu^2)^2 / sigma^2.
std::vector<double> fisher_vector_product(std::span<const double> phi, double sigma,
                                          std::span<const double> v);

}  // namespace rlinit
