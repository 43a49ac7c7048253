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

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "dense_oracle.hpp"
#include "rlinit/eigensolver.hpp"
#include "rlinit/hamiltonians.hpp"

namespace rlinit {
namespace {

TEST(Eigensolver, TridiagonalTwoByTwo) {
  // [[2, 1], [1, 2]] has eigenvalues 1 and 3.
  const auto ev = tridiagonal_eigenvalues({2.0, 2.0}, {1.0});
  ASSERT_EQ(ev.size(), 2u);
  EXPECT_NEAR(ev[0], 1.0, 1e-14);
  EXPECT_NEAR(ev[1], 3.0, 1e-14);
}

TEST(Eigensolver, SymmetricMatchesEigen) {
  Rng rng(1);
  for (std::size_t n : {1u, 3u, 10u, 25u}) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index j = 0; j <= i; ++j) a(i, j) = a(j, i) = rng.uniform(-1, 1);
    }
    std::vector<double> flat(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    const auto got = symmetric_eigenvalues(flat, n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(got[k], es.eigenvalues()(static_cast<Eigen::Index>(k)), 1e-12);
  }
}

// Frozen reference energies of the open Heisenberg chain.
TEST(Eigensolver, HeisenbergGroundEnergies) {
  EXPECT_NEAR(exact_ground_energy(build_heisenberg(2), 2), -3.0, 1e-10);
  EXPECT_NEAR(exact_ground_energy(build_heisenberg(4), 4), -6.464101615138, 1e-9);
  EXPECT_NEAR(exact_ground_energy(build_heisenberg(6), 6), -9.974308535552, 1e-9);
  EXPECT_NEAR(exact_ground_energy(build_heisenberg(8), 8), -13.499730394752, 1e-9);
  EXPECT_NEAR(exact_ground_energy(build_heisenberg(10), 10), -17.032140829132, 1e-9);
}

TEST(Eigensolver, FourSiteClosedForm) {
  // E0 = -3 - 2 sqrt(3) for the four-site open chain.
  EXPECT_NEAR(exact_ground_energy(build_heisenberg(4), 4), -3.0 - 2.0 * std::sqrt(3.0), 1e-10);
}

// Property: dense path agrees with Eigen's complex Hermitian solver.
TEST(EigensolverProperty, SpectrumBoundsMatchEigen) {
  Rng rng(2);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 6);
    const PauliSum h = oracle::random_pauli_sum(n, 1 + static_cast<int>(rng.next_u64() % 8), rng);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(oracle::hamiltonian_matrix(h));
    const SpectrumBounds b = spectrum_bounds(h);
    EXPECT_NEAR(b.min, es.eigenvalues().minCoeff(), 1e-10);
    EXPECT_NEAR(b.max, es.eigenvalues().maxCoeff(), 1e-10);
  }
}

TEST(Eigensolver, LanczosPathMatchesEigenAtNineQubits) {
  Rng rng(3);
  const PauliSum h = oracle::random_pauli_sum(9, 12, rng);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(oracle::hamiltonian_matrix(h), Eigen::EigenvaluesOnly);
  EXPECT_NEAR(exact_ground_energy(h, 9), es.eigenvalues().minCoeff(), 1e-8);
}

TEST(Eigensolver, RejectsLargeOrMismatchedRegisters) {
  EXPECT_ANY_THROW(exact_ground_energy(build_heisenberg(15), 15));
  EXPECT_ANY_THROW(exact_ground_energy(build_heisenberg(4), 5));
}

}  // namespace
}  // namespace rlinit
