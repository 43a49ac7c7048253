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
#include <vector>

#include "rlinit/pauli.hpp"

namespace rlinit {

/// Largest register for which the exact spectrum is computed.
inline constexpr int kMaxExactQubits = 14;

/// Registers up to this size are diagonalized densely; larger ones use Lanczos.
inline constexpr int kMaxDenseQubits = 8;

/// Eigenvalues of a symmetric tridiagonal matrix by implicit QL iteration,
/// sorted ascending. `off_diagonal[i]` couples entries i and i+1.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> diagonal,
                                            std::vector<double> off_diagonal);

/// Eigenvalues of a dense symmetric n x n row-major matrix (Householder
/// reduction to tridiagonal form, then implicit QL), sorted ascending.
std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, std::size_t n);

struct SpectrumBounds {
  double min = 0.0;
  double max = 0.0;
};

/// Extreme eigenvalues of the Hermitian matrix of `observable`.
///
/// Up to kMaxDenseQubits the complex matrix H = A + iB is embedded as the real
/// symmetric [[A, -B], [B, A]] (same spectrum, each eigenvalue doubled) and
/// diagonalized densely. Larger registers use Lanczos with full
/// reorthogonalization on the matrix-free Pauli action.
SpectrumBounds spectrum_bounds(const PauliSum& observable);

/// Smallest eigenvalue of the observable on `num_qubits` qubits. Throws when
/// num_qubits exceeds kMaxExactQubits or disagrees with the observable.
double exact_ground_energy(const PauliSum& observable, int num_qubits);

}  // namespace rlinit
