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
#include <vector>

#include "rlinit/circuit.hpp"

namespace rlinit {

/// Layered hardware-efficient circuit on |0...0>. Each layer applies CZ on the
/// ring pairs (0,1), (1,2), ..., (N-1,0), then RX on every qubit, then RY on
/// every qubit. At N = 2 the ring has a single pair. 2*N*L parameters.
CircuitTemplate build_heisenberg_ansatz(int num_qubits, int num_layers);

enum class ExcitationKind { kSingle, kDouble };

struct GivensRotation {
  ExcitationKind kind = ExcitationKind::kSingle;
  std::vector<int> targets;

  bool operator==(const GivensRotation&) const = default;
};

/// Particle-conserving chemistry circuit description: the Hartree-Fock state
/// with the first `num_electrons` of `num_orbitals` spin orbitals occupied,
/// followed by one Givens rotation per entry of `rotations`.
struct GivensAnsatzSpec {
  int num_electrons = 0;
  int num_orbitals = 0;
  std::vector<GivensRotation> rotations;

  void validate() const;
};

/// Basis index of |1>^{n_e} (x) |0>^{n_0 - n_e} under the statevector bit order.
std::uint64_t hartree_fock_index(int num_electrons, int num_orbitals);

CircuitTemplate build_givens_ansatz(const GivensAnsatzSpec& spec);

/// Spin-conserving excitations out of the Hartree-Fock state, with even
/// orbitals spin-up and odd orbitals spin-down. Doubles (o1, o2, v1, v2) move
/// an occupied pair into a virtual pair of zero net spin change; singles
/// (o, v) keep the spin. All rotations are sorted lexicographically by target
/// tuple; with two electrons this puts every double ahead of the singles.
GivensAnsatzSpec excitation_layout(int num_electrons, int num_orbitals);

/// The 24-rotation layout used for the 2-electron, 10-orbital chemistry
/// task: excitation_layout(2, 10), i.e. 16 doubles followed by 8 singles.
GivensAnsatzSpec default_lih_rotation_layout();

}  // namespace rlinit
