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

#include "rlinit/ansatz.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rlinit {

CircuitTemplate build_heisenberg_ansatz(int num_qubits, int num_layers) {
  if (num_qubits < 2) {
    throw std::invalid_argument("layered ansatz needs at least 2 qubits");
  }
  if (num_layers < 1) throw std::invalid_argument("layered ansatz needs at least 1 layer");
  if (num_qubits > kMaxQubits) throw std::invalid_argument("too many qubits");

  CircuitTemplate circuit;
  circuit.num_qubits = num_qubits;
  circuit.initial_basis_index = 0;
  // (N-1, 0) coincides with (0, 1) when N = 2; CZ is symmetric and self-inverse,
  // so applying it twice would cancel.
  const int ring_pairs = num_qubits == 2 ? 1 : num_qubits;
  std::size_t slot = 0;
  for (int layer = 0; layer < num_layers; ++layer) {
    for (int q = 0; q < ring_pairs; ++q) {
      circuit.gates.push_back({GateKind::kCZ, {q, (q + 1) % num_qubits}, std::nullopt});
    }
    for (int q = 0; q < num_qubits; ++q) {
      circuit.gates.push_back({GateKind::kRX, {q}, slot++});
    }
    for (int q = 0; q < num_qubits; ++q) {
      circuit.gates.push_back({GateKind::kRY, {q}, slot++});
    }
  }
  circuit.num_params = slot;
  return circuit;
}

void GivensAnsatzSpec::validate() const {
  if (num_orbitals < 1 || num_orbitals > kMaxQubits) {
    throw std::invalid_argument("orbital count " + std::to_string(num_orbitals) +
                                " out of range");
  }
  if (num_electrons < 0 || num_electrons > num_orbitals) {
    throw std::invalid_argument("electron count " + std::to_string(num_electrons) +
                                " must lie in [0, " + std::to_string(num_orbitals) + "]");
  }
  for (std::size_t r = 0; r < rotations.size(); ++r) {
    const auto& rot = rotations[r];
    const std::size_t want = rot.kind == ExcitationKind::kSingle ? 2 : 4;
    if (rot.targets.size() != want) {
      throw std::invalid_argument("rotation " + std::to_string(r) + " needs " +
                                  std::to_string(want) + " targets");
    }
    for (std::size_t i = 0; i < rot.targets.size(); ++i) {
      if (rot.targets[i] < 0 || rot.targets[i] >= num_orbitals) {
        throw std::out_of_range("rotation " + std::to_string(r) + " target " +
                                std::to_string(rot.targets[i]) + " outside " +
                                std::to_string(num_orbitals) + " orbitals");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (rot.targets[i] == rot.targets[j]) {
          throw std::invalid_argument("rotation " + std::to_string(r) + " repeats a target");
        }
      }
    }
  }
}

std::uint64_t hartree_fock_index(int num_electrons, int num_orbitals) {
  std::uint64_t index = 0;
  for (int q = 0; q < num_electrons; ++q) index |= std::uint64_t{1} << (num_orbitals - 1 - q);
  return index;
}

CircuitTemplate build_givens_ansatz(const GivensAnsatzSpec& spec) {
  spec.validate();
  CircuitTemplate circuit;
  circuit.num_qubits = spec.num_orbitals;
  circuit.initial_basis_index = hartree_fock_index(spec.num_electrons, spec.num_orbitals);
  std::size_t slot = 0;
  for (const auto& rot : spec.rotations) {
    const GateKind kind = rot.kind == ExcitationKind::kSingle ? GateKind::kGivensSingle
                                                               : GateKind::kGivensDouble;
    circuit.gates.push_back({kind, rot.targets, slot++});
  }
  circuit.num_params = slot;
  return circuit;
}

GivensAnsatzSpec excitation_layout(int num_electrons, int num_orbitals) {
  GivensAnsatzSpec spec{num_electrons, num_orbitals, {}};
  spec.validate();
  const auto spin = [](int orbital) { return orbital % 2; };

  for (int o1 = 0; o1 < num_electrons; ++o1) {
    for (int o2 = o1 + 1; o2 < num_electrons; ++o2) {
      for (int v1 = num_electrons; v1 < num_orbitals; ++v1) {
        for (int v2 = v1 + 1; v2 < num_orbitals; ++v2) {
          if (spin(o1) + spin(o2) == spin(v1) + spin(v2)) {
            spec.rotations.push_back({ExcitationKind::kDouble, {o1, o2, v1, v2}});
          }
        }
      }
    }
  }
  for (int o = 0; o < num_electrons; ++o) {
    for (int v = num_electrons; v < num_orbitals; ++v) {
      if (spin(o) == spin(v)) spec.rotations.push_back({ExcitationKind::kSingle, {o, v}});
    }
  }
  std::sort(spec.rotations.begin(), spec.rotations.end(),
            [](const GivensRotation& a, const GivensRotation& b) { return a.targets < b.targets; });
  return spec;
}

GivensAnsatzSpec default_lih_rotation_layout() { return excitation_layout(2, 10); }

}  // namespace rlinit
