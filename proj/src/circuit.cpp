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

#include "rlinit/circuit.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace rlinit {

namespace {
constexpr std::size_t kUnbound = std::numeric_limits<std::size_t>::max();
}

std::vector<std::size_t> slot_owners(const CircuitTemplate& circuit) {
  std::vector<std::size_t> owner(circuit.num_params, kUnbound);
  for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
    const auto& slot = circuit.gates[g].param_slot;
    if (!slot) continue;
    if (*slot >= circuit.num_params) {
      throw std::out_of_range("gate " + std::to_string(g) + " binds slot " +
                              std::to_string(*slot) + " but the template has " +
                              std::to_string(circuit.num_params) + " parameters");
    }
    if (owner[*slot] != kUnbound) {
      throw std::invalid_argument("parameter slot " + std::to_string(*slot) +
                                  " is shared by gates " + std::to_string(owner[*slot]) +
                                  " and " + std::to_string(g));
    }
    owner[*slot] = g;
  }
  for (std::size_t s = 0; s < owner.size(); ++s) {
    if (owner[s] == kUnbound) {
      throw std::invalid_argument("parameter slot " + std::to_string(s) + " is unused");
    }
  }
  return owner;
}

void CircuitTemplate::validate() const {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("unsupported qubit count " + std::to_string(num_qubits));
  }
  if (initial_basis_index >= (std::uint64_t{1} << num_qubits)) {
    throw std::out_of_range("initial basis index outside the register");
  }
  for (const auto& gate : gates) gate.validate(num_qubits);
  slot_owners(*this);
}

Statevector run_circuit(const CircuitTemplate& circuit, std::span<const double> theta,
                        Statevector initial) {
  if (initial.num_qubits() != circuit.num_qubits) {
    throw std::invalid_argument("initial state has " + std::to_string(initial.num_qubits()) +
                                " qubits, circuit expects " +
                                std::to_string(circuit.num_qubits));
  }
  for (const auto& gate : circuit.gates) {
    if (gate.param_slot) {
      if (*gate.param_slot >= theta.size()) {
        throw std::out_of_range("parameter slot " + std::to_string(*gate.param_slot) +
                                " outside parameter vector of length " +
                                std::to_string(theta.size()));
      }
      apply_gate_inplace(initial, gate, theta[*gate.param_slot]);
    } else {
      apply_gate_inplace(initial, gate, std::nullopt);
    }
  }
  return initial;
}

}  // namespace rlinit
