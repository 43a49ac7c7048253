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
#include <span>
#include <vector>

#include "rlinit/statevector.hpp"

namespace rlinit {

/// Ordered gate list with parameter-slot bindings, plus the basis state the
/// circuit starts from.
struct CircuitTemplate {
  int num_qubits = 0;
  std::vector<GateDescriptor> gates;
  std::size_t num_params = 0;
  std::uint64_t initial_basis_index = 0;

  /// Gate validity, slot range, and that every slot in [0, num_params) is
  /// bound to exactly one gate.
  void validate() const;

  Statevector initial_state() const {
    return prepare_basis_state(num_qubits, initial_basis_index);
  }
};

/// Applies the template's gates in order to `initial`, reading angles from
/// `theta` through each gate's parameter slot.
Statevector run_circuit(const CircuitTemplate& circuit, std::span<const double> theta,
                        Statevector initial);

/// Index of the gate bound to each parameter slot.
std::vector<std::size_t> slot_owners(const CircuitTemplate& circuit);

}  // namespace rlinit
