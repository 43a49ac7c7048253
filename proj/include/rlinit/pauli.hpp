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
#include <string>
#include <utility>
#include <vector>

#include "rlinit/statevector.hpp"

namespace rlinit {

enum class PauliAxis { kX, kY, kZ };

char to_char(PauliAxis axis);

struct PauliFactor {
  int qubit = 0;
  PauliAxis axis = PauliAxis::kZ;

  auto operator<=>(const PauliFactor&) const = default;
};

/// coefficient * (tensor product of the factors). No factors means a multiple
/// of the identity.
struct PauliString {
  double coefficient = 0.0;
  std::vector<PauliFactor> factors;

  /// Factors sorted by qubit. Throws on repeated or negative qubit indices.
  std::vector<PauliFactor> canonical_factors() const;

  /// e.g. "0.5 X0 Y1" or "-1 I".
  std::string to_string() const;
};

/// Bit-level view of a Pauli string: P|x> = i^num_y (-1)^popcount(x & z_mask) |x ^ x_mask>.
struct PauliMasks {
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;
  int num_y = 0;
};

PauliMasks pauli_masks(const PauliString& term, int num_qubits);

/// Weighted sum of Pauli strings over a fixed register. Terms with identical
/// factor sets are merged on construction, keeping first-occurrence order.
class PauliSum {
 public:
  PauliSum() = default;
  PauliSum(int num_qubits, std::vector<PauliString> terms);

  int num_qubits() const { return num_qubits_; }
  const std::vector<PauliString>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Multiset equality of (factor set, coefficient) within `tolerance`.
  bool equivalent(const PauliSum& other, double tolerance = 0.0) const;

 private:
  int num_qubits_ = 0;
  std::vector<PauliString> terms_;
};

/// sum_k c_k <psi|P_k|psi>, returned with its (ideally zero) imaginary part.
Complex pauli_expectation_complex(const Statevector& state, const PauliSum& observable);

/// Real part of pauli_expectation_complex.
double pauli_expectation(const Statevector& state, const PauliSum& observable);

/// observable |state>.
Statevector apply_pauli_sum(const Statevector& state, const PauliSum& observable);

}  // namespace rlinit
