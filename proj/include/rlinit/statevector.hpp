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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rlinit {

using Complex = std::complex<double>;

enum class GateKind { kRX, kRY, kCZ, kGivensSingle, kGivensDouble };

std::string to_string(GateKind kind);

/// Number of qubits a gate of this kind acts on.
std::size_t gate_arity(GateKind kind);

bool is_parameterized(GateKind kind);

struct GateDescriptor {
  GateKind kind = GateKind::kRX;
  std::vector<int> targets;
  std::optional<std::size_t> param_slot;

  /// Checks arity, target distinctness and range, and slot presence.
  void validate(int num_qubits) const;

  bool operator==(const GateDescriptor&) const = default;
};

/// Dense statevector over `num_qubits` qubits.
///
/// Qubit i is stored in bit position (N - 1 - i) of the amplitude index, so
/// qubit 0 is the most significant bit and |q0 q1 ... q_{N-1}> reads the
/// index in binary from left to right.
class Statevector {
 public:
  Statevector() = default;
  Statevector(int num_qubits, std::vector<Complex> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> mutable_amplitudes() { return amplitudes_; }

  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
  Complex& operator[](std::size_t i) { return amplitudes_[i]; }

  double norm_squared() const;

  /// Bit mask selecting qubit `q` inside an amplitude index.
  std::uint64_t qubit_mask(int q) const {
    return std::uint64_t{1} << (num_qubits_ - 1 - q);
  }

 private:
  int num_qubits_ = 0;
  std::vector<Complex> amplitudes_;
};

/// Largest register the simulator accepts.
inline constexpr int kMaxQubits = 26;

Statevector prepare_basis_state(int num_qubits, std::uint64_t basis_index);

/// <a|b>, conjugate-linear in the first argument.
Complex inner_product(const Statevector& a, const Statevector& b);

/// Applies the gate unitary in place. `angle` must be present exactly when the
/// gate is parameterized.
///
///   RX(t) = exp(-i t X / 2), RY(t) = exp(-i t Y / 2), CZ = diag(1, 1, 1, -1).
///   GIVENS_SINGLE(t) rotates span{|01>, |10>} of its two targets:
///     |01> -> cos(t/2)|01> + sin(t/2)|10>,  |10> -> cos(t/2)|10> - sin(t/2)|01>.
///   GIVENS_DOUBLE(t) does the same on span{|0011>, |1100>} of its four targets.
void apply_gate_inplace(Statevector& state, const GateDescriptor& gate,
                        std::optional<double> angle);

Statevector apply_gate(Statevector state, const GateDescriptor& gate,
                       std::optional<double> angle);

/// Applies the Hermitian generator G of a parameterized gate, where
/// U(t) = exp(-i t G). The result is not normalized.
void apply_generator_inplace(Statevector& state, const GateDescriptor& gate);

}  // namespace rlinit
