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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rlinit/pauli.hpp"

namespace rlinit {

/// Open-chain Heisenberg model sum_{i=0}^{N-2} (X_i X_{i+1} + Y_i Y_{i+1} + Z_i Z_{i+1}).
PauliSum build_heisenberg(int num_qubits);

/// Raised for malformed Pauli-sum documents; carries the 1-based line number.
class PauliParseError : public std::runtime_error {
 public:
  PauliParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses the line-oriented Pauli-sum format:
///
///   # comment
///   qubits 4
///   -0.0971 I
///   0.1714 Z0
///   0.0453 X0 Y1 Y2 X3
///
/// The `qubits` header must precede every term and appear once. Each term line
/// is a real coefficient followed by factor tokens <axis><qubit>, or the single
/// token `I`. `#` starts a comment anywhere on a line. Repeated terms merge.
PauliSum parse_pauli_sum(std::string_view text);

PauliSum load_pauli_sum(const std::filesystem::path& path);

/// Inverse of parse_pauli_sum; coefficients use 17 significant digits.
std::string serialize_pauli_sum(const PauliSum& sum);

enum class NormMode { kCoeffL1, kSpectral };

std::string to_string(NormMode mode);

struct HamiltonianNorm {
  NormMode mode = NormMode::kCoeffL1;
  double value = 0.0;
};

/// kCoeffL1: sum |c_k|. kSpectral: largest |eigenvalue|, limited to
/// kMaxExactQubits qubits.
HamiltonianNorm hamiltonian_norm(const PauliSum& h, NormMode mode);

}  // namespace rlinit
