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

#include "rlinit/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rlinit {

char to_char(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::kX:
      return 'X';
    case PauliAxis::kY:
      return 'Y';
    case PauliAxis::kZ:
      return 'Z';
  }
  return '?';
}

std::vector<PauliFactor> PauliString::canonical_factors() const {
  std::vector<PauliFactor> sorted = factors;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].qubit < 0) {
      throw std::invalid_argument("negative qubit index in Pauli string");
    }
    if (i > 0 && sorted[i].qubit == sorted[i - 1].qubit) {
      throw std::invalid_argument("qubit " + std::to_string(sorted[i].qubit) +
                                  " appears twice in one Pauli string");
    }
  }
  return sorted;
}

std::string PauliString::to_string() const {
  std::ostringstream out;
  out.precision(17);
  out << coefficient;
  if (factors.empty()) {
    out << " I";
  } else {
    for (const auto& f : canonical_factors()) out << ' ' << to_char(f.axis) << f.qubit;
  }
  return out.str();
}

PauliMasks pauli_masks(const PauliString& term, int num_qubits) {
  PauliMasks m;
  for (const auto& f : term.factors) {
    if (f.qubit < 0 || f.qubit >= num_qubits) {
      throw std::out_of_range("Pauli factor on qubit " + std::to_string(f.qubit) +
                              " outside register of " + std::to_string(num_qubits) +
                              " qubits");
    }
    const std::uint64_t bit = std::uint64_t{1} << (num_qubits - 1 - f.qubit);
    switch (f.axis) {
      case PauliAxis::kX:
        m.x_mask |= bit;
        break;
      case PauliAxis::kY:
        m.x_mask |= bit;
        m.z_mask |= bit;
        ++m.num_y;
        break;
      case PauliAxis::kZ:
        m.z_mask |= bit;
        break;
    }
  }
  return m;
}

PauliSum::PauliSum(int num_qubits, std::vector<PauliString> terms) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("unsupported qubit count " + std::to_string(num_qubits));
  }
  std::map<std::vector<PauliFactor>, std::size_t> position;
  for (auto& term : terms) {
    auto key = term.canonical_factors();
    for (const auto& f : key) {
      if (f.qubit >= num_qubits) {
        throw std::out_of_range("Pauli factor on qubit " + std::to_string(f.qubit) +
                                " outside register of " + std::to_string(num_qubits) +
                                " qubits");
      }
    }
    auto [it, inserted] = position.emplace(key, terms_.size());
    if (inserted) {
      terms_.push_back(PauliString{term.coefficient, std::move(key)});
    } else {
      terms_[it->second].coefficient += term.coefficient;
    }
  }
}

bool PauliSum::equivalent(const PauliSum& other, double tolerance) const {
  if (num_qubits_ != other.num_qubits_ || terms_.size() != other.terms_.size()) return false;
  std::map<std::vector<PauliFactor>, double> mine;
  for (const auto& t : terms_) mine[t.factors] = t.coefficient;
  for (const auto& t : other.terms_) {
    auto it = mine.find(t.factors);
    if (it == mine.end() || std::abs(it->second - t.coefficient) > tolerance) return false;
  }
  return true;
}

namespace {

Complex i_power(int k) {
  switch (k & 3) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

void check_register(const Statevector& state, const PauliSum& observable) {
  if (state.num_qubits() != observable.num_qubits()) {
    throw std::invalid_argument("observable acts on " +
                                std::to_string(observable.num_qubits()) +
                                " qubits but the state has " +
                                std::to_string(state.num_qubits()));
  }
}

}  // namespace

Complex pauli_expectation_complex(const Statevector& state, const PauliSum& observable) {
  check_register(state, observable);
  const auto psi = state.amplitudes();
  Complex total{0.0, 0.0};
  for (const auto& term : observable.terms()) {
    const PauliMasks m = pauli_masks(term, state.num_qubits());
    Complex acc{0.0, 0.0};
    for (std::uint64_t x = 0; x < psi.size(); ++x) {
      const Complex v = std::conj(psi[x ^ m.x_mask]) * psi[x];
      if (std::popcount(x & m.z_mask) & 1) {
        acc -= v;
      } else {
        acc += v;
      }
    }
    total += term.coefficient * i_power(m.num_y) * acc;
  }
  return total;
}

double pauli_expectation(const Statevector& state, const PauliSum& observable) {
  return pauli_expectation_complex(state, observable).real();
}

Statevector apply_pauli_sum(const Statevector& state, const PauliSum& observable) {
  check_register(state, observable);
  const auto psi = state.amplitudes();
  std::vector<Complex> out(psi.size(), Complex{0.0, 0.0});
  for (const auto& term : observable.terms()) {
    const PauliMasks m = pauli_masks(term, state.num_qubits());
    const Complex phase = term.coefficient * i_power(m.num_y);
    for (std::uint64_t x = 0; x < psi.size(); ++x) {
      const Complex v = phase * psi[x];
      if (std::popcount(x & m.z_mask) & 1) {
        out[x ^ m.x_mask] -= v;
      } else {
        out[x ^ m.x_mask] += v;
      }
    }
  }
  return Statevector(state.num_qubits(), std::move(out));
}

}  // namespace rlinit
