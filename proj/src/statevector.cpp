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

#include "rlinit/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace rlinit {

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kRX:
      return "RX";
    case GateKind::kRY:
      return "RY";
    case GateKind::kCZ:
      return "CZ";
    case GateKind::kGivensSingle:
      return "GIVENS_SINGLE";
    case GateKind::kGivensDouble:
      return "GIVENS_DOUBLE";
  }
  return "?";
}

std::size_t gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::kRX:
    case GateKind::kRY:
      return 1;
    case GateKind::kCZ:
    case GateKind::kGivensSingle:
      return 2;
    case GateKind::kGivensDouble:
      return 4;
  }
  return 0;
}

bool is_parameterized(GateKind kind) { return kind != GateKind::kCZ; }

void GateDescriptor::validate(int num_qubits) const {
  if (targets.size() != gate_arity(kind)) {
    throw std::invalid_argument(to_string(kind) + " expects " +
                                std::to_string(gate_arity(kind)) + " targets, got " +
                                std::to_string(targets.size()));
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= num_qubits) {
      throw std::out_of_range(to_string(kind) + " target " + std::to_string(targets[i]) +
                              " outside register of " + std::to_string(num_qubits) +
                              " qubits");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (targets[i] == targets[j]) {
        throw std::invalid_argument(to_string(kind) + " has repeated target " +
                                    std::to_string(targets[i]));
      }
    }
  }
  if (param_slot.has_value() != is_parameterized(kind)) {
    throw std::invalid_argument(to_string(kind) + (is_parameterized(kind)
                                                       ? " requires a parameter slot"
                                                       : " takes no parameter slot"));
  }
}

Statevector::Statevector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  if (num_qubits < 0 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("unsupported qubit count " + std::to_string(num_qubits));
  }
  if (amplitudes_.size() != (std::size_t{1} << num_qubits)) {
    throw std::invalid_argument("amplitude count " + std::to_string(amplitudes_.size()) +
                                " does not match 2^" + std::to_string(num_qubits));
  }
}

double Statevector::norm_squared() const {
  double total = 0.0;
  for (const Complex& a : amplitudes_) total += std::norm(a);
  return total;
}

Statevector prepare_basis_state(int num_qubits, std::uint64_t basis_index) {
  if (num_qubits < 0 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("unsupported qubit count " + std::to_string(num_qubits));
  }
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (basis_index >= dim) {
    throw std::out_of_range("basis index " + std::to_string(basis_index) +
                            " outside 2^" + std::to_string(num_qubits));
  }
  std::vector<Complex> amps(dim, Complex{0.0, 0.0});
  amps[basis_index] = Complex{1.0, 0.0};
  return Statevector(num_qubits, std::move(amps));
}

Complex inner_product(const Statevector& a, const Statevector& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("inner product of states with different dimensions");
  }
  Complex total{0.0, 0.0};
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) total += std::conj(x[i]) * y[i];
  return total;
}

namespace {

// Applies the real rotation [[c, -s], [s, c]] to every (lo, hi) pair, where
// lo = base | lo_bits and hi = base | hi_bits for each base with all `clear`
// bits unset.
void rotate_pairs(std::span<Complex> amps, std::uint64_t clear, std::uint64_t lo_bits,
                  std::uint64_t hi_bits, double c, double s) {
  for (std::uint64_t base = 0; base < amps.size(); ++base) {
    if (base & clear) continue;
    Complex& lo = amps[base | lo_bits];
    Complex& hi = amps[base | hi_bits];
    const Complex a = lo;
    const Complex b = hi;
    lo = c * a - s * b;
    hi = s * a + c * b;
  }
}

// Same pairing, applying the generator (Y restricted to the pair) / 2.
void generator_pairs(std::span<Complex> amps, std::uint64_t clear, std::uint64_t lo_bits,
                     std::uint64_t hi_bits) {
  const Complex i_half{0.0, 0.5};
  for (std::uint64_t base = 0; base < amps.size(); ++base) {
    if (base & clear) continue;
    Complex& lo = amps[base | lo_bits];
    Complex& hi = amps[base | hi_bits];
    const Complex a = lo;
    const Complex b = hi;
    lo = -i_half * b;
    hi = i_half * a;
  }
}

void check_angle(const GateDescriptor& gate, const std::optional<double>& angle) {
  if (is_parameterized(gate.kind) && !angle) {
    throw std::invalid_argument(to_string(gate.kind) + " requires an angle");
  }
  if (!is_parameterized(gate.kind) && angle) {
    throw std::invalid_argument(to_string(gate.kind) + " takes no angle");
  }
}

}  // namespace

void apply_gate_inplace(Statevector& state, const GateDescriptor& gate,
                        std::optional<double> angle) {
  check_angle(gate, angle);
  const int n = state.num_qubits();
  if (gate.targets.size() != gate_arity(gate.kind)) {
    throw std::invalid_argument(to_string(gate.kind) + " has wrong target count");
  }
  for (int t : gate.targets) {
    if (t < 0 || t >= n) {
      throw std::out_of_range(to_string(gate.kind) + " target " + std::to_string(t) +
                              " outside register of " + std::to_string(n) + " qubits");
    }
  }
  auto amps = state.mutable_amplitudes();
  const auto& t = gate.targets;

  switch (gate.kind) {
    case GateKind::kRX: {
      const std::uint64_t m = state.qubit_mask(t[0]);
      const double c = std::cos(*angle / 2.0);
      const Complex mis{0.0, -std::sin(*angle / 2.0)};
      for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (i & m) continue;
        const Complex a0 = amps[i];
        const Complex a1 = amps[i | m];
        amps[i] = c * a0 + mis * a1;
        amps[i | m] = mis * a0 + c * a1;
      }
      break;
    }
    case GateKind::kRY: {
      const std::uint64_t m = state.qubit_mask(t[0]);
      rotate_pairs(amps, m, 0, m, std::cos(*angle / 2.0), std::sin(*angle / 2.0));
      break;
    }
    case GateKind::kCZ: {
      if (t[0] == t[1]) throw std::invalid_argument("CZ targets must differ");
      const std::uint64_t both = state.qubit_mask(t[0]) | state.qubit_mask(t[1]);
      for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & both) == both) amps[i] = -amps[i];
      }
      break;
    }
    case GateKind::kGivensSingle: {
      const std::uint64_t m0 = state.qubit_mask(t[0]);
      const std::uint64_t m1 = state.qubit_mask(t[1]);
      if (m0 == m1) throw std::invalid_argument("GIVENS_SINGLE targets must differ");
      // |01> has the second target set; |10> the first.
      rotate_pairs(amps, m0 | m1, m1, m0, std::cos(*angle / 2.0), std::sin(*angle / 2.0));
      break;
    }
    case GateKind::kGivensDouble: {
      std::uint64_t clear = 0;
      for (int q : t) clear |= state.qubit_mask(q);
      if (std::popcount(clear) != 4) {
        throw std::invalid_argument("GIVENS_DOUBLE targets must be distinct");
      }
      const std::uint64_t low_pair = state.qubit_mask(t[2]) | state.qubit_mask(t[3]);
      const std::uint64_t high_pair = state.qubit_mask(t[0]) | state.qubit_mask(t[1]);
      rotate_pairs(amps, clear, low_pair, high_pair, std::cos(*angle / 2.0),
                   std::sin(*angle / 2.0));
      break;
    }
  }
}

Statevector apply_gate(Statevector state, const GateDescriptor& gate,
                       std::optional<double> angle) {
  apply_gate_inplace(state, gate, angle);
  return state;
}

void apply_generator_inplace(Statevector& state, const GateDescriptor& gate) {
  if (!is_parameterized(gate.kind)) {
    throw std::invalid_argument(to_string(gate.kind) + " has no generator");
  }
  auto amps = state.mutable_amplitudes();
  const auto& t = gate.targets;
  switch (gate.kind) {
    case GateKind::kRX: {
      const std::uint64_t m = state.qubit_mask(t[0]);
      for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (i & m) continue;
        std::swap(amps[i], amps[i | m]);
        amps[i] *= 0.5;
        amps[i | m] *= 0.5;
      }
      break;
    }
    case GateKind::kRY: {
      const std::uint64_t m = state.qubit_mask(t[0]);
      generator_pairs(amps, m, 0, m);
      break;
    }
    case GateKind::kGivensSingle:
    case GateKind::kGivensDouble: {
      std::uint64_t clear = 0;
      for (int q : t) clear |= state.qubit_mask(q);
      std::uint64_t lo_bits = 0;
      std::uint64_t hi_bits = 0;
      if (gate.kind == GateKind::kGivensSingle) {
        lo_bits = state.qubit_mask(t[1]);
        hi_bits = state.qubit_mask(t[0]);
      } else {
        lo_bits = state.qubit_mask(t[2]) | state.qubit_mask(t[3]);
        hi_bits = state.qubit_mask(t[0]) | state.qubit_mask(t[1]);
      }
      // The generator vanishes outside the rotated pair, so zero everything
      // that is not a pair member before rotating the pairs in place.
      for (std::uint64_t i = 0; i < amps.size(); ++i) {
        const std::uint64_t local = i & clear;
        if (local != lo_bits && local != hi_bits) amps[i] = Complex{0.0, 0.0};
      }
      generator_pairs(amps, clear, lo_bits, hi_bits);
      break;
    }
    case GateKind::kCZ:
      break;
  }
}

}  // namespace rlinit
