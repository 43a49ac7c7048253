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

#include "rlinit/hamiltonians.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include "rlinit/eigensolver.hpp"

namespace rlinit {

PauliSum build_heisenberg(int num_qubits) {
  if (num_qubits < 2) {
    throw std::invalid_argument("Heisenberg chain needs at least 2 qubits, got " +
                                std::to_string(num_qubits));
  }
  std::vector<PauliString> terms;
  terms.reserve(3 * (num_qubits - 1));
  for (int i = 0; i + 1 < num_qubits; ++i) {
    for (PauliAxis axis : {PauliAxis::kX, PauliAxis::kY, PauliAxis::kZ}) {
      terms.push_back(PauliString{1.0, {{i, axis}, {i + 1, axis}}});
    }
  }
  return PauliSum(num_qubits, std::move(terms));
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

template <typename T>
bool parse_number(std::string_view token, T& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

PauliSum parse_pauli_sum(std::string_view text) {
  int num_qubits = -1;
  std::vector<PauliString> terms;
  std::size_t line_number = 0;

  while (!text.empty()) {
    ++line_number;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "qubits") {
      if (num_qubits >= 0) throw PauliParseError(line_number, "duplicate qubits header");
      if (tokens.size() != 2 || !parse_number(tokens[1], num_qubits) || num_qubits < 1 ||
          num_qubits > kMaxQubits) {
        throw PauliParseError(line_number, "expected 'qubits <N>' with 1 <= N <= " +
                                               std::to_string(kMaxQubits));
      }
      continue;
    }
    if (num_qubits < 0) {
      throw PauliParseError(line_number, "term before the 'qubits' header");
    }

    PauliString term;
    if (!parse_number(tokens[0], term.coefficient) || !std::isfinite(term.coefficient)) {
      throw PauliParseError(line_number,
                            "invalid coefficient '" + std::string(tokens[0]) + "'");
    }
    if (tokens.size() < 2) throw PauliParseError(line_number, "term has no factors");
    if (tokens.size() == 2 && tokens[1] == "I") {
      terms.push_back(std::move(term));
      continue;
    }
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      const std::string_view tok = tokens[k];
      PauliFactor factor;
      switch (tok.empty() ? '\0' : tok[0]) {
        case 'X':
          factor.axis = PauliAxis::kX;
          break;
        case 'Y':
          factor.axis = PauliAxis::kY;
          break;
        case 'Z':
          factor.axis = PauliAxis::kZ;
          break;
        case 'I':
          throw PauliParseError(line_number, "'I' must be the only factor of a term");
        default:
          throw PauliParseError(line_number, "invalid factor '" + std::string(tok) + "'");
      }
      if (tok.size() < 2 || tok[1] == '+' || !parse_number(tok.substr(1), factor.qubit) ||
          factor.qubit < 0) {
        throw PauliParseError(line_number, "invalid qubit index in '" + std::string(tok) + "'");
      }
      if (factor.qubit >= num_qubits) {
        throw PauliParseError(line_number, "qubit index " + std::to_string(factor.qubit) +
                                               " >= declared " + std::to_string(num_qubits));
      }
      for (const auto& f : term.factors) {
        if (f.qubit == factor.qubit) {
          throw PauliParseError(line_number, "qubit " + std::to_string(factor.qubit) +
                                                 " repeated within one term");
        }
      }
      term.factors.push_back(factor);
    }
    terms.push_back(std::move(term));
  }
  if (num_qubits < 0) throw PauliParseError(line_number, "missing 'qubits' header");
  return PauliSum(num_qubits, std::move(terms));
}

PauliSum load_pauli_sum(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open Hamiltonian file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_pauli_sum(buffer.str());
  } catch (const PauliParseError& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

std::string serialize_pauli_sum(const PauliSum& sum) {
  std::string out = "qubits " + std::to_string(sum.num_qubits()) + "\n";
  for (const auto& term : sum.terms()) {
    out += term.to_string();
    out += '\n';
  }
  return out;
}

std::string to_string(NormMode mode) {
  return mode == NormMode::kCoeffL1 ? "coeff-l1" : "spectral";
}

HamiltonianNorm hamiltonian_norm(const PauliSum& h, NormMode mode) {
  if (mode == NormMode::kCoeffL1) {
    double total = 0.0;
    for (const auto& t : h.terms()) total += std::abs(t.coefficient);
    return {mode, total};
  }
  const SpectrumBounds b = spectrum_bounds(h);
  return {mode, std::max(std::abs(b.min), std::abs(b.max))};
}

}  // namespace rlinit
