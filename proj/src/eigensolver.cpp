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

#include "rlinit/eigensolver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "rlinit/rng.hpp"

namespace rlinit {

std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e) {
  const std::size_t n = d.size();
  if (n == 0) return d;
  if (e.size() + 1 != n) {
    throw std::invalid_argument("tridiagonal matrix needs n - 1 off-diagonal entries");
  }
  e.push_back(0.0);
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr int kMaxIterations = 60;

  for (std::size_t l = 0; l < n; ++l) {
    int iterations = 0;
    std::size_t m = l;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iterations > kMaxIterations) {
        throw std::runtime_error("QL iteration did not converge");
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool deflated = false;
      for (std::size_t i = m; i-- > l;) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
  if (a.size() != n * n) throw std::invalid_argument("matrix is not n x n");
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  std::vector<double> v(n);
  std::vector<double> p(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double norm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) norm += at(i, k) * at(i, k);
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    const double alpha = at(k + 1, k) > 0.0 ? -norm : norm;

    // Householder vector v = x - alpha e1, normalized.
    double vnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      v[i] = at(i, k) - (i == k + 1 ? alpha : 0.0);
      vnorm += v[i] * v[i];
    }
    vnorm = std::sqrt(vnorm);
    if (vnorm == 0.0) continue;
    for (std::size_t i = k + 1; i < n; ++i) v[i] /= vnorm;

    // A <- H A H on the trailing block: A -= 2 (v q^T + q v^T) with
    // p = A v, q = p - (v^T p) v.
    double vp = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += at(i, j) * v[j];
      p[i] = s;
      vp += v[i] * s;
    }
    for (std::size_t i = k + 1; i < n; ++i) p[i] -= vp * v[i];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) -= 2.0 * (v[i] * p[j] + p[i] * v[j]);
      }
    }
    at(k + 1, k) = alpha;
    at(k, k + 1) = alpha;
    for (std::size_t i = k + 2; i < n; ++i) {
      at(i, k) = 0.0;
      at(k, i) = 0.0;
    }
  }

  std::vector<double> diagonal(n);
  std::vector<double> off(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) diagonal[i] = at(i, i);
  for (std::size_t i = 0; i + 1 < n; ++i) off[i] = at(i + 1, i);
  return tridiagonal_eigenvalues(std::move(diagonal), std::move(off));
}

namespace {

SpectrumBounds dense_bounds(const PauliSum& observable) {
  const int nq = observable.num_qubits();
  const std::size_t dim = std::size_t{1} << nq;
  const std::size_t n = 2 * dim;
  std::vector<double> m(n * n, 0.0);
  // Entry H[y][x] for y = x ^ x_mask is c * i^num_y * (-1)^popcount(x & z_mask).
  for (const auto& term : observable.terms()) {
    const PauliMasks masks = pauli_masks(term, nq);
    for (std::uint64_t x = 0; x < dim; ++x) {
      const std::uint64_t y = x ^ masks.x_mask;
      double value = term.coefficient;
      if (std::popcount(x & masks.z_mask) & 1) value = -value;
      double re = 0.0;
      double im = 0.0;
      switch (masks.num_y & 3) {
        case 0:
          re = value;
          break;
        case 1:
          im = value;
          break;
        case 2:
          re = -value;
          break;
        default:
          im = -value;
          break;
      }
      m[y * n + x] += re;
      m[(y + dim) * n + (x + dim)] += re;
      m[y * n + (x + dim)] -= im;
      m[(y + dim) * n + x] += im;
    }
  }
  const auto eig = symmetric_eigenvalues(std::move(m), n);
  return {eig.front(), eig.back()};
}

SpectrumBounds lanczos_bounds(const PauliSum& observable) {
  const int nq = observable.num_qubits();
  const std::size_t dim = std::size_t{1} << nq;
  const std::size_t max_steps = std::min<std::size_t>(dim, 300);

  Rng rng(0x5EED1A2C05ULL);
  std::vector<Complex> start(dim);
  double norm = 0.0;
  for (auto& a : start) {
    a = Complex{rng.normal(), rng.normal()};
    norm += std::norm(a);
  }
  norm = std::sqrt(norm);
  for (auto& a : start) a /= norm;

  std::vector<Statevector> basis;
  basis.emplace_back(nq, std::move(start));
  std::vector<double> alpha;
  std::vector<double> beta;
  SpectrumBounds previous{std::numeric_limits<double>::infinity(),
                          -std::numeric_limits<double>::infinity()};

  for (std::size_t j = 0; j < max_steps; ++j) {
    Statevector w = apply_pauli_sum(basis[j], observable);
    alpha.push_back(inner_product(basis[j], w).real());
    // Two passes of classical Gram-Schmidt against the whole basis.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        const Complex overlap = inner_product(b, w);
        auto wa = w.mutable_amplitudes();
        const auto ba = b.amplitudes();
        for (std::size_t i = 0; i < dim; ++i) wa[i] -= overlap * ba[i];
      }
    }
    const double b = std::sqrt(w.norm_squared());

    const bool exhausted = b < 1e-10 || j + 1 == max_steps;
    if (exhausted || (j + 1) % 10 == 0) {
      const auto eig = tridiagonal_eigenvalues(alpha, beta);
      const SpectrumBounds current{eig.front(), eig.back()};
      const double scale = std::max({1.0, std::abs(current.min), std::abs(current.max)});
      const bool converged = std::abs(current.min - previous.min) < 1e-13 * scale &&
                             std::abs(current.max - previous.max) < 1e-13 * scale;
      if (exhausted || converged) return current;
      previous = current;
    }
    beta.push_back(b);
    for (auto& a : w.mutable_amplitudes()) a /= b;
    basis.push_back(std::move(w));
  }
  throw std::runtime_error("Lanczos iteration exhausted without convergence");
}

}  // namespace

SpectrumBounds spectrum_bounds(const PauliSum& observable) {
  if (observable.num_qubits() > kMaxExactQubits) {
    throw std::invalid_argument("exact spectrum limited to " +
                                std::to_string(kMaxExactQubits) + " qubits, got " +
                                std::to_string(observable.num_qubits()));
  }
  if (observable.num_qubits() <= kMaxDenseQubits) return dense_bounds(observable);
  return lanczos_bounds(observable);
}

double exact_ground_energy(const PauliSum& observable, int num_qubits) {
  if (num_qubits > kMaxExactQubits) {
    throw std::invalid_argument("system of " + std::to_string(num_qubits) +
                                " qubits is too large for exact diagonalization (max " +
                                std::to_string(kMaxExactQubits) + ")");
  }
  if (num_qubits != observable.num_qubits()) {
    throw std::invalid_argument("observable is defined on " +
                                std::to_string(observable.num_qubits()) + " qubits, not " +
                                std::to_string(num_qubits));
  }
  return spectrum_bounds(observable).min;
}

}  // namespace rlinit
