#pragma once

// Test-only oracles, kept independent of the library's matrix-free kernels:
// the dense Hamiltonian here is assembled from explicit 2x2 Pauli matrix
// elements site by site, not from the production alignment-case rules.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "ggm/hamiltonian.hpp"

namespace oracle {

using Complex = std::complex<double>;

inline Complex pauli_element(char axis, int row, int col) {
  // <row|sigma|col> with |0> = up.
  switch (axis) {
    case 'x': return (row != col) ? Complex(1, 0) : Complex(0, 0);
    case 'y':
      if (row == col) return Complex(0, 0);
      return row == 0 ? Complex(0, -1) : Complex(0, 1);
    case 'z': return (row != col) ? Complex(0, 0) : (row == 0 ? Complex(1, 0) : Complex(-1, 0));
    default: return Complex(0, 0);
  }
}

// Sum over bonds of w (jx XX + jy YY + delta ZZ), matrix built elementwise from
// single-site Pauli entries. Bit i of the basis index is the state of site i.
inline Eigen::MatrixXcd dense_hamiltonian(const ggm::ModelParams& params) {
  const int n = params.n_sites;
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int d = ggm::chord_distance(i, j, n);
      double w = 0.0;
      if (params.nn_only) {
        if (d != 1) continue;
        w = 1.0;
      } else {
        w = std::pow(static_cast<double>(d), -params.alpha);
      }
      const std::uint64_t bi = std::uint64_t{1} << i;
      const std::uint64_t bj = std::uint64_t{1} << j;
      for (std::size_t col = 0; col < dim; ++col) {
        const int ci = (col & bi) ? 1 : 0;
        const int cj = (col & bj) ? 1 : 0;
        for (int ri = 0; ri < 2; ++ri) {
          for (int rj = 0; rj < 2; ++rj) {
            const std::size_t row =
                (col & ~(bi | bj)) | (ri ? bi : 0u) | (rj ? bj : 0u);
            const Complex element =
                params.jx * pauli_element('x', ri, ci) * pauli_element('x', rj, cj) +
                params.jy * pauli_element('y', ri, ci) * pauli_element('y', rj, cj) +
                params.delta * pauli_element('z', ri, ci) * pauli_element('z', rj, cj);
            h(row, col) += w * element;
          }
        }
      }
    }
  }
  return h;
}

}  // namespace oracle
