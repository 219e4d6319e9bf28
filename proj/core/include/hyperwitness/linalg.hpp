#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hyperwitness::linalg {

// Eigenvalues of an n x n Hermitian matrix (row-major), ascending.
// Embeds A = X + iY into the 2n x 2n real symmetric [[X, -Y], [Y, X]],
// runs cyclic Jacobi sweeps to off-diagonal norm 1e-12, and collapses the
// doubled spectrum.
std::vector<double> hermitian_eigenvalues(const std::vector<std::complex<double>>& matrix,
                                          std::size_t n);

// Cyclic Jacobi on a dense real symmetric matrix (row-major, modified in
// place); returns eigenvalues ascending.
std::vector<double> jacobi_symmetric_eigenvalues(std::vector<double>& matrix, std::size_t n);

}  // namespace hyperwitness::linalg
