#pragma once

#include <vector>

#include "chanent/complex_matrix.hpp"

namespace chanent {

// Eigenvalues sorted descending, matching unitary eigenvector columns.
struct HermitianSpectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

// Cyclic Jacobi diagonalisation for complex Hermitian matrices. Converges
// when the off-diagonal Frobenius mass drops below 1e-14 * ||A||_F.
// Throws NotHermitian when ||A - A†||_F > 1e-10 * (1 + ||A||_F).
HermitianSpectrum hermitian_eig(const ComplexMatrix& a);

double min_eig_hermitian(const ComplexMatrix& a);

}  // namespace chanent
