#pragma once

#include <cstddef>
#include <vector>

#include "chanent/complex_matrix.hpp"
#include "chanent/hermitian_eig.hpp"

namespace chanent {

enum class TraceOut { First, Second };

// Partial trace of a square matrix on a dim_first * dim_second bipartite
// space, removing the named factor. Composite index is first-factor-major.
ComplexMatrix partial_trace(const ComplexMatrix& m, TraceOut side, std::size_t dim_first,
                            std::size_t dim_second);

// Singular values (descending) and the matching right singular vectors,
// computed by one-sided Jacobi so tiny singular values keep high relative
// accuracy. a * right_vectors has orthogonal columns with norms sigma.
struct SingularBasis {
  std::vector<double> sigma;
  ComplexMatrix right_vectors;
};
SingularBasis right_singular_basis(const ComplexMatrix& a);

// Relative rank threshold used everywhere a rank decision is needed:
// sigma > sigma_max * max(rows, cols) * 1e-12.
double default_rank_tol(const ComplexMatrix& a);

// Orthonormal basis of ker(a), as matrix columns. Each basis vector v
// satisfies ||a v|| <= rank_tol * sigma_max. Empty basis allowed.
ComplexMatrix nullspace(const ComplexMatrix& a, double rank_tol);
ComplexMatrix nullspace(const ComplexMatrix& a);

std::size_t numerical_rank(const ComplexMatrix& a, double rank_tol);
std::size_t numerical_rank(const ComplexMatrix& a);

// Orthonormal frame spanning the column space of a (rank decided by rank_tol).
ComplexMatrix column_space(const ComplexMatrix& a, double rank_tol);
ComplexMatrix column_space(const ComplexMatrix& a);

// Modified Gram-Schmidt orthonormalisation of the columns; requires full
// column rank.
ComplexMatrix gram_schmidt(const ComplexMatrix& a);

// Polar factor a (a†a)^{-1/2}: the closest column-orthonormal matrix.
ComplexMatrix polar_orthonormalize(const ComplexMatrix& a);

// Common eigenbasis of a pairwise-commuting Hermitian family, built by
// sequential eigenspace refinement. Eigenvalues within group_tol are treated
// as a single block at each refinement step.
ComplexMatrix simultaneous_eigenbasis(const std::vector<ComplexMatrix>& hermitians,
                                      std::size_t dim, double group_tol = 1e-8);

}  // namespace chanent
