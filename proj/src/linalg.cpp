#include "chanent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "chanent/error.hpp"

namespace chanent {

ComplexMatrix partial_trace(const ComplexMatrix& m, TraceOut side, std::size_t dim_first,
                            std::size_t dim_second) {
  const std::size_t total = dim_first * dim_second;
  if (!m.is_square() || m.rows() != total)
    fail(ErrorCode::DimensionMismatch, "partial trace dims do not factor the matrix");
  if (side == TraceOut::Second) {
    ComplexMatrix r(dim_first, dim_first);
    for (std::size_t a = 0; a < dim_first; ++a)
      for (std::size_t c = 0; c < dim_first; ++c) {
        complexd s = 0.0;
        for (std::size_t b = 0; b < dim_second; ++b)
          s += m(a * dim_second + b, c * dim_second + b);
        r(a, c) = s;
      }
    return r;
  }
  ComplexMatrix r(dim_second, dim_second);
  for (std::size_t b = 0; b < dim_second; ++b)
    for (std::size_t d = 0; d < dim_second; ++d) {
      complexd s = 0.0;
      for (std::size_t a = 0; a < dim_first; ++a) s += m(a * dim_second + b, a * dim_second + d);
      r(b, d) = s;
    }
  return r;
}

SingularBasis right_singular_basis(const ComplexMatrix& a) {
  const std::size_t n = a.cols();
  ComplexMatrix b = a;
  ComplexMatrix v = ComplexMatrix::identity(n);
  constexpr int kMaxSweeps = 60;
  constexpr double kOrthTol = 1e-14;

  for (int sweep = 0; sweep < kMaxSweeps && n > 1; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double gpp = 0.0, gqq = 0.0;
        complexd gpq = 0.0;
        for (std::size_t i = 0; i < b.rows(); ++i) {
          gpp += std::norm(b(i, p));
          gqq += std::norm(b(i, q));
          gpq += std::conj(b(i, p)) * b(i, q);
        }
        const double r = std::abs(gpq);
        if (r <= kOrthTol * std::sqrt(gpp * gqq) || r == 0.0) continue;
        rotated = true;

        // Jacobi rotation diagonalising the 2x2 Gram block [[gpp, gpq], [gpq*, gqq]].
        const complexd phase = gpq / r;
        const double tau = (gqq - gpp) / (2.0 * r);
        double t;
        if (tau >= 0.0)
          t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
        else
          t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const complexd sp = s * phase;
        const complexd spc = std::conj(sp);

        for (std::size_t i = 0; i < b.rows(); ++i) {
          const complexd bip = b(i, p);
          const complexd biq = b(i, q);
          b(i, p) = c * bip - spc * biq;
          b(i, q) = sp * bip + c * biq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const complexd vip = v(i, p);
          const complexd viq = v(i, q);
          v(i, p) = c * vip - spc * viq;
          v(i, q) = sp * vip + c * viq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < b.rows(); ++i) s += std::norm(b(i, j));
    sigma[j] = std::sqrt(s);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&sigma](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

  SingularBasis out;
  out.sigma.resize(n);
  out.right_vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.sigma[k] = sigma[order[k]];
    for (std::size_t i = 0; i < n; ++i) out.right_vectors(i, k) = v(i, order[k]);
  }
  return out;
}

double default_rank_tol(const ComplexMatrix& a) {
  return static_cast<double>(std::max(a.rows(), a.cols())) * 1e-12;
}

ComplexMatrix nullspace(const ComplexMatrix& a, double rank_tol) {
  if (rank_tol <= 0.0) fail(ErrorCode::InvalidParams, "rank_tol must be positive");
  const SingularBasis sb = right_singular_basis(a);
  const double smax = sb.sigma.empty() ? 0.0 : sb.sigma.front();
  const double cut = rank_tol * smax;
  std::size_t rank = 0;
  while (rank < sb.sigma.size() && sb.sigma[rank] > cut) ++rank;
  const std::size_t dim = a.cols() - rank;
  ComplexMatrix basis(a.cols(), dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t i = 0; i < a.cols(); ++i) basis(i, k) = sb.right_vectors(i, rank + k);
  return basis;
}

ComplexMatrix nullspace(const ComplexMatrix& a) { return nullspace(a, default_rank_tol(a)); }

std::size_t numerical_rank(const ComplexMatrix& a, double rank_tol) {
  return a.cols() - nullspace(a, rank_tol).cols();
}

std::size_t numerical_rank(const ComplexMatrix& a) {
  return numerical_rank(a, default_rank_tol(a));
}

ComplexMatrix column_space(const ComplexMatrix& a, double rank_tol) {
  // One-sided Jacobi leaves a * V with orthogonal columns; normalising the
  // columns above the rank cut gives an orthonormal basis of ran(a).
  const SingularBasis sb = right_singular_basis(a);
  const double smax = sb.sigma.empty() ? 0.0 : sb.sigma.front();
  const double cut = rank_tol * smax;
  std::size_t rank = 0;
  while (rank < sb.sigma.size() && sb.sigma[rank] > cut) ++rank;
  ComplexMatrix frame(a.rows(), rank);
  for (std::size_t k = 0; k < rank; ++k) {
    Vector col = matvec(a, sb.right_vectors.column(k));
    for (std::size_t i = 0; i < a.rows(); ++i) frame(i, k) = col[i] / sb.sigma[k];
  }
  return frame;
}

ComplexMatrix column_space(const ComplexMatrix& a) {
  return column_space(a, default_rank_tol(a));
}

ComplexMatrix gram_schmidt(const ComplexMatrix& a) {
  ComplexMatrix q = a;
  for (std::size_t j = 0; j < q.cols(); ++j) {
    Vector col = q.column(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        const Vector prev = q.column(k);
        const complexd proj = inner(prev, col);
        for (std::size_t i = 0; i < col.size(); ++i) col[i] -= proj * prev[i];
      }
    }
    const double n = norm(col);
    if (n < 1e-12) fail(ErrorCode::RankMismatch, "column-rank-deficient input to Gram-Schmidt");
    for (auto& z : col) z /= n;
    q.set_column(j, col);
  }
  return q;
}

ComplexMatrix polar_orthonormalize(const ComplexMatrix& a) {
  const ComplexMatrix gram = a.adjoint() * a;
  const HermitianSpectrum s = hermitian_eig(gram);
  const double lmax = s.eigenvalues.empty() ? 0.0 : s.eigenvalues.front();
  ComplexMatrix inv_sqrt(a.cols(), a.cols());
  bool degenerate = false;
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const double l = s.eigenvalues[k];
    if (l <= lmax * 1e-28 || l <= 0.0) {
      degenerate = true;
      continue;
    }
    const double w = 1.0 / std::sqrt(l);
    const Vector uk = s.eigenvectors.column(k);
    for (std::size_t i = 0; i < a.cols(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        inv_sqrt(i, j) += w * uk[i] * std::conj(uk[j]);
  }
  ComplexMatrix q = a * inv_sqrt;
  if (degenerate) q = gram_schmidt(q);  // rank-deficient input: repair the frame
  return q;
}

ComplexMatrix simultaneous_eigenbasis(const std::vector<ComplexMatrix>& hermitians,
                                      std::size_t dim, double group_tol) {
  ComplexMatrix basis = ComplexMatrix::identity(dim);
  std::vector<std::pair<std::size_t, std::size_t>> blocks{{0, dim}};  // [begin, end)

  for (const ComplexMatrix& h : hermitians) {
    if (h.rows() != dim || h.cols() != dim)
      fail(ErrorCode::DimensionMismatch, "simultaneous eigenbasis dimension mismatch");
    std::vector<std::pair<std::size_t, std::size_t>> next_blocks;
    for (const auto& [begin, end] : blocks) {
      const std::size_t b = end - begin;
      if (b == 1) {
        next_blocks.emplace_back(begin, end);
        continue;
      }
      // Diagonalise h restricted to the block and rotate the basis columns.
      ComplexMatrix hb(b, b);
      for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j) {
          complexd s = 0.0;
          for (std::size_t x = 0; x < dim; ++x)
            for (std::size_t y = 0; y < dim; ++y)
              s += std::conj(basis(x, begin + i)) * h(x, y) * basis(y, begin + j);
          hb(i, j) = s;
        }
      const HermitianSpectrum spec = hermitian_eig(hb);
      ComplexMatrix rotated(dim, b);
      for (std::size_t k = 0; k < b; ++k) {
        Vector col(dim, complexd(0.0, 0.0));
        for (std::size_t i = 0; i < b; ++i) {
          const complexd w = spec.eigenvectors(i, k);
          for (std::size_t x = 0; x < dim; ++x) col[x] += w * basis(x, begin + i);
        }
        rotated.set_column(k, col);
      }
      for (std::size_t k = 0; k < b; ++k)
        for (std::size_t x = 0; x < dim; ++x) basis(x, begin + k) = rotated(x, k);

      // Split by eigenvalue groups.
      std::size_t start = 0;
      for (std::size_t k = 1; k <= b; ++k) {
        if (k == b || std::abs(spec.eigenvalues[k] - spec.eigenvalues[k - 1]) > group_tol) {
          next_blocks.emplace_back(begin + start, begin + k);
          start = k;
        }
      }
    }
    blocks = std::move(next_blocks);
    bool all_resolved = true;
    for (const auto& [begin, end] : blocks)
      if (end - begin > 1) all_resolved = false;
    if (all_resolved) break;
  }
  return basis;
}

}  // namespace chanent
