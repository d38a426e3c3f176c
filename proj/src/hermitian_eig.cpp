#include "chanent/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "chanent/error.hpp"

namespace chanent {

namespace {

double offdiag_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

HermitianSpectrum hermitian_eig(const ComplexMatrix& input) {
  if (!input.is_square()) fail(ErrorCode::DimensionMismatch, "eigendecomposition of non-square matrix");
  if (!input.all_finite()) fail(ErrorCode::InvalidState, "matrix has non-finite entries");
  const std::size_t n = input.rows();
  const double scale = input.frobenius_norm();
  if (hermiticity_defect(input) > 1e-10 * (1.0 + scale))
    fail(ErrorCode::NotHermitian, "matrix is not Hermitian within tolerance");

  // Work on the Hermitian part so the rotations see an exactly Hermitian
  // matrix regardless of rounding in the input.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = complexd(input(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const complexd v = 0.5 * (input(i, j) + std::conj(input(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double stop = 1e-14 * scale;
  const double skip = (n > 1) ? stop / (2.0 * static_cast<double>(n)) : 0.0;
  constexpr int kMaxSweeps = 100;

  for (int sweep = 0; sweep < kMaxSweeps && n > 1; ++sweep) {
    if (offdiag_norm(a) <= stop) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const complexd apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= skip) continue;

        const complexd phase = apq / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        double t;
        if (tau >= 0.0)
          t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
        else
          t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const complexd sp = s * phase;        // s e^{i phi}
        const complexd spc = std::conj(sp);   // s e^{-i phi}

        // Rows p, q of U† A.
        for (std::size_t k = 0; k < n; ++k) {
          const complexd apk = a(p, k);
          const complexd aqk = a(q, k);
          a(p, k) = c * apk - sp * aqk;
          a(q, k) = spc * apk + c * aqk;
        }
        // Columns p, q of (U† A) U, and accumulate V U.
        for (std::size_t k = 0; k < n; ++k) {
          const complexd akp = a(k, p);
          const complexd akq = a(k, q);
          a(k, p) = c * akp - spc * akq;
          a(k, q) = sp * akp + c * akq;
          const complexd vkp = v(k, p);
          const complexd vkq = v(k, q);
          v(k, p) = c * vkp - spc * vkq;
          v(k, q) = sp * vkp + c * vkq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = complexd(a(p, p).real(), 0.0);
        a(q, q) = complexd(a(q, q).real(), 0.0);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  HermitianSpectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

double min_eig_hermitian(const ComplexMatrix& a) {
  const HermitianSpectrum s = hermitian_eig(a);
  return s.eigenvalues.empty() ? 0.0 : s.eigenvalues.back();
}

}  // namespace chanent
