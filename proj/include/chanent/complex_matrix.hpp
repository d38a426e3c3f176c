#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "chanent/error.hpp"

namespace chanent {

using complexd = std::complex<double>;
using Vector = std::vector<complexd>;

// Dense complex matrix, row-major storage. The substrate for states, Kraus
// operators, Choi matrices and symplectic data throughout the library.
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, complexd(0.0, 0.0)) {}

  static ComplexMatrix identity(std::size_t n);
  // Matrix unit E_ij: single 1 at (i, j).
  static ComplexMatrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);
  static ComplexMatrix diagonal(const std::vector<double>& d);
  static ComplexMatrix from_rows(const std::vector<std::vector<complexd>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::size_t size() const { return data_.size(); }

  complexd& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const complexd& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<complexd>& data() const { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(complexd scalar);

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;

  complexd trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  Vector column(std::size_t j) const;
  void set_column(std::size_t j, const Vector& v);

 private:
  std::size_t rows_, cols_;
  std::vector<complexd> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(complexd scalar, ComplexMatrix a);

// Tensor product with first-factor-major index convention:
// C(a*rowsB + b, c*colsB + d) = A(a, c) * B(b, d).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// u v† as a rows(u) x rows(v) matrix.
ComplexMatrix outer(const Vector& u, const Vector& v);

Vector matvec(const ComplexMatrix& a, const Vector& x);

// Conjugate-linear in the first argument.
complexd inner(const Vector& a, const Vector& b);
double norm(const Vector& v);
Vector normalized(const Vector& v);

// ||A - A†||_F
double hermiticity_defect(const ComplexMatrix& a);

}  // namespace chanent
