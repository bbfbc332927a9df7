#pragma once

#include <complex>
#include <span>
#include <vector>

namespace qesd {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major, double precision.  Plain value
/// type: arithmetic is exact up to floating-point rounding, nothing is
/// normalized behind the caller's back.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : dim_(dim), entries_(std::size_t(dim) * dim) {}

  static ComplexMatrix identity(int dim);

  int dim() const { return dim_; }

  cplx& operator()(int r, int c) { return entries_[std::size_t(r) * dim_ + c]; }
  const cplx& operator()(int r, int c) const { return entries_[std::size_t(r) * dim_ + c]; }

  std::span<cplx> data() { return entries_; }
  std::span<const cplx> data() const { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx s);
  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, cplx s) { return lhs *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix rhs) { return rhs *= s; }

  /// Matrix product via the dispatched kernels.
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  /// this * other^H without forming the adjoint.
  ComplexMatrix mul_adjoint(const ComplexMatrix& other) const;

  ComplexMatrix adjoint() const;
  cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  /// max_{r,c} |a(r,c) - conj(a(c,r))|
  double hermiticity_defect() const;

  /// Kronecker product (this ⊗ other).
  ComplexMatrix kron(const ComplexMatrix& other) const;

 private:
  int dim_ = 0;
  std::vector<cplx> entries_;
};

}  // namespace qesd
