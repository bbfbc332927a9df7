#include "qesd/complex_matrix.hpp"

#include <cmath>

#include "qesd/kernels.hpp"

namespace qesd {

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.dim_);
  kernels::active().mat_mul(a.entries_.data(), b.entries_.data(), c.entries_.data(), a.dim_);
  return c;
}

ComplexMatrix ComplexMatrix::mul_adjoint(const ComplexMatrix& other) const {
  ComplexMatrix c(dim_);
  kernels::active().mat_mul_adjB(entries_.data(), other.entries_.data(), c.entries_.data(),
                                 dim_);
  return c;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& e : entries_) s += std::norm(e);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

double ComplexMatrix::hermiticity_defect() const {
  double d = 0.0;
  for (int r = 0; r < dim_; ++r)
    for (int c = r; c < dim_; ++c)
      d = std::max(d, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return d;
}

ComplexMatrix ComplexMatrix::kron(const ComplexMatrix& other) const {
  const int da = dim_, db = other.dim_;
  ComplexMatrix m(da * db);
  for (int ra = 0; ra < da; ++ra)
    for (int ca = 0; ca < da; ++ca) {
      const cplx v = (*this)(ra, ca);
      if (v == cplx(0.0)) continue;
      for (int rb = 0; rb < db; ++rb)
        for (int cb = 0; cb < db; ++cb)
          m(ra * db + rb, ca * db + cb) = v * other(rb, cb);
    }
  return m;
}

}  // namespace qesd
