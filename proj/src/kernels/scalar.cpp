#include "qesd/kernels.hpp"

namespace qesd::kernels {
namespace {

void mat_mul_scalar(const cplx* a, const cplx* b, cplx* c, int n) {
  for (int i = 0; i < n; ++i) {
    cplx* ci = c + std::size_t(i) * n;
    for (int j = 0; j < n; ++j) ci[j] = 0.0;
    const cplx* ai = a + std::size_t(i) * n;
    for (int k = 0; k < n; ++k) {
      const cplx aik = ai[k];
      const cplx* bk = b + std::size_t(k) * n;
      for (int j = 0; j < n; ++j) ci[j] += aik * bk[j];
    }
  }
}

void mat_mul_adjB_scalar(const cplx* a, const cplx* b, cplx* c, int n) {
  for (int i = 0; i < n; ++i) {
    const cplx* ai = a + std::size_t(i) * n;
    cplx* ci = c + std::size_t(i) * n;
    for (int j = 0; j < n; ++j) {
      const cplx* bj = b + std::size_t(j) * n;
      cplx acc = 0.0;
      for (int k = 0; k < n; ++k) acc += ai[k] * std::conj(bj[k]);
      ci[j] = acc;
    }
  }
}

void axpy_scalar(double s, const double* k, const double* x, double* y, int len) {
  for (int i = 0; i < len; ++i) y[i] = x[i] + s * k[i];
}

void combine4_scalar(const double* x, double s1, const double* k1, double s2,
                     const double* k2, double s3, const double* k3, double s4,
                     const double* k4, double* y, int len) {
  for (int i = 0; i < len; ++i)
    y[i] = x[i] + s1 * k1[i] + s2 * k2[i] + s3 * k3[i] + s4 * k4[i];
}

}  // namespace

const Ops& scalar() {
  static const Ops ops{"scalar", mat_mul_scalar, mat_mul_adjB_scalar, axpy_scalar,
                       combine4_scalar};
  return ops;
}

}  // namespace qesd::kernels
