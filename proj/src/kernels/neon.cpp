#include <arm_neon.h>

#include "qesd/kernels.hpp"

// NEON variants (aarch64 baseline).  One complex double per float64x2_t.

namespace qesd::kernels {
namespace {

void mat_mul_neon(const cplx* a, const cplx* b, cplx* c, int n) {
  const double* bd = reinterpret_cast<const double*>(b);
  double* cd = reinterpret_cast<double*>(c);
  const float64x2_t sign = {-1.0, 1.0};
  for (int i = 0; i < n; ++i) {
    double* ci = cd + std::size_t(i) * 2 * n;
    for (int j = 0; j < 2 * n; ++j) ci[j] = 0.0;
    const cplx* ai = a + std::size_t(i) * n;
    for (int k = 0; k < n; ++k) {
      const double ar = ai[k].real(), aim = ai[k].imag();
      const double* bk = bd + std::size_t(k) * 2 * n;
      for (int j = 0; j < n; ++j) {
        float64x2_t vb = vld1q_f64(bk + 2 * j);                    // [br, bi]
        float64x2_t rev = vextq_f64(vb, vb, 1);                    // [bi, br]
        float64x2_t nb = vmulq_f64(rev, sign);                     // [-bi, br]
        float64x2_t acc = vld1q_f64(ci + 2 * j);
        acc = vfmaq_n_f64(acc, vb, ar);
        acc = vfmaq_n_f64(acc, nb, aim);
        vst1q_f64(ci + 2 * j, acc);
      }
    }
  }
}

void mat_mul_adjB_neon(const cplx* a, const cplx* b, cplx* c, int n) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  const float64x2_t sign = {1.0, -1.0};
  for (int i = 0; i < n; ++i) {
    const double* ai = ad + std::size_t(i) * 2 * n;
    for (int j = 0; j < n; ++j) {
      const double* bj = bd + std::size_t(j) * 2 * n;
      float64x2_t acc = vdupq_n_f64(0.0);
      for (int k = 0; k < n; ++k) {
        // a * conj(b): re = ar br + ai bi, im = ai br - ar bi
        float64x2_t va = vld1q_f64(ai + 2 * k);                    // [ar, ai]
        float64x2_t vb = vld1q_f64(bj + 2 * k);                    // [br, bi]
        float64x2_t cb = vmulq_f64(vb, sign);                      // [br, -bi]
        float64x2_t rev = vextq_f64(vb, vb, 1);                    // [bi, br]
        acc = vfmaq_n_f64(acc, cb, vgetq_lane_f64(va, 0));         // + ar [br, -bi]
        acc = vfmaq_n_f64(acc, rev, vgetq_lane_f64(va, 1));        // + ai [bi, br]
      }
      vst1q_f64(reinterpret_cast<double*>(c + std::size_t(i) * n + j), acc);
    }
  }
}

void axpy_neon(double s, const double* k, const double* x, double* y, int len) {
  int i = 0;
  for (; i + 2 <= len; i += 2)
    vst1q_f64(y + i, vfmaq_n_f64(vld1q_f64(x + i), vld1q_f64(k + i), s));
  for (; i < len; ++i) y[i] = x[i] + s * k[i];
}

void combine4_neon(const double* x, double s1, const double* k1, double s2,
                   const double* k2, double s3, const double* k3, double s4,
                   const double* k4, double* y, int len) {
  int i = 0;
  for (; i + 2 <= len; i += 2) {
    float64x2_t acc = vld1q_f64(x + i);
    acc = vfmaq_n_f64(acc, vld1q_f64(k1 + i), s1);
    acc = vfmaq_n_f64(acc, vld1q_f64(k2 + i), s2);
    acc = vfmaq_n_f64(acc, vld1q_f64(k3 + i), s3);
    acc = vfmaq_n_f64(acc, vld1q_f64(k4 + i), s4);
    vst1q_f64(y + i, acc);
  }
  for (; i < len; ++i)
    y[i] = x[i] + s1 * k1[i] + s2 * k2[i] + s3 * k3[i] + s4 * k4[i];
}

}  // namespace

const Ops* neon_ops() {
  static const Ops ops{"neon", mat_mul_neon, mat_mul_adjB_neon, axpy_neon,
                       combine4_neon};
  return &ops;
}

}  // namespace qesd::kernels
