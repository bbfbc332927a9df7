#include <immintrin.h>

#include "qesd/kernels.hpp"

// AVX2+FMA variants.  Complex doubles are interleaved (re, im), two per
// __m256d lane pair.  Compiled only into this TU (-mavx2 -mfma); the
// dispatcher guards execution with a runtime CPU check.

namespace qesd::kernels {
namespace {

// acc += aik * b[j..j+1] for one broadcast complex aik
inline __m256d cmul_acc(__m256d acc, __m256d ar, __m256d ai, __m256d b) {
  // (ar + i ai)(br + i bi) = (ar br - ai bi) + i(ar bi + ai br)
  __m256d bswap = _mm256_permute_pd(b, 0x5);      // [bi, br, ...]
  __m256d t = _mm256_mul_pd(ai, bswap);           // [ai bi, ai br, ...]
  return _mm256_add_pd(acc, _mm256_fmaddsub_pd(ar, b, t));
}

void mat_mul_avx2(const cplx* a, const cplx* b, cplx* c, int n) {
  const double* bd = reinterpret_cast<const double*>(b);
  double* cd = reinterpret_cast<double*>(c);
  const int vec = (n / 2) * 2;  // complexes handled 2 at a time
  for (int i = 0; i < n; ++i) {
    double* ci = cd + std::size_t(i) * 2 * n;
    for (int j = 0; j < 2 * n; ++j) ci[j] = 0.0;
    const cplx* ai = a + std::size_t(i) * n;
    for (int k = 0; k < n; ++k) {
      const __m256d ar = _mm256_set1_pd(ai[k].real());
      const __m256d ai_v = _mm256_set1_pd(ai[k].imag());
      const double* bk = bd + std::size_t(k) * 2 * n;
      int j = 0;
      for (; j < vec; j += 2) {
        __m256d acc = _mm256_loadu_pd(ci + 2 * j);
        acc = cmul_acc(acc, ar, ai_v, _mm256_loadu_pd(bk + 2 * j));
        _mm256_storeu_pd(ci + 2 * j, acc);
      }
      for (; j < n; ++j) {
        const cplx p = ai[k] * b[std::size_t(k) * n + j];
        ci[2 * j] += p.real();
        ci[2 * j + 1] += p.imag();
      }
    }
  }
}

void mat_mul_adjB_avx2(const cplx* a, const cplx* b, cplx* c, int n) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  const int vec = (n / 2) * 2;
  for (int i = 0; i < n; ++i) {
    const double* ai = ad + std::size_t(i) * 2 * n;
    for (int j = 0; j < n; ++j) {
      const double* bj = bd + std::size_t(j) * 2 * n;
      // re += ar br + ai bi ; im += ai br - ar bi
      __m256d accP = _mm256_setzero_pd();  // even lanes ar*br, odd ai*bi
      __m256d accQ = _mm256_setzero_pd();  // even lanes ai*br, odd ar*bi
      int k = 0;
      for (; k < vec; k += 2) {
        __m256d va = _mm256_loadu_pd(ai + 2 * k);
        __m256d vb = _mm256_loadu_pd(bj + 2 * k);
        __m256d vas = _mm256_permute_pd(va, 0x5);
        accP = _mm256_fmadd_pd(va, vb, accP);
        accQ = _mm256_fmadd_pd(vas, vb, accQ);
      }
      alignas(32) double p[4], q[4];
      _mm256_store_pd(p, accP);
      _mm256_store_pd(q, accQ);
      double re = p[0] + p[1] + p[2] + p[3];
      double im = (q[0] + q[2]) - (q[1] + q[3]);
      for (; k < n; ++k) {
        const cplx prod = a[std::size_t(i) * n + k] * std::conj(b[std::size_t(j) * n + k]);
        re += prod.real();
        im += prod.imag();
      }
      c[std::size_t(i) * n + j] = cplx(re, im);
    }
  }
}

void axpy_avx2(double s, const double* k, const double* x, double* y, int len) {
  const __m256d vs = _mm256_set1_pd(s);
  int i = 0;
  for (; i + 4 <= len; i += 4)
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(vs, _mm256_loadu_pd(k + i),
                                            _mm256_loadu_pd(x + i)));
  for (; i < len; ++i) y[i] = x[i] + s * k[i];
}

void combine4_avx2(const double* x, double s1, const double* k1, double s2,
                   const double* k2, double s3, const double* k3, double s4,
                   const double* k4, double* y, int len) {
  const __m256d v1 = _mm256_set1_pd(s1), v2 = _mm256_set1_pd(s2);
  const __m256d v3 = _mm256_set1_pd(s3), v4 = _mm256_set1_pd(s4);
  int i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256d acc = _mm256_loadu_pd(x + i);
    acc = _mm256_fmadd_pd(v1, _mm256_loadu_pd(k1 + i), acc);
    acc = _mm256_fmadd_pd(v2, _mm256_loadu_pd(k2 + i), acc);
    acc = _mm256_fmadd_pd(v3, _mm256_loadu_pd(k3 + i), acc);
    acc = _mm256_fmadd_pd(v4, _mm256_loadu_pd(k4 + i), acc);
    _mm256_storeu_pd(y + i, acc);
  }
  for (; i < len; ++i)
    y[i] = x[i] + s1 * k1[i] + s2 * k2[i] + s3 * k3[i] + s4 * k4[i];
}

}  // namespace

const Ops* avx2_ops() {
  static const Ops ops{"avx2", mat_mul_avx2, mat_mul_adjB_avx2, axpy_avx2,
                       combine4_avx2};
  return &ops;
}

}  // namespace qesd::kernels
