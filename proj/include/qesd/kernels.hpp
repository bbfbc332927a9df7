#pragma once

#include <complex>
#include <string_view>

namespace qesd::kernels {

using cplx = std::complex<double>;

/// Arithmetic kernels behind the matrix/​integrator hot loops.  One scalar
/// reference implementation always exists; SIMD variants (AVX2 on x86-64,
/// NEON on aarch64) are selected at runtime when the CPU supports them.
/// The QESD_KERNELS environment variable ("scalar", "avx2", "neon")
/// overrides the automatic pick.
struct Ops {
  const char* name;

  /// c = a * b, n x n row-major complex.  c must not alias a or b.
  void (*mat_mul)(const cplx* a, const cplx* b, cplx* c, int n);

  /// c = a * b^H (conjugate transpose of b).  c must not alias a or b.
  void (*mat_mul_adjB)(const cplx* a, const cplx* b, cplx* c, int n);

  /// y[i] = x[i] + s * k[i] over len doubles.  y may alias x.
  void (*axpy)(double s, const double* k, const double* x, double* y, int len);

  /// y[i] = x[i] + s1 k1[i] + s2 k2[i] + s3 k3[i] + s4 k4[i].  y may alias x.
  void (*combine4)(const double* x, double s1, const double* k1, double s2,
                   const double* k2, double s3, const double* k3, double s4,
                   const double* k4, double* y, int len);
};

/// The runtime-selected kernel set (stable for the process lifetime).
const Ops& active();

/// The scalar reference kernels.
const Ops& scalar();

/// Look up a kernel set by name; nullptr when the variant is not compiled
/// in or the CPU lacks the feature.
const Ops* find(std::string_view name);

}  // namespace qesd::kernels
