#include "qesd/eigen.hpp"

#include <algorithm>
#include <cmath>

#include "qesd/errors.hpp"

namespace qesd {

namespace {

double offdiag_mass(const ComplexMatrix& a) {
  double s = 0.0;
  for (int p = 0; p < a.dim(); ++p)
    for (int q = 0; q < a.dim(); ++q)
      if (p != q) s += std::norm(a(p, q));
  return std::sqrt(s);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& input) {
  const int n = input.dim();
  if (input.hermiticity_defect() > 1e-10)
    throw config_error("hermitian_eigenvalues: input non-Hermitian beyond 1e-10");

  ComplexMatrix a = input;
  const double norm = a.frobenius_norm();
  const double target = 1e-13 * norm;

  if (norm > 0.0) {
    bool converged = false;
    for (int sweep = 0; sweep < 50 && !converged; ++sweep) {
      for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
          const cplx apq = a(p, q);
          const double mag = std::abs(apq);
          if (mag < 1e-300) continue;

          const cplx phase = apq / mag;  // e^{i theta}
          const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
          const double sgn = tau >= 0.0 ? 1.0 : -1.0;
          const double t = -sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          const cplx se_m = s * std::conj(phase);  // s e^{-i theta}
          const cplx ce_m = c * std::conj(phase);

          // columns p, q:  A <- A U
          for (int k = 0; k < n; ++k) {
            const cplx akp = a(k, p), akq = a(k, q);
            a(k, p) = c * akp + se_m * akq;
            a(k, q) = -s * akp + ce_m * akq;
          }
          // rows p, q:  A <- U^H A
          const cplx se_p = s * phase, ce_p = c * phase;
          for (int k = 0; k < n; ++k) {
            const cplx apk = a(p, k), aqk = a(q, k);
            a(p, k) = c * apk + se_p * aqk;
            a(q, k) = -s * apk + ce_p * aqk;
          }
        }
      }
      converged = offdiag_mass(a) <= target;
    }
    if (!converged)
      throw numerical_error("hermitian_eigenvalues: Jacobi sweep limit reached");
  }

  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace qesd
