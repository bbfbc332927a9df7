#include "qesd/states.hpp"

#include <cmath>
#include <string>

#include "qesd/eigen.hpp"
#include "qesd/errors.hpp"

namespace qesd {

StateDiagnostics validate(const ComplexMatrix& rho, double herm_tol, double trace_tol,
                          double min_eig_tol) {
  StateDiagnostics d;
  d.hermiticity_defect = rho.hermiticity_defect();
  d.trace_defect = std::abs(rho.trace() - cplx(1.0));
  if (d.hermiticity_defect <= 1e-10) {
    d.min_eigenvalue = hermitian_eigenvalues(rho).front();
  } else {
    // spectrum of the Hermitian part still gives a meaningful report
    ComplexMatrix h = rho;
    h += rho.adjoint();
    h *= 0.5;
    d.min_eigenvalue = hermitian_eigenvalues(h).front();
  }
  d.pass = d.hermiticity_defect <= herm_tol && d.trace_defect <= trace_tol &&
           d.min_eigenvalue >= min_eig_tol;
  return d;
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m, bool enforce) {
  if (m.dim() != 9) throw config_error("DensityMatrix: dimension must be 9");
  if (enforce) {
    const StateDiagnostics d = validate(m);
    if (!d.pass)
      throw config_error("DensityMatrix: invariants violated (hermiticity defect " +
                         std::to_string(d.hermiticity_defect) + ", trace defect " +
                         std::to_string(d.trace_defect) + ", min eigenvalue " +
                         std::to_string(d.min_eigenvalue) + ")");
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix make_mixed_initial(const MixedFamilyParams& p) {
  if (!(p.lambda >= 0.0 && p.lambda <= 1.0))
    throw config_error("mixed family: lambda must lie in [0,1]");
  ComplexMatrix m(9);
  const int diag[3] = {composite_index(0, 0), composite_index(1, 1), composite_index(2, 2)};
  for (int i : diag)
    for (int j : diag) m(i, j) = (i == j ? 1.0 : p.lambda) / 3.0;
  return DensityMatrix::from_matrix(std::move(m));
}

DensityMatrix make_pure_initial(const PureFamilyParams& p) {
  if (p.alpha < 0.0 || p.beta < 0.0 || p.gamma < 0.0)
    throw config_error("pure family: amplitudes must be nonnegative");
  const double n2 = p.alpha * p.alpha + p.beta * p.beta + p.gamma * p.gamma;
  if (std::abs(n2 - 1.0) > 1e-10)
    throw config_error("pure family: amplitudes not normalized (|amp|^2 = " +
                       std::to_string(n2) + ")");
  const double amp[3] = {p.alpha, p.beta, p.gamma};
  ComplexMatrix m(9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      m(composite_index(a, a), composite_index(b, b)) = amp[a] * amp[b];
  return DensityMatrix::from_matrix(std::move(m));
}

DensityMatrix make_subspace_initial(const SubspaceFamilyParams& p) {
  if (!(p.chi >= 0.0 && p.chi <= 1.0))
    throw config_error("subspace family: chi must lie in [0,1]");
  ComplexMatrix m(9);
  const int i11 = composite_index(1, 1), i22 = composite_index(2, 2);
  m(i11, i11) = 0.5;
  m(i22, i22) = 0.5;
  m(i11, i22) = p.chi / 2.0;
  m(i22, i11) = p.chi / 2.0;
  return DensityMatrix::from_matrix(std::move(m));
}

}  // namespace qesd
