#pragma once

#include "qesd/complex_matrix.hpp"

namespace qesd {

/// Composite basis index of |a>_A |b>_B, subsystem A major.
constexpr int composite_index(int a, int b) { return 3 * a + b; }

/// Validation tolerances of a physical two-qutrit state.
inline constexpr double kHermTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kMinEigTol = -1e-10;

struct StateDiagnostics {
  double hermiticity_defect = 0.0;
  double trace_defect = 0.0;      // |tr - 1|
  double min_eigenvalue = 0.0;
  bool pass = false;
};

/// Hermiticity / trace / positivity report for an arbitrary 9x9 matrix.
/// Never throws; callers decide what a failure means.
StateDiagnostics validate(const ComplexMatrix& rho,
                          double herm_tol = kHermTol,
                          double trace_tol = kTraceTol,
                          double min_eig_tol = kMinEigTol);

/// Two-qutrit density matrix: 9x9, Hermitian, unit trace, positive
/// semidefinite (within the tolerances above).  Immutable once built.
class DensityMatrix {
 public:
  /// Wraps a matrix after checking the state invariants; throws
  /// config_error on violation unless enforce is false (diagnostic use).
  static DensityMatrix from_matrix(ComplexMatrix m, bool enforce = true);

  const ComplexMatrix& mat() const { return mat_; }
  const cplx& operator()(int r, int c) const { return mat_(r, c); }

 private:
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
  ComplexMatrix mat_;
};

struct MixedFamilyParams {
  double lambda;  // coherence parameter, [0,1]; 0 separable, 1 maximally entangled
};

struct PureFamilyParams {
  double alpha, beta, gamma;  // real nonnegative amplitudes, unit norm
};

struct SubspaceFamilyParams {
  double chi;  // coherence parameter, [0,1]
};

/// (1/3) [ diag ones at |00>,|11>,|22>; off-diagonal lambda between them ].
DensityMatrix make_mixed_initial(const MixedFamilyParams& p);

/// Projector onto alpha|00> + beta|11> + gamma|22>.
DensityMatrix make_pure_initial(const PureFamilyParams& p);

/// (1/2)(|11><11| + |22><22| + chi|11><22| + chi|22><11|).
DensityMatrix make_subspace_initial(const SubspaceFamilyParams& p);

}  // namespace qesd
