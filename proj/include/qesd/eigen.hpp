#pragma once

#include <vector>

#include "qesd/complex_matrix.hpp"

namespace qesd {

/// Full real spectrum of a Hermitian matrix, ascending, via cyclic Jacobi
/// rotations.  Sweeps run until the off-diagonal Frobenius mass drops below
/// 1e-13 * ||A||_F.  Throws config_error when the input is non-Hermitian
/// beyond 1e-10, numerical_error when convergence fails.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

}  // namespace qesd
