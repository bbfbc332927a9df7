#pragma once

#include <array>

#include "qesd/dynamics.hpp"
#include "qesd/eigen.hpp"
#include "qesd/states.hpp"

namespace qesd {

/// Partial transpose on subsystem A:
/// PT[(a1,b1),(a2,b2)] = rho[(a2,b1),(a1,b2)].  Hermiticity and trace of a
/// density matrix are preserved.
ComplexMatrix partial_transpose(const ComplexMatrix& rho);

/// Realignment map: R[(a1,a2),(b1,b2)] = rho[(a1,b1),(a2,b2)].  Generally
/// non-Hermitian; applying the same index map twice restores the input.
ComplexMatrix realign(const ComplexMatrix& rho);

/// Trace norm ||G|| = tr sqrt(G G^dag), i.e. the sum of singular values,
/// computed through the Hermitian spectrum of G G^dag.  Eigenvalues in
/// [-1e-12, 0) are clamped to zero before the square root.
double trace_norm(const ComplexMatrix& a);

struct LambdaMeasure {
  double lambda;        // max of the two norms
  double pt_norm;       // ||rho^{T_A}||
  double realign_norm;  // ||R(rho)||
};

/// Lambda = max(||rho^{T_A}||, ||R(rho)||).  Separable states sit at
/// pt_norm = 1 exactly; realign_norm may fall below 1.
LambdaMeasure lambda_measure(const DensityMatrix& rho);

struct EofBoundParams {
  int m = 3;  // smaller subsystem dimension, >= 2
  int n = 3;  // larger subsystem dimension, >= m
};

/// Lower bound on the entanglement of formation of an m ⊗ n state with
/// measure value Lambda.  Piecewise:
///   0                                                  Lambda <= 1
///   H2[g(Lambda)] + (1 - g(Lambda)) log2(m-1)          Lambda in [1, 4(m-1)/m]
///   (log2(m-1)/(m-2)) (Lambda - m) + log2 m            Lambda in [4(m-1)/m, m]
/// with g(Lambda) = (1/m^2)[sqrt(Lambda) + sqrt((m-1)(m-Lambda))]^2.
/// For m = 2 the middle branch covers all of [1, 2].  Lambda > m + 1e-9
/// raises config_error.
double eof_lower_bound(double lambda_value, const EofBoundParams& p = {});

/// Spectra of rho^{T_A} and of M = rho^{T_A} (rho^{T_A})^dag, both ascending.
struct SpectrumReport {
  std::array<double, 9> eigenvalues_pt;
  std::array<double, 9> eigenvalues_M;
};

/// Computes both spectra and cross-checks them: sum(sqrt(E_M)) must equal
/// the partial-transpose trace norm (1e-9) and {E_M} must equal
/// {eigenvalues_pt^2} as multisets (1e-9); violations raise numerical_error.
SpectrumReport m_eigentrack(const DensityMatrix& rho);

struct EigenvalueTriplet {
  double e1, e2, e3;
};

/// The three closed-form eigenvalues of M that govern the mixed family:
/// E1 = (rho_12,12 - rho_11,22)^2, E2 = (rho_00,11 - rho_01,01)^2,
/// E3 = (rho_00,22 - rho_02,02)^2.
EigenvalueTriplet analytic_E(const AnalyticElements& el);

/// The three printed witness operators; each Hermitian with spectrum in
/// {-1/2, 0, +1/2}.
struct WitnessSet {
  ComplexMatrix w1, w2, w3;
  static const WitnessSet& standard();
};

struct WitnessExpectations {
  double w1, w2, w3;  // tr(W_i rho)
};

WitnessExpectations witness_expectations(const DensityMatrix& rho);

/// Greedy nearest-neighbor continuity matching of eigenvalue sets across
/// consecutive samples (minimal |delta| first, lower index on ties), so the
/// individual tracks can be followed through crossings.  tracks[k] is
/// initialised from the ascending order of the first sample.
std::vector<std::array<double, 9>> match_tracks(
    const std::vector<std::array<double, 9>>& per_sample_ascending);

}  // namespace qesd
