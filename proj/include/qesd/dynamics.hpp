#pragma once

#include <vector>

#include "qesd/states.hpp"

namespace qesd {

struct DecayRates {
  double gamma1 = 1.0;
  double gamma2 = 1.0;
  double max() const { return gamma1 > gamma2 ? gamma1 : gamma2; }
};

/// Jump operators of the two independent zero-temperature reservoirs:
/// c1 = c ⊗ I, c2 = I ⊗ c with c the three-level truncation of the bosonic
/// annihilation operator (c|1> = |0>, c|2> = sqrt(2)|1>).
struct LindbladOperatorSet {
  ComplexMatrix c1, c2;
  static const LindbladOperatorSet& two_qutrit();
};

/// d(rho)/dt = sum_i (Gamma_i/2)[2 c_i rho c_i^dag - c_i^dag c_i rho - rho c_i^dag c_i].
/// Traceless and Hermitian up to rounding.
ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const DecayRates& rates);

/// Time-indexed record of an evolution.  Carries rates and step so that
/// event detection can re-integrate between stored samples.
struct EvolutionTrace {
  std::vector<double> times;           // increasing, includes 0 and t_end
  std::vector<DensityMatrix> states;   // aligned with times
  double step = 0.0;
  DecayRates rates;

  /// Integrate the stored sample nearest below t forward to t.
  DensityMatrix state_at(double t) const;
};

/// Classical fixed-step RK4 integration of lindblad_rhs.  Samples are
/// recorded every sample_every steps plus t=0 and t_end.  No renormalization
/// is applied; trace/Hermiticity drift is monitored (1e-8) and positivity
/// violations beyond 1e-6 raise numerical_error.  step must satisfy
/// step <= 1e-2 / max(Gamma) or config_error is raised.
EvolutionTrace evolve(const DensityMatrix& rho0, const DecayRates& rates,
                      double t_end, double step, int sample_every);

/// The six closed-form matrix elements of the evolved mixed family
/// (symmetric rates Gamma1 = Gamma2 = gamma), evaluated exactly as printed.
/// Index pairs refer to the composite basis: rho_ab_cd = <ab|rho|cd>.
struct AnalyticElements {
  double lambda = 0.0;
  double rho_12_12 = 0.0;  // (5,5)
  double rho_11_22 = 0.0;  // (4,8)
  double rho_00_11 = 0.0;  // (0,4)
  double rho_01_01 = 0.0;  // (1,1)
  double rho_00_22 = 0.0;  // (0,8)
  double rho_02_02 = 0.0;  // (2,2)
};

AnalyticElements analytic_elements(double lambda, double gamma, double t);

/// Integrates the mixed family and returns the maximum over samples and
/// elements of |numeric - analytic|; the dynamics acceptance oracle.
double oracle_compare(double lambda, double gamma, double t_end, double step);

}  // namespace qesd
