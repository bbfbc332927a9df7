#include "qesd/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qesd/eigen.hpp"
#include "qesd/errors.hpp"
#include "qesd/kernels.hpp"

namespace qesd {

namespace {

constexpr int kDim = 9;
constexpr int kLen = kDim * kDim;          // complex entries
constexpr int kDLen = 2 * kLen;            // doubles

ComplexMatrix qutrit_annihilation() {
  ComplexMatrix c(3);
  c(0, 1) = 1.0;
  c(1, 2) = std::sqrt(2.0);
  return c;
}

double* as_dbl(cplx* p) { return reinterpret_cast<double*>(p); }
const double* as_dbl(const cplx* p) { return reinterpret_cast<const double*>(p); }

// workspace for one evolution; all hot-loop buffers preallocated
struct Integrator {
  const LindbladOperatorSet& ops = LindbladOperatorSet::two_qutrit();
  DecayRates rates;
  double n_weight[kDim];  // diagonal of Gamma1 c1^dag c1 + Gamma2 c2^dag c2
  std::vector<cplx> k1, k2, k3, k4, ytmp, t1, t2;

  explicit Integrator(const DecayRates& r)
      : rates(r), k1(kLen), k2(kLen), k3(kLen), k4(kLen), ytmp(kLen), t1(kLen), t2(kLen) {
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) n_weight[3 * a + b] = r.gamma1 * a + r.gamma2 * b;
  }

  void rhs(const cplx* y, cplx* out) {
    const auto& K = kernels::active();
    K.mat_mul(ops.c1.data().data(), y, t1.data(), kDim);
    K.mat_mul_adjB(t1.data(), ops.c1.data().data(), t2.data(), kDim);
    for (int i = 0; i < kLen; ++i) out[i] = rates.gamma1 * t2[i];
    K.mat_mul(ops.c2.data().data(), y, t1.data(), kDim);
    K.mat_mul_adjB(t1.data(), ops.c2.data().data(), t2.data(), kDim);
    K.axpy(rates.gamma2, as_dbl(t2.data()), as_dbl(out), as_dbl(out), kDLen);
    for (int r = 0; r < kDim; ++r)
      for (int c = 0; c < kDim; ++c)
        out[r * kDim + c] -= 0.5 * (n_weight[r] + n_weight[c]) * y[r * kDim + c];
  }

  void step(cplx* y, double h) {
    const auto& K = kernels::active();
    rhs(y, k1.data());
    K.axpy(h / 2, as_dbl(k1.data()), as_dbl(y), as_dbl(ytmp.data()), kDLen);
    rhs(ytmp.data(), k2.data());
    K.axpy(h / 2, as_dbl(k2.data()), as_dbl(y), as_dbl(ytmp.data()), kDLen);
    rhs(ytmp.data(), k3.data());
    K.axpy(h, as_dbl(k3.data()), as_dbl(y), as_dbl(ytmp.data()), kDLen);
    rhs(ytmp.data(), k4.data());
    K.combine4(as_dbl(y), h / 6, as_dbl(k1.data()), h / 3, as_dbl(k2.data()), h / 3,
               as_dbl(k3.data()), h / 6, as_dbl(k4.data()), as_dbl(y), kDLen);
  }

  // integrate rho over duration, fixed step h with a shortened final step
  void run(ComplexMatrix& rho, double duration, double h) {
    double remaining = duration;
    cplx* y = rho.data().data();
    while (remaining > h * (1.0 + 1e-12)) {
      step(y, h);
      remaining -= h;
    }
    if (remaining > 0.0) step(y, remaining);
  }
};

void check_sample(const ComplexMatrix& rho, double t) {
  const StateDiagnostics d = validate(rho, 1e-8, 1e-8, -1e-6);
  if (d.hermiticity_defect > 1e-8 || d.trace_defect > 1e-8)
    throw numerical_error("evolve: state drift beyond 1e-8 at t = " + std::to_string(t));
  if (d.min_eigenvalue < -1e-6)
    throw numerical_error("evolve: positivity violation beyond 1e-6 at t = " +
                          std::to_string(t) + " (min eigenvalue " +
                          std::to_string(d.min_eigenvalue) + ")");
}

}  // namespace

const LindbladOperatorSet& LindbladOperatorSet::two_qutrit() {
  static const LindbladOperatorSet ops = [] {
    const ComplexMatrix c = qutrit_annihilation();
    const ComplexMatrix eye = ComplexMatrix::identity(3);
    return LindbladOperatorSet{c.kron(eye), eye.kron(c)};
  }();
  return ops;
}

ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const DecayRates& rates) {
  if (rates.gamma1 <= 0.0 || rates.gamma2 <= 0.0)
    throw config_error("lindblad_rhs: decay rates must be strictly positive");
  Integrator integ(rates);
  ComplexMatrix out(kDim);
  integ.rhs(rho.data().data(), out.data().data());
  return out;
}

DensityMatrix EvolutionTrace::state_at(double t) const {
  auto it = std::upper_bound(times.begin(), times.end(), t);
  const std::size_t idx = (it == times.begin()) ? 0 : std::size_t(it - times.begin()) - 1;
  ComplexMatrix rho = states[idx].mat();
  const double dt = t - times[idx];
  if (dt > 0.0) {
    Integrator integ(rates);
    integ.run(rho, dt, step);
  }
  return DensityMatrix::from_matrix(std::move(rho), false);
}

EvolutionTrace evolve(const DensityMatrix& rho0, const DecayRates& rates, double t_end,
                      double step, int sample_every) {
  if (rates.gamma1 <= 0.0 || rates.gamma2 <= 0.0)
    throw config_error("evolve: decay rates must be strictly positive");
  if (t_end <= 0.0) throw config_error("evolve: t_end must be positive");
  if (sample_every < 1) throw config_error("evolve: sample_every must be >= 1");
  const double step_max = 1e-2 / rates.max();
  if (!(step > 0.0) || step > step_max * (1.0 + 1e-12))
    throw config_error("evolve: step " + std::to_string(step) +
                       " exceeds the stability bound 1e-2/max(Gamma) = " +
                       std::to_string(step_max));

  EvolutionTrace trace;
  trace.step = step;
  trace.rates = rates;

  const long nsteps = std::lround(std::ceil(t_end / step - 1e-9));
  ComplexMatrix rho = rho0.mat();
  Integrator integ(rates);

  check_sample(rho, 0.0);
  trace.times.push_back(0.0);
  trace.states.push_back(DensityMatrix::from_matrix(rho, false));

  for (long k = 1; k <= nsteps; ++k) {
    const double t_prev = (k - 1) * step;
    const double t_now = std::min(double(k) * step, t_end);
    integ.step(rho.data().data(), t_now - t_prev);
    if (k % sample_every == 0 || k == nsteps) {
      check_sample(rho, t_now);
      trace.times.push_back(t_now);
      trace.states.push_back(DensityMatrix::from_matrix(rho, false));
    }
  }
  return trace;
}

AnalyticElements analytic_elements(double lambda, double gamma, double t) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw config_error("analytic_elements: lambda must lie in [0,1]");
  if (gamma <= 0.0 || t < 0.0)
    throw config_error("analytic_elements: require gamma > 0 and t >= 0");
  const double e1 = std::exp(-gamma * t);
  const double e2 = e1 * e1, e3 = e2 * e1, e4 = e3 * e1;
  AnalyticElements el;
  el.lambda = lambda;
  el.rho_12_12 = (2.0 / 3.0) * (e3 - e4);
  el.rho_11_22 = (lambda / 3.0) * e3;
  el.rho_00_11 = (2.0 * lambda / 3.0) * e3 - (4.0 * lambda / 3.0) * e2 + lambda * e1;
  el.rho_01_01 = 2.0 * e3 - (7.0 / 3.0) * e2 - (2.0 / 3.0) * e4 + e1;
  el.rho_00_22 = (lambda / 3.0) * e2;
  el.rho_02_02 = -(2.0 / 3.0) * e3 + (1.0 / 3.0) * e4 + (1.0 / 3.0) * e2;
  return el;
}

double oracle_compare(double lambda, double gamma, double t_end, double step) {
  const EvolutionTrace trace =
      evolve(make_mixed_initial({lambda}), {gamma, gamma}, t_end, step, 10);
  double dev = 0.0;
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    const AnalyticElements el = analytic_elements(lambda, gamma, trace.times[i]);
    const DensityMatrix& s = trace.states[i];
    const double d[6] = {std::abs(s(5, 5) - cplx(el.rho_12_12)),
                         std::abs(s(4, 8) - cplx(el.rho_11_22)),
                         std::abs(s(0, 4) - cplx(el.rho_00_11)),
                         std::abs(s(1, 1) - cplx(el.rho_01_01)),
                         std::abs(s(0, 8) - cplx(el.rho_00_22)),
                         std::abs(s(2, 2) - cplx(el.rho_02_02))};
    dev = std::max(dev, *std::max_element(d, d + 6));
  }
  return dev;
}

}  // namespace qesd
