#include "qesd/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qesd/errors.hpp"

namespace qesd {

namespace {

constexpr int kDim = 9;

double log2_safe(double x) { return std::log2(x); }

// binary entropy with H2(0) = H2(1) = 0
double h2(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * log2_safe(x) - (1.0 - x) * log2_safe(1.0 - x);
}

}  // namespace

ComplexMatrix partial_transpose(const ComplexMatrix& rho) {
  if (rho.dim() != kDim) throw config_error("partial_transpose: expected a 9x9 matrix");
  ComplexMatrix pt(kDim);
  for (int a1 = 0; a1 < 3; ++a1)
    for (int b1 = 0; b1 < 3; ++b1)
      for (int a2 = 0; a2 < 3; ++a2)
        for (int b2 = 0; b2 < 3; ++b2)
          pt(composite_index(a1, b1), composite_index(a2, b2)) =
              rho(composite_index(a2, b1), composite_index(a1, b2));
  return pt;
}

ComplexMatrix realign(const ComplexMatrix& rho) {
  if (rho.dim() != kDim) throw config_error("realign: expected a 9x9 matrix");
  ComplexMatrix r(kDim);
  for (int a1 = 0; a1 < 3; ++a1)
    for (int a2 = 0; a2 < 3; ++a2)
      for (int b1 = 0; b1 < 3; ++b1)
        for (int b2 = 0; b2 < 3; ++b2)
          r(3 * a1 + a2, 3 * b1 + b2) = rho(composite_index(a1, b1), composite_index(a2, b2));
  return r;
}

double trace_norm(const ComplexMatrix& a) {
  const ComplexMatrix gram = a.mul_adjoint(a);  // A A^H, Hermitian PSD
  double sum = 0.0;
  for (double ev : hermitian_eigenvalues(gram)) {
    if (ev < -1e-12)
      throw numerical_error("trace_norm: A A^H eigenvalue " + std::to_string(ev) +
                            " below -1e-12");
    sum += std::sqrt(std::max(ev, 0.0));
  }
  return sum;
}

LambdaMeasure lambda_measure(const DensityMatrix& rho) {
  const double pt = trace_norm(partial_transpose(rho.mat()));
  const double re = trace_norm(realign(rho.mat()));
  return {std::max(pt, re), pt, re};
}

double eof_lower_bound(double lambda_value, const EofBoundParams& p) {
  if (p.m < 2 || p.n < p.m) throw config_error("eof_lower_bound: require 2 <= m <= n");
  const double m = p.m;
  if (lambda_value > m + 1e-9)
    throw config_error("eof_lower_bound: Lambda = " + std::to_string(lambda_value) +
                       " exceeds the dimension bound m = " + std::to_string(p.m));
  if (lambda_value <= 1.0) return 0.0;
  lambda_value = std::min(lambda_value, m);

  const double branch_point = (p.m == 2) ? m : 4.0 * (m - 1.0) / m;
  if (lambda_value <= branch_point) {
    const double root = std::sqrt(lambda_value) + std::sqrt((m - 1.0) * (m - lambda_value));
    const double g = root * root / (m * m);
    return h2(g) + (1.0 - g) * log2_safe(m - 1.0);
  }
  return log2_safe(m - 1.0) / (m - 2.0) * (lambda_value - m) + log2_safe(m);
}

SpectrumReport m_eigentrack(const DensityMatrix& rho) {
  const ComplexMatrix pt = partial_transpose(rho.mat());
  const std::vector<double> ev_pt = hermitian_eigenvalues(pt);
  const std::vector<double> ev_m = hermitian_eigenvalues(pt.mul_adjoint(pt));

  SpectrumReport rep;
  std::copy(ev_pt.begin(), ev_pt.end(), rep.eigenvalues_pt.begin());
  std::copy(ev_m.begin(), ev_m.end(), rep.eigenvalues_M.begin());

  double pt_norm = 0.0;
  for (double e : ev_m) {
    if (e < -1e-12)
      throw numerical_error("m_eigentrack: negative M eigenvalue " + std::to_string(e));
    pt_norm += std::sqrt(std::max(e, 0.0));
  }
  double direct = 0.0;
  for (double e : ev_pt) direct += std::abs(e);
  if (std::abs(pt_norm - direct) > 1e-9)
    throw numerical_error("m_eigentrack: sum sqrt(E_M) disagrees with the PT trace norm");

  std::array<double, 9> squares;
  for (int i = 0; i < 9; ++i) squares[i] = ev_pt[i] * ev_pt[i];
  std::sort(squares.begin(), squares.end());
  std::array<double, 9> m_sorted = rep.eigenvalues_M;
  std::sort(m_sorted.begin(), m_sorted.end());
  for (int i = 0; i < 9; ++i)
    if (std::abs(squares[i] - m_sorted[i]) > 1e-9)
      throw numerical_error("m_eigentrack: {E_M} != {pt^2} as multisets");

  return rep;
}

EigenvalueTriplet analytic_E(const AnalyticElements& el) {
  const double d1 = el.rho_12_12 - el.rho_11_22;
  const double d2 = el.rho_00_11 - el.rho_01_01;
  const double d3 = el.rho_00_22 - el.rho_02_02;
  return {d1 * d1, d2 * d2, d3 * d3};
}

const WitnessSet& WitnessSet::standard() {
  static const WitnessSet set = [] {
    auto witness = [](int diag_a, int diag_b, int coh_a, int coh_b) {
      ComplexMatrix w(kDim);
      w(diag_a, diag_a) = 0.5;
      w(diag_b, diag_b) = 0.5;
      w(coh_a, coh_b) = -0.5;
      w(coh_b, coh_a) = -0.5;
      return w;
    };
    WitnessSet s;
    // W1 = (1/2)[|21><21| - |11><22| - |22><11| + |12><12|]
    s.w1 = witness(composite_index(2, 1), composite_index(1, 2), composite_index(1, 1),
                   composite_index(2, 2));
    // W2 = (1/2)[|10><10| - |00><11| - |11><00| + |01><01|]
    s.w2 = witness(composite_index(1, 0), composite_index(0, 1), composite_index(0, 0),
                   composite_index(1, 1));
    // W3 = (1/2)[|02><02| - |00><22| - |22><00| + |20><20|]
    s.w3 = witness(composite_index(0, 2), composite_index(2, 0), composite_index(0, 0),
                   composite_index(2, 2));
    return s;
  }();
  return set;
}

WitnessExpectations witness_expectations(const DensityMatrix& rho) {
  auto expect = [&rho](const ComplexMatrix& w) {
    cplx tr = 0.0;
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) tr += w(i, j) * rho(j, i);
    if (std::abs(tr.imag()) > 1e-12)
      throw numerical_error("witness_expectations: non-real expectation value");
    return tr.real();
  };
  const WitnessSet& ws = WitnessSet::standard();
  return {expect(ws.w1), expect(ws.w2), expect(ws.w3)};
}

std::vector<std::array<double, 9>> match_tracks(
    const std::vector<std::array<double, 9>>& per_sample_ascending) {
  std::vector<std::array<double, 9>> tracks = per_sample_ascending;
  for (std::size_t i = 1; i < tracks.size(); ++i) {
    const std::array<double, 9>& prev = tracks[i - 1];
    const std::array<double, 9>& cur = per_sample_ascending[i];
    bool value_used[9] = {};
    bool track_used[9] = {};
    std::array<double, 9> assigned{};
    // repeatedly take the globally closest (value, track) pair; lower
    // indices win ties
    for (int round = 0; round < 9; ++round) {
      int best_v = -1, best_t = -1;
      double best_d = 0.0;
      for (int v = 0; v < 9; ++v) {
        if (value_used[v]) continue;
        for (int t = 0; t < 9; ++t) {
          if (track_used[t]) continue;
          const double d = std::abs(cur[v] - prev[t]);
          if (best_v < 0 || d < best_d) {
            best_d = d;
            best_v = v;
            best_t = t;
          }
        }
      }
      value_used[best_v] = true;
      track_used[best_t] = true;
      assigned[best_t] = cur[best_v];
    }
    tracks[i] = assigned;
  }
  return tracks;
}

}  // namespace qesd
