#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "qesd/critical_times.hpp"
#include "qesd/measures.hpp"

namespace qesd {

/// One CLI run: family member, reservoir rates, integration window, output.
struct RunConfig {
  FamilyMember member{Family::Mixed, 0.1};
  DecayRates rates;
  double t_end = 5.0;
  double step = 1e-3;
  int sample_every = 10;
  std::string out;  // file path ("-" or empty: stdout); directory for figures
};

/// Per-sample quantities emitted by the evolve command, in CSV column order.
struct EvolveRow {
  double t;  // Gamma*t when rates are symmetric, seconds otherwise
  double lambda_value, pt_norm, realign_norm, eof_bound;
  std::array<double, 9> m_tracks;   // eigenvalues of M, continuity-matched
  std::array<double, 9> pt_tracks;  // eigenvalues of rho^{T_A}, matched
  double w1, w2, w3;
};

struct EvolveResult {
  std::vector<EvolveRow> rows;
  CriticalTimes detected;
  bool symmetric_rates = true;
  double time_unit = 1.0;  // multiply stored t by this to get seconds
};

EvolveResult run_evolve(const RunConfig& cfg);

/// 12-significant-digit shortest formatting; "inf" for infinities.
std::string format_number(double v);

void write_evolve_csv(std::ostream& os, const EvolveResult& r, const RunConfig& cfg);

/// Times report as JSON text: analytic and detected event arrays plus the
/// absolute discrepancy per matched pair.  Asymptotic times serialize as
/// the string "inf".
std::string times_report_json(const RunConfig& cfg);

struct ScanGrid {
  double min = 0.0, max = 0.0;
  int points = 0;       // mixed / subspace: 1-D grid
  int pure_side = 0;    // pure: pure_side^2 angular grid over the simplex
};

std::vector<FamilyMember> build_grid(Family family, const ScanGrid& grid);

void write_scan_csv(std::ostream& os, Family family, const std::vector<ScanRow>& rows,
                    const RunConfig& cfg);

/// Emits the data series behind one of the six reference figures into
/// out_dir/fig<N>.csv with the published parameter values baked in.
/// Returns the written file path.  Unknown figure numbers raise config_error.
std::string run_figure(int which, const std::string& out_dir);

/// Reads back an evolve CSV: the time column and the pt_eig1..9 tracks
/// (for round-tripping detection from emitted data).
void read_evolve_csv(std::istream& is, std::vector<double>& times,
                     std::vector<std::array<double, 9>>& pt_tracks);

}  // namespace qesd
