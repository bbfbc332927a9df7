#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qesd/dynamics.hpp"
#include "qesd/states.hpp"

namespace qesd {

enum class EventKind { SlopeChange, SuddenDeath, Asymptotic };
enum class EventSource { Analytic, Detected };

const char* to_string(EventKind k);

struct CriticalEvent {
  double time;  // physical units (1/Gamma); +inf for asymptotic sentinels
  EventKind kind;
  EventSource source;
};

/// Ordered event list for one state-family member: finite times strictly
/// increasing, at most one sudden-death event, asymptotic sentinels
/// (time = +inf) trailing.
struct CriticalTimes {
  std::vector<CriticalEvent> events;

  std::size_t finite_count() const;
  std::size_t kink_count() const;   // finite slope-change events
  bool has_sudden_death() const;
  std::optional<double> sudden_death_time() const;
};

/// t1 = ln(2/(2-lambda)), t2 = ln(1/(1-lambda)), t3 = ln(1/(1-sqrt(lambda))),
/// each divided by gamma; slope changes at t1 and t2, sudden death at t3.
/// At lambda = 1, t2 and t3 become asymptotic sentinels.  lambda <= 0 or
/// lambda > 1 raises config_error.
CriticalTimes mixed_family_times(double lambda, double gamma);

enum class Regime { A, B, C, D };

char regime_letter(Regime r);

struct RegimeLabel {
  Regime label;
  int expected_kinks;  // (a) 0, (b) 1, (c) 2, (d) 2
  bool has_esd;        // only (d)
  bool boundary;       // amplitude tie or outside the four strict orderings
};

/// Amplitude-ordering classification:
///   (a) alpha >= beta > gamma
///   (b) beta >= alpha >= gamma, or alpha > gamma > beta
///   (c) beta > gamma > alpha
///   (d) gamma > beta > alpha
/// Patterns are tried in listed order, then relaxed to non-strict in the
/// same order; gamma > alpha > beta (admitted by no pattern) maps to (d).
/// Boundary hits are flagged.
RegimeLabel classify_regime(const PureFamilyParams& p);

/// Critical times of the pure family alpha|00> + beta|11> + gamma|22>:
///   t1 = -(1/G) ln(1 - beta/(2 gamma))
///   t2 = -(1/G) ln(1 - w2),  w2 the root of 2g^2 w^3 - 2bg w^2 + b^2 w - ab
///        (closed form via Z = 5 - 27x + 3 sqrt(3) sqrt(1 - 10x + 27x^2),
///         x = alpha gamma / beta^2)
///   t3 = -(1/G) ln(1 - sqrt(alpha/gamma))
/// A root is a finite event only when its log argument lies in (0,1); a
/// root whose argument is <= 0 marks negativity that persists forever
/// (asymptotic sentinel); a coherence that never exists yields no event.
/// Under regime (d) the largest finite time is the sudden death.
CriticalTimes pure_family_times(const PureFamilyParams& p, double gamma);

/// Scans the partial-transpose eigenvalue tracks of a trace for zero
/// crossings.  Each crossing is refined by bisection on states re-integrated
/// from the nearest stored sample to |dt| <= 1e-6/Gamma and emitted as a
/// slope change; the final crossing is relabelled sudden-death when no
/// genuine negativity and no Lambda_pt excess above 1e-9 remain afterwards.
/// Negativity persisting at the end of the trace appends an asymptotic
/// sentinel.  Crossings are only trusted when the track genuinely attains
/// -1e-9 before and +1e-9 after (noise-floor fades are not events).
/// Sampling coarser than 1e-2/Gamma, or an inconsistent sign pattern,
/// raises numerical_error asking for a finer trace.
CriticalTimes detect_events(const EvolutionTrace& trace);

/// Same detection logic on bare eigenvalue tracks (e.g. re-read from a CSV):
/// crossing times come from linear interpolation, so they are accurate to
/// sampling resolution only.
CriticalTimes detect_events_from_tracks(const std::vector<double>& times,
                                        const std::vector<std::array<double, 9>>& pt_tracks,
                                        double gamma_max = 1.0);

enum class Family { Mixed, Pure, Subspace };

const char* to_string(Family f);

struct FamilyMember {
  Family family;
  double lambda = 0.0;                 // mixed
  PureFamilyParams pure{0, 0, 0};      // pure
  double chi = 0.0;                    // subspace
};

DensityMatrix make_initial(const FamilyMember& m);

/// Analytic critical times where formulas exist (mixed, pure); nullopt for
/// the subspace family, which is detected-only.
std::optional<CriticalTimes> analytic_times(const FamilyMember& m, double gamma);

struct ScanRow {
  FamilyMember member;
  std::optional<CriticalTimes> analytic;
  CriticalTimes detected;
  std::optional<RegimeLabel> regime;  // pure family only
};

struct ScanOptions {
  double t_end = 5.0;
  double step = 1e-3;
  int sample_every = 10;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// Evaluates every grid member: analytic formulas where they exist plus a
/// full evolve + detect pass, both recorded for cross-validation.  Grid
/// points are distributed over a worker pool; results keep grid order.
std::vector<ScanRow> scan_family(const std::vector<FamilyMember>& grid,
                                 const DecayRates& rates,
                                 const ScanOptions& opts = {});

}  // namespace qesd
