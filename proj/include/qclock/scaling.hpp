#pragma once

#include <cstdint>
#include <vector>

#include "qclock/clock.hpp"
#include "qclock/rational.hpp"

namespace qclock {

enum class GridKind { kTime, kEnergy };

struct SnapResult {
  std::int64_t index = 0;  // balanced representative
  double snapped = 0.0;    // nearest lattice value (not rebalanced)
  double delta = 0.0;      // value - snapped; |delta| <= half spacing
};

/// Nearest grid point by absolute distance, ties toward the smaller lattice
/// integer. Values must lie within +-extent/2 (OutOfRange otherwise); the
/// returned index is the balanced representative of the lattice integer mod
/// omega.
SnapResult snap(const QuantumClock& c, double value, GridKind kind);

/// Builds the clock system from the snapped spectrum, evaluates it at the
/// snapped time and returns ||exp(-i 2 pi H t) - alpha_snap||_max for the
/// diagonal target H = diag(spectrum).
double approximation_error(const std::vector<double>& spectrum, double t,
                           const QuantumClock& c);

/// Triangle bound on the phase error:
/// 2 pi (sum_j |dE_j| |t| + max_j |E_j| |dt|).
double approximation_bound(const std::vector<double>& spectrum, double t,
                           const QuantumClock& c);

struct GridSpec {
  Rational omega_uv;
  Rational omega_ir;
};

struct GridRow {
  GridSpec grid;
  std::int64_t omega = 0;
  double max_error = 0.0;
  double bound = 0.0;
};

struct GridExperiment {
  std::vector<double> target_spectrum;
  std::vector<double> target_times;
  std::vector<GridRow> rows;

  bool errors_monotone_nonincreasing() const;
  /// Error ratios for consecutive rows whose grids double exactly in both
  /// parameters.
  std::vector<double> consecutive_doubling_ratios() const;
};

/// One row of max error over the target times per grid. Grids must be
/// sorted by increasing omega; empty times yield zero rows.
GridExperiment refinement_study(const std::vector<double>& spectrum,
                                const std::vector<double>& times,
                                const std::vector<GridSpec>& grids);

}  // namespace qclock
