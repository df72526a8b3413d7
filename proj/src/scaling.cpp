#include "qclock/scaling.hpp"

#include <cmath>
#include <map>

#include "qclock/dynamics.hpp"

namespace qclock {

namespace {

constexpr double kPi = 3.14159265358979323846;

double grid_scale(const QuantumClock& c, GridKind kind) {
  return kind == GridKind::kTime ? c.labels().omega_uv.to_double()
                                 : c.labels().omega_ir.to_double();
}

double grid_extent(const QuantumClock& c, GridKind kind) {
  return kind == GridKind::kTime ? c.labels().time_extent()
                                 : c.labels().energy_extent();
}

DynamicalSystem snapped_system(const std::vector<double>& spectrum,
                               const QuantumClock& c) {
  const int d = static_cast<int>(spectrum.size());
  std::map<std::int64_t, std::vector<Tensor>> grouped;
  for (int j = 0; j < d; ++j) {
    const SnapResult s = snap(c, spectrum[static_cast<std::size_t>(j)],
                              GridKind::kEnergy);
    grouped[s.index].push_back(Tensor::basis_state(d, j));
  }
  std::vector<Level> levels;
  for (auto& [m, basis] : grouped) levels.push_back({m, std::move(basis)});
  return DynamicalSystem::from_spectrum(c, levels);
}

}  // namespace

SnapResult snap(const QuantumClock& c, double value, GridKind kind) {
  const double extent = grid_extent(c, kind);
  if (std::abs(value) > extent / 2.0) {
    const char* what = kind == GridKind::kTime ? "time" : "energy";
    throw OutOfRange(std::string("snap: ") + what + " value " +
                     std::to_string(value) + " outside representable [" +
                     std::to_string(-extent / 2.0) + ", " +
                     std::to_string(extent / 2.0) + "]");
  }
  const double scale = grid_scale(c, kind);
  const double x = value * scale;
  // Nearest lattice integer with ties toward the smaller one.
  const std::int64_t k = static_cast<std::int64_t>(std::ceil(x - 0.5));
  SnapResult r;
  r.index = c.labels().representative(k);
  r.snapped = static_cast<double>(k) / scale;
  r.delta = value - r.snapped;
  return r;
}

double approximation_error(const std::vector<double>& spectrum, double t,
                           const QuantumClock& c) {
  if (spectrum.empty()) return 0.0;
  const DynamicalSystem sys = snapped_system(spectrum, c);
  const SnapResult ts = snap(c, t, GridKind::kTime);
  const Tensor& approx = sys.evaluate_at(ts.index);

  const int d = static_cast<int>(spectrum.size());
  Tensor target = Tensor::zeros({d}, {d});
  for (int j = 0; j < d; ++j)
    target.at(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) =
        std::polar(1.0, -2.0 * kPi * spectrum[static_cast<std::size_t>(j)] * t);
  return max_abs_diff(target, approx);
}

double approximation_bound(const std::vector<double>& spectrum, double t,
                           const QuantumClock& c) {
  double de_sum = 0.0, e_max = 0.0;
  for (double e : spectrum) {
    de_sum += std::abs(snap(c, e, GridKind::kEnergy).delta);
    e_max = std::max(e_max, std::abs(e));
  }
  const double dt = std::abs(snap(c, t, GridKind::kTime).delta);
  return 2.0 * kPi * (de_sum * std::abs(t) + e_max * dt);
}

bool GridExperiment::errors_monotone_nonincreasing() const {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].max_error > rows[i - 1].max_error + 1e-12) return false;
  return true;
}

std::vector<double> GridExperiment::consecutive_doubling_ratios() const {
  std::vector<double> ratios;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const GridSpec& a = rows[i - 1].grid;
    const GridSpec& b = rows[i].grid;
    const bool doubles = b.omega_uv == a.omega_uv * Rational(2) &&
                         b.omega_ir == a.omega_ir * Rational(2);
    if (!doubles || rows[i - 1].max_error <= 0.0) continue;
    ratios.push_back(rows[i].max_error / rows[i - 1].max_error);
  }
  return ratios;
}

GridExperiment refinement_study(const std::vector<double>& spectrum,
                                const std::vector<double>& times,
                                const std::vector<GridSpec>& grids) {
  GridExperiment exp;
  exp.target_spectrum = spectrum;
  exp.target_times = times;
  if (times.empty()) return exp;

  std::int64_t prev_omega = 0;
  for (const GridSpec& g : grids) {
    QuantumClock clock(g.omega_uv, g.omega_ir);
    if (clock.omega() < prev_omega)
      throw InvalidDimension("refinement_study: grids must be sorted by "
                             "increasing omega");
    prev_omega = clock.omega();

    if (spectrum.empty()) {
      exp.rows.push_back({g, clock.omega(), 0.0, 0.0});
      continue;
    }
    const DynamicalSystem sys = snapped_system(spectrum, clock);
    const int d = static_cast<int>(spectrum.size());
    double max_err = 0.0, max_bound = 0.0;
    for (double t : times) {
      const SnapResult ts = snap(clock, t, GridKind::kTime);
      const Tensor& approx = sys.evaluate_at(ts.index);
      Tensor target = Tensor::zeros({d}, {d});
      for (int j = 0; j < d; ++j)
        target.at(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) =
            std::polar(1.0,
                       -2.0 * kPi * spectrum[static_cast<std::size_t>(j)] * t);
      max_err = std::max(max_err, max_abs_diff(target, approx));
      max_bound = std::max(max_bound, approximation_bound(spectrum, t, clock));
    }
    exp.rows.push_back({g, clock.omega(), max_err, max_bound});
  }
  return exp;
}

}  // namespace qclock
