#pragma once

#include <cstdint>

#include "qclock/coherent.hpp"
#include "qclock/rational.hpp"
#include "qclock/tensor.hpp"

namespace qclock {

/// Physical grid labels for a clock carrier: omega_uv is the grid fineness
/// (1/time units), omega_ir the grid extent (1/energy units), and
/// omega == omega_uv * omega_ir the number of states. Basis indices are
/// reduced to the balanced representative range
/// {-floor((omega-1)/2), ..., +floor(omega/2)}, so time and energy values
/// straddle zero. Time grid: spacing 1/omega_uv, extent omega_ir. Energy
/// grid: spacing 1/omega_ir, extent omega_uv.
struct ClockLabels {
  Rational omega_uv{1};
  Rational omega_ir{1};
  std::int64_t omega = 1;

  /// Validates positivity and that uv*ir rounds to a positive integer
  /// within 1e-9 relative error; throws NonIntegerVolume otherwise.
  static ClockLabels create(const Rational& uv, const Rational& ir);

  std::int64_t rep_lo() const { return -((omega - 1) / 2); }
  std::int64_t rep_hi() const { return omega / 2; }
  std::int64_t canonical(std::int64_t n) const {
    return ((n % omega) + omega) % omega;
  }
  std::int64_t representative(std::int64_t n) const {
    std::int64_t r = canonical(n);
    return r > rep_hi() ? r - omega : r;
  }

  double time_spacing() const { return omega_uv.reciprocal().to_double(); }
  double energy_spacing() const { return omega_ir.reciprocal().to_double(); }
  double time_extent() const {
    return static_cast<double>(omega) / omega_uv.to_double();
  }
  double energy_extent() const {
    return static_cast<double>(omega) / omega_ir.to_double();
  }

  double time_of(std::int64_t n) const {
    return static_cast<double>(representative(n)) / omega_uv.to_double();
  }
  double energy_of(std::int64_t m) const {
    return static_cast<double>(representative(m)) / omega_ir.to_double();
  }

  bool operator==(const ClockLabels& o) const {
    return omega == o.omega && omega_uv == o.omega_uv &&
           omega_ir == o.omega_ir;
  }
};

/// A coherent group for Z_omega together with grid labels. Time states are
/// the z basis; energy states are the plane waves
/// |E_m> = sum_n exp(+i 2 pi m n / omega) |t_n>, and the time-energy pairing
/// is <E_m|t_n> = exp(-i 2 pi m n / omega) = exp(-i 2 pi E t).
class QuantumClock {
 public:
  QuantumClock(const Rational& omega_uv, const Rational& omega_ir);

  static QuantumClock from_doubles(double omega_uv, double omega_ir);

  const ClockLabels& labels() const { return labels_; }
  std::int64_t omega() const { return labels_.omega; }
  const CoherentGroup& group() const { return group_; }

  /// Basis state |t_n>, n reduced mod omega; norm 1.
  Tensor time_state(std::int64_t n) const;

  /// Plane wave |E_m>; squared norm omega; classical state of xdot.
  Tensor energy_state(std::int64_t m) const;

  /// <E_m|t_n> = exp(-i 2 pi m n / omega); unit modulus.
  cplx pairing_phase(std::int64_t m, std::int64_t n) const;

  /// T_n: the cyclic shift |t_k> -> |t_{k+n}>; T_0 = id.
  Tensor time_translation(std::int64_t n) const;

  /// S_m: diagonal exp(+i 2 pi m n / omega) on |t_n>; S_0 = id. Equals
  /// zdot.mult partially applied to |E_m>.
  Tensor energy_shift(std::int64_t m) const;

  bool operator==(const QuantumClock& o) const {
    return labels_ == o.labels_;
  }

 private:
  ClockLabels labels_;
  CoherentGroup group_;
};

inline QuantumClock new_clock(const Rational& uv, const Rational& ir) {
  return QuantumClock(uv, ir);
}
inline QuantumClock new_clock(double uv, double ir) {
  return QuantumClock::from_doubles(uv, ir);
}

}  // namespace qclock
