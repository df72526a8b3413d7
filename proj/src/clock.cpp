#include "qclock/clock.hpp"

#include <cmath>

namespace qclock {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

ClockLabels ClockLabels::create(const Rational& uv, const Rational& ir) {
  if (!uv.positive() || !ir.positive())
    throw InvalidDimension("clock parameters must be positive");
  Rational product = uv * ir;
  const double p = product.to_double();
  const std::int64_t omega = std::llround(p);
  const double tol = 1e-9 * std::max(1.0, static_cast<double>(omega));
  if (omega < 1 || std::abs(p - static_cast<double>(omega)) > tol)
    throw NonIntegerVolume("omega_uv * omega_ir = " + product.str() +
                           " does not round to a positive integer");
  ClockLabels labels;
  labels.omega_uv = uv;
  labels.omega_ir = ir;
  labels.omega = omega;
  return labels;
}

QuantumClock::QuantumClock(const Rational& omega_uv, const Rational& omega_ir)
    : labels_(ClockLabels::create(omega_uv, omega_ir)),
      group_(labels_.omega) {}

QuantumClock QuantumClock::from_doubles(double omega_uv, double omega_ir) {
  return QuantumClock(Rational::from_double(omega_uv),
                      Rational::from_double(omega_ir));
}

Tensor QuantumClock::time_state(std::int64_t n) const {
  return Tensor::basis_state(static_cast<int>(labels_.omega), n);
}

Tensor QuantumClock::energy_state(std::int64_t m) const {
  const std::int64_t w = labels_.omega;
  Tensor t = Tensor::zeros({static_cast<int>(w)}, {});
  const std::int64_t mc = labels_.canonical(m);
  for (std::int64_t n = 0; n < w; ++n) {
    const std::int64_t k = (mc * n) % w;
    const double angle = 2.0 * kPi * static_cast<double>(k) /
                         static_cast<double>(w);
    t.at(static_cast<std::size_t>(n), 0) = std::polar(1.0, angle);
  }
  return t;
}

cplx QuantumClock::pairing_phase(std::int64_t m, std::int64_t n) const {
  const std::int64_t w = labels_.omega;
  const std::int64_t k = labels_.canonical(labels_.canonical(m) *
                                           labels_.canonical(n));
  return std::polar(1.0, -2.0 * kPi * static_cast<double>(k) /
                             static_cast<double>(w));
}

Tensor QuantumClock::time_translation(std::int64_t n) const {
  return group_.left_regular_action(n);
}

Tensor QuantumClock::energy_shift(std::int64_t m) const {
  const std::int64_t w = labels_.omega;
  Tensor t = Tensor::zeros({static_cast<int>(w)}, {static_cast<int>(w)});
  for (std::int64_t n = 0; n < w; ++n)
    t.at(static_cast<std::size_t>(n), static_cast<std::size_t>(n)) =
        std::conj(pairing_phase(m, n));
  return t;
}

}  // namespace qclock
