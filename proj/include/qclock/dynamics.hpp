#pragma once

#include <cstdint>
#include <vector>

#include "qclock/clock.hpp"
#include "qclock/report.hpp"
#include "qclock/tensor.hpp"

namespace qclock {

inline constexpr double kDefaultTol = 1e-10;

/// Validation record for a dynamical system: residuals for the action law,
/// the unit law, the self-conjugacy condition together with its
/// antipode/cup reformulation, and per-step unitarity. The two
/// self-conjugacy forms must agree on pass/fail for well-posed inputs.
struct AlgebraReport {
  LawReport laws;
  bool conditions_agree = false;
  bool all_pass() const { return laws.all_pass(); }
};

/// One energy level: grid index m and an orthonormal basis of its subspace.
struct Level {
  std::int64_t m = 0;
  std::vector<Tensor> basis;
};

/// A quantum dynamical system for a clock, stored as the unitary family
/// (alpha_n) indexed by canonical residues; the algebra map
/// H (x) G -> H is assembled on demand. Immutable after construction.
class DynamicalSystem {
 public:
  /// Powers of a unitary generator. U must be unitary to tol and satisfy
  /// U^omega == id to tol (NotCyclic otherwise: the spectrum is off the
  /// energy grid). Negative representatives are filled with dagger powers.
  static DynamicalSystem from_generator(const QuantumClock& c, const Tensor& u,
                                        double tol = kDefaultTol);

  /// alpha_n = sum over levels of pairing_phase(m, n) * P_m, with P_m the
  /// projector onto the given subspace. Bases must be jointly orthonormal
  /// and complete.
  static DynamicalSystem from_spectrum(const QuantumClock& c,
                                       const std::vector<Level>& levels,
                                       double tol = kDefaultTol);

  /// Wraps an explicit family without precondition checks; the validation
  /// report records whatever holds. Intended for negative tests.
  static DynamicalSystem from_family(const QuantumClock& c,
                                     std::vector<Tensor> family,
                                     double tol = kDefaultTol);

  /// The clock acting on itself: alpha_n = T_n.
  static DynamicalSystem clock_self_system(const QuantumClock& c);

  const QuantumClock& clock() const { return clock_; }
  int system_dim() const { return dim_; }
  const AlgebraReport& validation() const { return validation_; }

  /// alpha_{n mod omega}; evaluate_at(0) is the identity.
  const Tensor& evaluate_at(std::int64_t n) const {
    return family_[static_cast<std::size_t>(clock_.labels().canonical(n))];
  }

  /// The algebra map alpha: [d, omega] -> [d], sum_n alpha_n (x) <t_n|.
  Tensor assembled() const;

 private:
  DynamicalSystem(QuantumClock c, int dim, std::vector<Tensor> family);

  QuantumClock clock_;
  int dim_;
  std::vector<Tensor> family_;
  AlgebraReport validation_;
};

/// Recomputes the validation report at the given tolerance. Diagram-level
/// (assembled) forms are used when the carrier is small enough to
/// materialise; otherwise the exactly-equivalent per-step forms are used.
AlgebraReport validate(const DynamicalSystem& sys, double tol);

/// Intertwiner check: Phi alpha_n == beta_n Phi for all n, computed both
/// per step and as the single assembled algebra-morphism equation.
EqualityReport is_equivariant(const Tensor& phi, const DynamicalSystem& a,
                              const DynamicalSystem& b,
                              double tol = kDefaultTol);

/// Synchronised parallel composition: family (alpha (x) beta)_n =
/// alpha_n (x) beta_n on the shared clock.
DynamicalSystem tensor_compose(const DynamicalSystem& a,
                               const DynamicalSystem& b);

/// Evolution of one state: trajectory(n) = alpha_n psi0. The assembled
/// intertwiner [omega] -> [d] is an algebra morphism from the clock's
/// self-action to the system.
class History {
 public:
  History(DynamicalSystem sys, Tensor initial);

  const DynamicalSystem& system() const { return system_; }
  const Tensor& initial() const { return initial_; }
  Tensor trajectory(std::int64_t n) const;
  /// Psi = sum_n |trajectory(n)> <t_n|.
  Tensor intertwiner() const;

 private:
  DynamicalSystem system_;
  Tensor initial_;
};

inline History history(const DynamicalSystem& sys, const Tensor& psi0) {
  return History(sys, psi0);
}

}  // namespace qclock
