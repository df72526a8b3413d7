#pragma once

#include <cstdint>
#include <vector>

#include "qclock/dynamics.hpp"

namespace qclock {

/// Complete family of energy projectors for a system, one member per grid
/// index (zero projectors for empty levels, so completeness and
/// reconstruction sums stay index-uniform).
struct ProjectorFamily {
  QuantumClock clock;
  int system_dim = 0;
  std::vector<Tensor> members;  // canonical index 0..omega-1

  const Tensor& member(std::int64_t m) const {
    return members[static_cast<std::size_t>(clock.labels().canonical(m))];
  }
};

/// Projectors via the adjoint-algebra contraction:
/// P_m = (1/omega) (id (x) <E_m|) . dagger(alpha). Requires a validated
/// system (InvalidSystem otherwise).
ProjectorFamily projector_family(const DynamicalSystem& sys);

/// Residuals for mutual orthogonality/idempotence, completeness and
/// self-adjointness of a projector family.
LawReport check_family(const ProjectorFamily& fam, double tol);

/// The phase-weighted group average
/// (1/omega) sum_n exp(+i 2 pi m n / omega) alpha_n, summed in ascending
/// canonical order. Deliberately a separate code path from
/// projector_family; the two agree for valid systems.
Tensor ergodic_projector(const DynamicalSystem& sys, std::int64_t m);

/// alpha_n rebuilt from a projector family:
/// sum_m pairing_phase(m, n) P_m. Throws InvalidFamily on structurally
/// malformed input (wrong member count or profiles); residual-level damage
/// shows up in the reconstruction error instead.
Tensor stone_reconstruct(const ProjectorFamily& fam, std::int64_t n);

/// max_n ||alpha_n psi - pairing_phase(m, n) psi|| / ||psi|| (vector
/// 2-norm). Small iff psi lies in the energy-m eigenspace.
double schrodinger_residual(const DynamicalSystem& sys, const Tensor& psi,
                            std::int64_t m);

/// ||S_m^dagger T_n - pairing_phase(m, n) T_n S_m^dagger||_max; zero for
/// every clock.
double weyl_residual(const QuantumClock& c, std::int64_t m, std::int64_t n);

struct SpectrumRow {
  std::int64_t m = 0;           // balanced representative
  double energy = 0.0;
  int rank = 0;
  double idempotence_residual = 0.0;
};

/// Per-level summary (rank from the projector trace), ascending canonical m.
std::vector<SpectrumRow> spectrum_summary(const ProjectorFamily& fam);

}  // namespace qclock
