#include "qclock/spectra.hpp"

#include <algorithm>
#include <cmath>

namespace qclock {

ProjectorFamily projector_family(const DynamicalSystem& sys) {
  if (!sys.validation().all_pass())
    throw InvalidSystem("projector_family: system failed validation");
  const std::int64_t w = sys.clock().omega();
  const int d = sys.system_dim();
  const Tensor alpha_dag = dagger(sys.assembled());
  const Tensor id_h = Tensor::identity(d);
  const cplx inv_w(1.0 / static_cast<double>(w), 0.0);

  ProjectorFamily fam{sys.clock(), d, {}};
  fam.members.reserve(static_cast<std::size_t>(w));
  for (std::int64_t m = 0; m < w; ++m) {
    const Tensor bra = dagger(sys.clock().energy_state(m));
    fam.members.push_back(
        inv_w * compose(tensor_product(id_h, bra), alpha_dag));
  }
  return fam;
}

LawReport check_family(const ProjectorFamily& fam, double tol) {
  const std::int64_t w = fam.clock.omega();
  const int d = fam.system_dim;
  LawReport rep;
  rep.tol = tol;

  double ortho = 0.0;
  for (std::int64_t m = 0; m < w; ++m)
    for (std::int64_t k = 0; k <= m; ++k) {
      const Tensor prod = compose(fam.members[static_cast<std::size_t>(m)],
                                  fam.members[static_cast<std::size_t>(k)]);
      const double res =
          m == k ? max_abs_diff(prod, fam.members[static_cast<std::size_t>(m)])
                 : prod.max_abs();
      ortho = std::max(ortho, res);
    }
  rep.checks.push_back({"orthogonality", ortho, ortho <= tol});

  Tensor sum = Tensor::zeros({d}, {d});
  for (const auto& p : fam.members) sum = sum + p;
  const double comp = max_abs_diff(sum, Tensor::identity(d));
  rep.checks.push_back({"completeness", comp, comp <= tol});

  double adj = 0.0;
  for (const auto& p : fam.members)
    adj = std::max(adj, max_abs_diff(dagger(p), p));
  rep.checks.push_back({"self_adjointness", adj, adj <= tol});
  return rep;
}

Tensor ergodic_projector(const DynamicalSystem& sys, std::int64_t m) {
  if (!sys.validation().all_pass())
    throw InvalidSystem("ergodic_projector: system failed validation");
  const std::int64_t w = sys.clock().omega();
  const int d = sys.system_dim();
  Tensor acc = Tensor::zeros({d}, {d});
  for (std::int64_t n = 0; n < w; ++n) {
    const cplx phase = std::conj(sys.clock().pairing_phase(m, n));
    acc = acc + (phase * sys.evaluate_at(n));
  }
  return cplx(1.0 / static_cast<double>(w), 0.0) * acc;
}

Tensor stone_reconstruct(const ProjectorFamily& fam, std::int64_t n) {
  const std::int64_t w = fam.clock.omega();
  const int d = fam.system_dim;
  if (fam.members.size() != static_cast<std::size_t>(w))
    throw InvalidFamily("stone_reconstruct: need one projector per level");
  Tensor acc = Tensor::zeros({d}, {d});
  for (std::int64_t m = 0; m < w; ++m) {
    const Tensor& p = fam.members[static_cast<std::size_t>(m)];
    if (p.out_dims() != std::vector<int>{d} || p.in_dims() != p.out_dims())
      throw InvalidFamily("stone_reconstruct: member profile mismatch");
    acc = acc + (fam.clock.pairing_phase(m, n) * p);
  }
  return acc;
}

double schrodinger_residual(const DynamicalSystem& sys, const Tensor& psi,
                            std::int64_t m) {
  if (!psi.is_state() ||
      psi.out_dims() != std::vector<int>{sys.system_dim()})
    throw DimensionMismatch("schrodinger_residual: psi must be a state on "
                            "the system carrier");
  const double norm = psi.norm2();
  if (norm <= 0.0)
    throw ZeroState("schrodinger_residual: psi has zero norm");
  const std::int64_t w = sys.clock().omega();
  double worst = 0.0;
  for (std::int64_t n = 0; n < w; ++n) {
    const Tensor moved = compose(sys.evaluate_at(n), psi);
    const Tensor expected = sys.clock().pairing_phase(m, n) * psi;
    worst = std::max(worst, (moved - expected).norm2());
  }
  return worst / norm;
}

double weyl_residual(const QuantumClock& c, std::int64_t m, std::int64_t n) {
  const Tensor t = c.time_translation(n);
  const Tensor s_dag = dagger(c.energy_shift(m));
  const Tensor lhs = compose(s_dag, t);
  const Tensor rhs = c.pairing_phase(m, n) * compose(t, s_dag);
  return max_abs_diff(lhs, rhs);
}

std::vector<SpectrumRow> spectrum_summary(const ProjectorFamily& fam) {
  const std::int64_t w = fam.clock.omega();
  const int d = fam.system_dim;
  std::vector<SpectrumRow> rows;
  rows.reserve(static_cast<std::size_t>(w));
  for (std::int64_t m = 0; m < w; ++m) {
    const Tensor& p = fam.members[static_cast<std::size_t>(m)];
    cplx tr(0.0, 0.0);
    for (int i = 0; i < d; ++i)
      tr += p.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
    SpectrumRow row;
    row.m = fam.clock.labels().representative(m);
    row.energy = fam.clock.labels().energy_of(m);
    row.rank = static_cast<int>(std::lround(tr.real()));
    row.idempotence_residual = max_abs_diff(compose(p, p), p);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qclock
