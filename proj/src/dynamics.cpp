#include "qclock/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace qclock {

namespace {

double unitarity_residual(const Tensor& u) {
  const Tensor id = Tensor::identity(u.out_dims());
  return std::max(max_abs_diff(compose(dagger(u), u), id),
                  max_abs_diff(compose(u, dagger(u)), id));
}

// Assembled diagram checks materialise tensors of size ~ d^2 w^3; keep them
// to small carriers and fall back to the per-step forms (same residuals,
// exactly) beyond that.
bool assembled_feasible(std::int64_t w, int d) {
  const double cost = static_cast<double>(d) * d * w * w * w;
  return cost <= 8.0e6;
}

}  // namespace

DynamicalSystem::DynamicalSystem(QuantumClock c, int dim,
                                 std::vector<Tensor> family)
    : clock_(std::move(c)), dim_(dim), family_(std::move(family)) {}

Tensor DynamicalSystem::assembled() const {
  const std::int64_t w = clock_.omega();
  const int d = dim_;
  Tensor alpha = Tensor::zeros({d}, {d, static_cast<int>(w)});
  for (std::int64_t n = 0; n < w; ++n) {
    const Tensor& an = family_[static_cast<std::size_t>(n)];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        alpha.at(static_cast<std::size_t>(i),
                 static_cast<std::size_t>(j) * w + n) =
            an.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  return alpha;
}

DynamicalSystem DynamicalSystem::from_generator(const QuantumClock& c,
                                                const Tensor& u, double tol) {
  if (u.in_dims().size() != 1 || u.out_dims() != u.in_dims())
    throw DimensionMismatch("from_generator: expected a square single-wire "
                            "map, got " + u.profile_string());
  const double ur = unitarity_residual(u);
  if (ur > tol)
    throw NotUnitary("from_generator: unitarity residual " +
                     std::to_string(ur));
  const std::int64_t w = c.omega();
  const int d = u.in_dims()[0];

  Tensor power = Tensor::identity(d);
  std::vector<Tensor> family(static_cast<std::size_t>(w), power);
  for (std::int64_t n = 1; n <= w; ++n) {
    power = compose(u, power);
    if (n < w && n <= c.labels().rep_hi())
      family[static_cast<std::size_t>(n)] = power;
  }
  const double cyc = max_abs_diff(power, Tensor::identity(d));
  if (cyc > tol)
    throw NotCyclic("from_generator: ||U^omega - id||_max = " +
                        std::to_string(cyc) +
                        "; generator spectrum is off the energy grid",
                    cyc);
  // Negative representatives as dagger powers.
  const Tensor ud = dagger(u);
  power = Tensor::identity(d);
  for (std::int64_t k = 1; k < w - c.labels().rep_hi(); ++k) {
    power = compose(ud, power);
    family[static_cast<std::size_t>(w - k)] = power;
  }
  DynamicalSystem sys(c, d, std::move(family));
  sys.validation_ = validate(sys, tol);
  return sys;
}

DynamicalSystem DynamicalSystem::from_spectrum(const QuantumClock& c,
                                               const std::vector<Level>& levels,
                                               double tol) {
  int d = 0;
  std::size_t count = 0;
  for (const auto& lv : levels) {
    for (const auto& v : lv.basis) {
      if (!v.is_state() || v.out_dims().size() != 1)
        throw DimensionMismatch("from_spectrum: basis entries must be "
                                "single-wire states");
      if (d == 0) d = v.out_dims()[0];
      if (v.out_dims()[0] != d)
        throw DimensionMismatch("from_spectrum: basis dimensions differ");
      ++count;
    }
  }
  if (d == 0 || count != static_cast<std::size_t>(d))
    throw IncompleteBasis("from_spectrum: got " + std::to_string(count) +
                          " vectors for dimension " + std::to_string(d));

  std::vector<const Tensor*> all;
  for (const auto& lv : levels)
    for (const auto& v : lv.basis) all.push_back(&v);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const cplx g = compose(dagger(*all[i]), *all[j]).entries()[0];
      const cplx want = i == j ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
      if (std::abs(g - want) > tol)
        throw NonOrthogonal("from_spectrum: basis is not jointly orthonormal "
                            "(Gram residual " + std::to_string(std::abs(g - want)) +
                            ")");
    }

  // Merge duplicate level indices into one projector each.
  std::map<std::int64_t, Tensor> projectors;
  for (const auto& lv : levels) {
    const std::int64_t m = c.labels().canonical(lv.m);
    auto it = projectors.find(m);
    if (it == projectors.end())
      it = projectors.emplace(m, Tensor::zeros({d}, {d})).first;
    for (const auto& v : lv.basis) it->second = it->second + compose(v, dagger(v));
  }

  const std::int64_t w = c.omega();
  std::vector<Tensor> family;
  family.reserve(static_cast<std::size_t>(w));
  for (std::int64_t n = 0; n < w; ++n) {
    Tensor an = Tensor::zeros({d}, {d});
    for (const auto& [m, p] : projectors) an = an + (c.pairing_phase(m, n) * p);
    family.push_back(std::move(an));
  }
  DynamicalSystem sys(c, d, std::move(family));
  sys.validation_ = validate(sys, tol);
  return sys;
}

DynamicalSystem DynamicalSystem::from_family(const QuantumClock& c,
                                             std::vector<Tensor> family,
                                             double tol) {
  if (family.size() != static_cast<std::size_t>(c.omega()))
    throw DimensionMismatch("from_family: need one map per clock state");
  const int d = family.front().out_dims().empty()
                    ? 1
                    : family.front().out_dims()[0];
  for (const auto& t : family)
    if (t.out_dims() != std::vector<int>{d} || t.in_dims() != t.out_dims())
      throw DimensionMismatch("from_family: family entries must be square "
                              "maps on one carrier");
  DynamicalSystem sys(c, d, std::move(family));
  sys.validation_ = validate(sys, tol);
  return sys;
}

DynamicalSystem DynamicalSystem::clock_self_system(const QuantumClock& c) {
  const std::int64_t w = c.omega();
  std::vector<Tensor> family;
  family.reserve(static_cast<std::size_t>(w));
  for (std::int64_t n = 0; n < w; ++n)
    family.push_back(c.group().left_regular_action(n));
  DynamicalSystem sys(c, static_cast<int>(w), std::move(family));
  sys.validation_ = validate(sys, kDefaultTol);
  return sys;
}

AlgebraReport validate(const DynamicalSystem& sys, double tol) {
  const std::int64_t w = sys.clock().omega();
  const int d = sys.system_dim();

  AlgebraReport rep;
  rep.laws.tol = tol;
  auto add = [&](const std::string& name, double res) {
    rep.laws.checks.push_back({name, res, res <= tol});
  };

  double action = 0.0, selfconj = 0.0, transpose = 0.0, unitarity = 0.0;
  if (assembled_feasible(w, d)) {
    const auto& x = sys.clock().group().xdot();
    const Tensor alpha = sys.assembled();
    const Tensor id_h = Tensor::identity(d);
    const Tensor id_g = Tensor::identity(static_cast<int>(w));

    action = max_abs_diff(
        compose(alpha, tensor_product(alpha, id_g)),
        compose(alpha, tensor_product(id_h, x.mult())));

    selfconj = max_abs_diff(
        compose(tensor_product(alpha, id_g), tensor_product(id_h, x.comult())),
        compose(dagger(alpha), alpha));

    const Tensor cup_z = sys.clock().group().zdot().cup_cap().first;
    transpose = max_abs_diff(
        dagger(alpha),
        compose(tensor_product(alpha, sys.clock().group().antipode()),
                tensor_product(id_h, cup_z)));
  } else {
    // Beyond the materialisation limit, check the same laws per step. Up to
    // moderate carriers every pair is swept; above that a generating
    // schedule (steps of alpha_1) is used, which pins down the same laws.
    const bool all_pairs = w <= 1024;
    const Tensor& a1 = sys.evaluate_at(1);
    for (std::int64_t n = 0; n < w; ++n) {
      const Tensor& an = sys.evaluate_at(n);
      transpose = std::max(transpose,
                           max_abs_diff(dagger(an), sys.evaluate_at(-n)));
      if (all_pairs) {
        for (std::int64_t m = 0; m < w; ++m) {
          action = std::max(action,
                            max_abs_diff(compose(an, sys.evaluate_at(m)),
                                         sys.evaluate_at(n + m)));
          selfconj = std::max(
              selfconj, max_abs_diff(compose(dagger(sys.evaluate_at(m)), an),
                                     sys.evaluate_at(n - m)));
        }
      } else {
        action = std::max(action, max_abs_diff(compose(a1, an),
                                               sys.evaluate_at(n + 1)));
        selfconj = std::max(selfconj, max_abs_diff(compose(dagger(a1), an),
                                                   sys.evaluate_at(n - 1)));
      }
    }
  }
  const double unit = max_abs_diff(sys.evaluate_at(0), Tensor::identity(d));
  for (std::int64_t n = 0; n < w; ++n)
    unitarity = std::max(unitarity, unitarity_residual(sys.evaluate_at(n)));

  add("action", action);
  add("unit", unit);
  add("self_conjugacy", selfconj);
  add("self_conjugacy_transpose", transpose);
  add("unitarity", unitarity);
  rep.conditions_agree = (selfconj <= tol) == (transpose <= tol);
  return rep;
}

EqualityReport is_equivariant(const Tensor& phi, const DynamicalSystem& a,
                              const DynamicalSystem& b, double tol) {
  if (!(a.clock() == b.clock()))
    throw ClockMismatch("is_equivariant: systems live on different clocks");
  if (phi.in_dims() != std::vector<int>{a.system_dim()} ||
      phi.out_dims() != std::vector<int>{b.system_dim()})
    throw DimensionMismatch("is_equivariant: map profile " +
                            phi.profile_string() + " does not match systems");
  const std::int64_t w = a.clock().omega();
  double res = 0.0;
  for (std::int64_t n = 0; n < w; ++n)
    res = std::max(res, max_abs_diff(compose(phi, a.evaluate_at(n)),
                                     compose(b.evaluate_at(n), phi)));
  if (assembled_feasible(w, std::max(a.system_dim(), b.system_dim()))) {
    const Tensor id_g = Tensor::identity(static_cast<int>(w));
    res = std::max(res, max_abs_diff(
                            compose(phi, a.assembled()),
                            compose(b.assembled(), tensor_product(phi, id_g))));
  }
  EqualityReport rep;
  rep.residual = res;
  rep.pass = res <= tol;
  return rep;
}

DynamicalSystem tensor_compose(const DynamicalSystem& a,
                               const DynamicalSystem& b) {
  if (!(a.clock() == b.clock()))
    throw ClockMismatch("tensor_compose: systems live on different clocks");
  const std::int64_t w = a.clock().omega();
  std::vector<Tensor> family;
  family.reserve(static_cast<std::size_t>(w));
  for (std::int64_t n = 0; n < w; ++n)
    family.push_back(tensor_product(a.evaluate_at(n), b.evaluate_at(n)));
  // Composite carriers have a two-wire profile; flatten to one wire.
  const int d = a.system_dim() * b.system_dim();
  for (auto& t : family) {
    Tensor flat = Tensor::zeros({d}, {d});
    flat.entries() = t.entries();
    t = std::move(flat);
  }
  return DynamicalSystem::from_family(a.clock(), std::move(family));
}

History::History(DynamicalSystem sys, Tensor initial)
    : system_(std::move(sys)), initial_(std::move(initial)) {
  if (!initial_.is_state() ||
      initial_.out_dims() != std::vector<int>{system_.system_dim()})
    throw DimensionMismatch("history: initial state must live on the system "
                            "carrier");
}

Tensor History::trajectory(std::int64_t n) const {
  return compose(system_.evaluate_at(n), initial_);
}

Tensor History::intertwiner() const {
  const std::int64_t w = system_.clock().omega();
  return from_columns({static_cast<int>(w)}, [&](std::size_t n) {
    return trajectory(static_cast<std::int64_t>(n));
  });
}

}  // namespace qclock
