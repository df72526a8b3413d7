#include "qclock/coherent.hpp"

#include <mutex>
#include <optional>

namespace qclock {

namespace {

std::int64_t mod_pos(std::int64_t n, std::int64_t w) {
  return ((n % w) + w) % w;
}

}  // namespace

struct CoherentGroup::Cache {
  std::once_flag once;
  std::optional<FrobeniusStructure> z;
  std::optional<FrobeniusStructure> x;
  std::optional<Tensor> antipode;
};

CoherentGroup::CoherentGroup(std::int64_t omega)
    : dim_(omega), cache_(std::make_shared<Cache>()) {
  if (omega < 1) throw InvalidDimension("cyclic_pair: omega must be >= 1");
}

CoherentGroup cyclic_pair(std::int64_t omega) { return CoherentGroup(omega); }

CoherentGroup::Cache& CoherentGroup::filled() const {
  std::call_once(cache_->once, [this] {
    Cache& cache = *cache_;
    const std::int64_t omega = dim_;
    const int d = static_cast<int>(omega);
    cache.z = FrobeniusStructure::from_basis(d);

    Tensor xmult = Tensor::zeros({d}, {d, d});
    for (int n = 0; n < d; ++n)
      for (int m = 0; m < d; ++m)
        xmult.at(static_cast<std::size_t>(mod_pos(n + m, omega)),
                 static_cast<std::size_t>(n) * d + m) = 1.0;
    cache.x = FrobeniusStructure::from_monoid(std::move(xmult),
                                              Tensor::basis_state(d, 0));

    Tensor s = Tensor::zeros({d}, {d});
    for (int n = 0; n < d; ++n)
      s.at(static_cast<std::size_t>(mod_pos(-n, omega)),
           static_cast<std::size_t>(n)) = 1.0;
    cache.antipode = std::move(s);
  });
  return *cache_;
}

const FrobeniusStructure& CoherentGroup::zdot() const { return *filled().z; }

const FrobeniusStructure& CoherentGroup::xdot() const { return *filled().x; }

const Tensor& CoherentGroup::antipode() const { return *filled().antipode; }

Tensor CoherentGroup::left_regular_action(std::int64_t n) const {
  const int d = static_cast<int>(dim_);
  Tensor t = Tensor::zeros({d}, {d});
  for (int k = 0; k < d; ++k)
    t.at(static_cast<std::size_t>(mod_pos(k + n, dim_)),
         static_cast<std::size_t>(k)) = 1.0;
  return t;
}

LawReport CoherentGroup::check_strong_complementarity(double tol) const {
  const int d = static_cast<int>(dim_);
  const FrobeniusStructure& z = zdot();
  const FrobeniusStructure& x = xdot();
  const Tensor& s = antipode();
  const std::vector<int> one{d}, two{d, d}, three{d, d, d};
  const Tensor id1 = Tensor::identity(d);

  LawReport rep;
  rep.tol = tol;
  auto add = [&rep, tol](const std::string& name, double res) {
    rep.checks.push_back({name, res, res <= tol});
  };

  Tensor bial_lhs = from_columns(two, [&](std::size_t c) {
    Tensor st = Tensor::basis_state(two, c);
    st = apply_to_wires(x.mult(), st, 0);
    return apply_to_wires(z.comult(), st, 0);
  });
  Tensor bial_rhs = from_columns(two, [&](std::size_t c) {
    Tensor st = Tensor::basis_state(two, c);
    st = apply_to_wires(z.comult(), st, 0);
    st = apply_to_wires(z.comult(), st, 2);
    st = permute_state_wires(st, {0, 2, 1, 3});
    st = apply_to_wires(x.mult(), st, 0);
    return apply_to_wires(x.mult(), st, 1);
  });
  add("bialgebra", max_abs_diff(bial_lhs, bial_rhs));

  Tensor cl = from_columns(two, [&](std::size_t c) {
    Tensor st = Tensor::basis_state(two, c);
    st = apply_to_wires(x.mult(), st, 0);
    return apply_to_wires(z.counit(), st, 0);
  });
  Tensor cr = from_columns(two, [&](std::size_t c) {
    Tensor st = Tensor::basis_state(two, c);
    st = apply_to_wires(z.counit(), st, 0);
    return apply_to_wires(z.counit(), st, 0);
  });
  add("coherence_left", max_abs_diff(cl, cr));

  add("coherence_right",
      max_abs_diff(compose(z.comult(), x.unit()),
                   tensor_product(x.unit(), x.unit())));

  add("bone", max_abs_diff(compose(z.counit(), x.unit()),
                           Tensor::scalar(1.0)));

  auto [cup_z, cap_z] = z.cup_cap();
  auto [cup_x, cap_x] = x.cup_cap();
  Tensor def_a = from_columns(one, [&](std::size_t c) {
    Tensor st = Tensor::basis_state(one, c);
    st = apply_to_wires(cup_z, st, 1);
    return apply_to_wires(cap_x, st, 0);
  });
  Tensor def_b = from_columns(one, [&](std::size_t c) {
    Tensor st = Tensor::basis_state(one, c);
    st = apply_to_wires(cup_x, st, 0);
    return apply_to_wires(cap_z, st, 1);
  });
  add("antipode_definition", max_abs_diff(def_a, def_b));
  add("antipode_matches_definition", max_abs_diff(s, def_a));
  add("antipode_self_adjoint", max_abs_diff(dagger(s), s));
  add("antipode_unitary", max_abs_diff(compose(dagger(s), s), id1));
  add("antipode_self_inverse", max_abs_diff(compose(s, s), id1));

  Tensor hopf_rhs = compose(x.unit(), z.counit());
  auto hopf = [&](std::size_t antipode_wire) {
    return from_columns(one, [&](std::size_t c) {
      Tensor st = Tensor::basis_state(one, c);
      st = apply_to_wires(z.comult(), st, 0);
      st = apply_to_wires(s, st, antipode_wire);
      return apply_to_wires(x.mult(), st, 0);
    });
  };
  add("hopf_left", max_abs_diff(hopf(1), hopf_rhs));
  add("hopf_right", max_abs_diff(hopf(0), hopf_rhs));

  // Frobenius law of the monad _ (x) xdot, instantiated on the clock
  // carrier itself (H = G): maps on three clock wires.
  auto monad_mid = from_columns(three, [&](std::size_t c) {
    Tensor st = Tensor::basis_state(three, c);
    st = apply_to_wires(x.mult(), st, 1);
    return apply_to_wires(x.comult(), st, 1);
  });
  auto monad_l = from_columns(three, [&](std::size_t c) {
    Tensor st = Tensor::basis_state(three, c);
    st = apply_to_wires(x.comult(), st, 2);
    return apply_to_wires(x.mult(), st, 1);
  });
  auto monad_r = from_columns(three, [&](std::size_t c) {
    Tensor st = Tensor::basis_state(three, c);
    st = apply_to_wires(x.comult(), st, 1);
    return apply_to_wires(x.mult(), st, 2);
  });
  add("frobenius_monad_left", max_abs_diff(monad_l, monad_mid));
  add("frobenius_monad_right", max_abs_diff(monad_r, monad_mid));

  return rep;
}

}  // namespace qclock
