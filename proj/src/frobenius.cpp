#include "qclock/frobenius.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <mutex>

namespace qclock {

struct FrobeniusStructure::ResidualCache {
  std::once_flag once;
  std::vector<std::pair<std::string, double>> residuals;
};

FrobeniusStructure::FrobeniusStructure(int dim, Tensor mult, Tensor unit)
    : dim_(dim),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      comult_(dagger(mult_)),
      counit_(dagger(unit_)),
      cache_(std::make_shared<ResidualCache>()) {
  // tr(mult . mult^dagger) equals the squared Frobenius norm of mult.
  double s = 0.0;
  for (const cplx& v : mult_.entries()) s += std::norm(v);
  normalisation_ = s / static_cast<double>(dim_);
}

FrobeniusStructure FrobeniusStructure::from_basis(int d) {
  if (d < 1) throw InvalidDimension("from_basis: dimension must be >= 1");
  Tensor mult = Tensor::zeros({d}, {d, d});
  for (int n = 0; n < d; ++n)
    mult.at(static_cast<std::size_t>(n),
            static_cast<std::size_t>(n) * d + n) = 1.0;
  Tensor unit = Tensor::zeros({d}, {});
  for (int n = 0; n < d; ++n) unit.at(static_cast<std::size_t>(n), 0) = 1.0;
  return FrobeniusStructure(d, std::move(mult), std::move(unit));
}

FrobeniusStructure FrobeniusStructure::from_monoid(Tensor mult, Tensor unit) {
  if (mult.out_dims().size() != 1 || mult.in_dims().size() != 2)
    throw DimensionMismatch("from_monoid: mult must map d.d -> d, got " +
                            mult.profile_string());
  const int d = mult.out_dims()[0];
  if (mult.in_dims()[0] != d || mult.in_dims()[1] != d)
    throw DimensionMismatch("from_monoid: mult wires must share one carrier");
  if (!unit.is_state() || unit.out_dims() != std::vector<int>{d})
    throw DimensionMismatch("from_monoid: unit must be a state on the carrier");
  return FrobeniusStructure(d, std::move(mult), std::move(unit));
}

std::pair<Tensor, Tensor> FrobeniusStructure::cup_cap() const {
  Tensor cup = compose(comult_, unit_);
  return {cup, dagger(cup)};
}

FrobeniusLawReport FrobeniusStructure::check_laws(double tol) const {
  std::call_once(cache_->once, [this] {
    auto& out = cache_->residuals;
    const int d = dim_;
    const std::vector<int> one{d}, two{d, d}, three{d, d, d};

    auto col3 = [&](bool left_first) {
      return from_columns(three, [&](std::size_t c) {
        Tensor s = Tensor::basis_state(three, c);
        s = apply_to_wires(mult_, s, left_first ? 0 : 1);
        return apply_to_wires(mult_, s, 0);
      });
    };
    out.emplace_back("associativity",
                     max_abs_diff(col3(true), col3(false)));

    const Tensor id1 = Tensor::identity(d);
    auto unit_side = [&](bool left) {
      return from_columns(one, [&](std::size_t c) {
        Tensor s = Tensor::basis_state(one, c);
        s = apply_to_wires(unit_, s, left ? 0 : 1);
        return apply_to_wires(mult_, s, 0);
      });
    };
    out.emplace_back("unit_left", max_abs_diff(unit_side(true), id1));
    out.emplace_back("unit_right", max_abs_diff(unit_side(false), id1));

    Tensor frob_mid = from_columns(two, [&](std::size_t c) {
      Tensor s = Tensor::basis_state(two, c);
      s = apply_to_wires(mult_, s, 0);
      return apply_to_wires(comult_, s, 0);
    });
    Tensor frob_left = from_columns(two, [&](std::size_t c) {
      Tensor s = Tensor::basis_state(two, c);
      s = apply_to_wires(comult_, s, 0);
      return apply_to_wires(mult_, s, 1);
    });
    Tensor frob_right = from_columns(two, [&](std::size_t c) {
      Tensor s = Tensor::basis_state(two, c);
      s = apply_to_wires(comult_, s, 1);
      return apply_to_wires(mult_, s, 0);
    });
    out.emplace_back("frobenius_left", max_abs_diff(frob_left, frob_mid));
    out.emplace_back("frobenius_right", max_abs_diff(frob_right, frob_mid));

    Tensor mc = from_columns(one, [&](std::size_t c) {
      Tensor s = Tensor::basis_state(one, c);
      s = apply_to_wires(comult_, s, 0);
      return apply_to_wires(mult_, s, 0);
    });
    double qs = normalisation_ > 0.0
                    ? max_abs_diff(mc, cplx(normalisation_, 0.0) * id1)
                    : mc.max_abs() + 1.0;
    out.emplace_back("quasi_speciality", qs);

    auto [cup, cap] = cup_cap();
    out.emplace_back("symmetry_cup",
                     max_abs_diff(permute_state_wires(cup, {1, 0}), cup));
    out.emplace_back(
        "symmetry_cap",
        max_abs_diff(compose(cap, Tensor::swap(d, d)), cap));

    double comm = 0.0;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int i = 0; i < d; ++i)
          comm = std::max(
              comm, std::abs(mult_.at(i, static_cast<std::size_t>(a) * d + b) -
                             mult_.at(i, static_cast<std::size_t>(b) * d + a)));
    out.emplace_back("commutativity", comm);

    Tensor snake_left = from_columns(one, [&](std::size_t c) {
      Tensor s = Tensor::basis_state(one, c);
      s = apply_to_wires(cup, s, 0);
      return apply_to_wires(cap, s, 1);
    });
    Tensor snake_right = from_columns(one, [&](std::size_t c) {
      Tensor s = Tensor::basis_state(one, c);
      s = apply_to_wires(cup, s, 1);
      return apply_to_wires(cap, s, 0);
    });
    out.emplace_back("snake_left", max_abs_diff(snake_left, id1));
    out.emplace_back("snake_right", max_abs_diff(snake_right, id1));
  });

  FrobeniusLawReport rep;
  rep.normalisation = normalisation_;
  rep.laws.tol = tol;
  for (const auto& [name, res] : cache_->residuals)
    rep.laws.checks.push_back({name, res, res <= tol});
  return rep;
}

namespace {

struct Candidate {
  Eigen::VectorXcd ray;
  std::vector<cplx> tuple;
};

bool tuple_less_desc(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() > b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() > b[i].imag();
  }
  return a.size() < b.size();
}

}  // namespace

std::vector<Tensor> FrobeniusStructure::classical_states(double tol) const {
  const int d = dim_;
  const auto* comm = check_laws(tol).laws.find("commutativity");
  if (comm == nullptr || !comm->pass)
    throw NotCommutative(
        "classical_states: commutativity residual " +
        std::to_string(comm ? comm->residual : 1.0) + " exceeds tolerance");

  // Simultaneously diagonalise the left-multiplication operators
  // M_k = mult . (|k> x id); classical states are common eigenrays.
  std::vector<Eigen::MatrixXcd> left(d, Eigen::MatrixXcd(d, d));
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        left[k](i, j) = mult_.at(static_cast<std::size_t>(i),
                                 static_cast<std::size_t>(k) * d + j);

  struct Sub {
    Eigen::MatrixXcd basis;  // d x s, orthonormal columns
    std::vector<cplx> tuple;
  };
  std::vector<Sub> subs{{Eigen::MatrixXcd::Identity(d, d), {}}};
  const double cluster_tol = 1e-8;

  for (int k = 0; k < d; ++k) {
    std::vector<Sub> next;
    for (auto& sub : subs) {
      const auto s = sub.basis.cols();
      Eigen::MatrixXcd a = sub.basis.adjoint() * left[k] * sub.basis;
      if (s == 1) {
        Sub keep = sub;
        keep.tuple.push_back(a(0, 0));
        next.push_back(std::move(keep));
        continue;
      }
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a);
      std::vector<Eigen::Index> order(s);
      for (Eigen::Index i = 0; i < s; ++i) order[i] = i;
      std::sort(order.begin(), order.end(),
                [&](Eigen::Index x, Eigen::Index y) {
                  const cplx ex = es.eigenvalues()(x);
                  const cplx ey = es.eigenvalues()(y);
                  if (ex.real() != ey.real()) return ex.real() > ey.real();
                  return ex.imag() > ey.imag();
                });
      std::size_t start = 0;
      while (start < order.size()) {
        std::size_t end = start + 1;
        while (end < order.size() &&
               std::abs(es.eigenvalues()(order[end]) -
                        es.eigenvalues()(order[start])) <= cluster_tol)
          ++end;
        Eigen::MatrixXcd vecs(s, static_cast<Eigen::Index>(end - start));
        for (std::size_t i = start; i < end; ++i)
          vecs.col(static_cast<Eigen::Index>(i - start)) =
              es.eigenvectors().col(order[i]);
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(vecs);
        Eigen::MatrixXcd q =
            qr.householderQ() *
            Eigen::MatrixXcd::Identity(s, static_cast<Eigen::Index>(end - start));
        Sub child;
        child.basis = sub.basis * q;
        child.tuple = sub.tuple;
        child.tuple.push_back(es.eigenvalues()(order[start]));
        next.push_back(std::move(child));
        start = end;
      }
    }
    subs = std::move(next);
  }

  std::vector<Candidate> candidates;
  for (auto& sub : subs) {
    if (sub.basis.cols() != 1) continue;  // no classical ray in here
    candidates.push_back({sub.basis.col(0), sub.tuple});
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              return tuple_less_desc(a.tuple, b.tuple);
            });

  auto [cup, cap] = cup_cap();
  std::vector<Tensor> states;
  for (const auto& cand : candidates) {
    Tensor v = Tensor::zeros({d}, {});
    for (int i = 0; i < d; ++i) v.at(static_cast<std::size_t>(i), 0) = cand.ray(i);
    cplx c = compose(counit_, v).entries()[0];
    if (std::abs(c) <= tol) continue;  // cannot be rescaled to counit 1
    Tensor g = (cplx(1.0, 0.0) / c) * v;

    Tensor copied = apply_to_wires(comult_, g, 0);
    Tensor squared = tensor_product(g, g);
    if (max_abs_diff(copied, squared) > tol) continue;
    if (std::abs(compose(counit_, g).entries()[0] - cplx(1.0, 0.0)) > tol)
      continue;
    Tensor conj_g = apply_to_wires(dagger(g), cup, 1);
    if (max_abs_diff(conj_g, g) > tol) continue;
    states.push_back(std::move(g));
  }
  return states;
}

}  // namespace qclock
