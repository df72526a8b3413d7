#pragma once

#include <cstdint>
#include <memory>

#include "qclock/frobenius.hpp"
#include "qclock/report.hpp"
#include "qclock/tensor.hpp"

namespace qclock {

/// A strongly complementary pair on one carrier: the basis structure zdot
/// (special commutative), the cyclic-group structure xdot (quasi-special,
/// N == carrier dim) and the negation antipode. Dense structure tensors are
/// materialised lazily so that large carriers can exist as label-only
/// objects for the grid-refinement paths.
class CoherentGroup {
 public:
  explicit CoherentGroup(std::int64_t omega);

  std::int64_t dim() const { return dim_; }

  const FrobeniusStructure& zdot() const;
  const FrobeniusStructure& xdot() const;
  const Tensor& antipode() const;

  /// The permutation |k> -> |k+n mod omega>; equals xdot.mult partially
  /// applied to |n>. Built directly, without touching the cached structures.
  Tensor left_regular_action(std::int64_t n) const;

  /// Residuals for: bialgebra, both coherence laws, bone law, the antipode
  /// laws (matches its cup/cap definition, self-adjoint, unitary,
  /// self-inverse), Hopf's law in both orders, and the Frobenius law of the
  /// induced monad evaluated on the clock carrier.
  LawReport check_strong_complementarity(double tol) const;

  bool operator==(const CoherentGroup& o) const { return dim_ == o.dim_; }

 private:
  struct Cache;
  Cache& filled() const;

  std::int64_t dim_;
  std::shared_ptr<Cache> cache_;
};

/// The group algebra of Z_omega as a coherent pair.
CoherentGroup cyclic_pair(std::int64_t omega);

}  // namespace qclock
