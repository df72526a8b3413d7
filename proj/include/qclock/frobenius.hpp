#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "qclock/report.hpp"
#include "qclock/tensor.hpp"

namespace qclock {

/// Law residuals for one monoid-with-dagger-comonoid structure, plus the
/// extracted normalisation factor N (mult . comult == N id when the
/// quasi-speciality check passes).
struct FrobeniusLawReport {
  LawReport laws;
  double normalisation = 1.0;
  bool all_pass() const { return laws.all_pass(); }
};

/// A monoid (mult, unit) on one carrier together with the comonoid obtained
/// by dagger. Instances are constructible even when the algebra laws fail
/// (for negative tests); `valid()` reports whether the full law suite holds.
/// Immutable and freely shareable; the law residuals are computed once on
/// first use.
class FrobeniusStructure {
 public:
  /// The special commutative structure of the standard basis:
  /// comult |n> = |n>|n>, counit |n> = 1, N == 1.
  static FrobeniusStructure from_basis(int d);

  /// Wraps an arbitrary monoid; comonoid halves are always derived via
  /// dagger, never supplied independently.
  static FrobeniusStructure from_monoid(Tensor mult, Tensor unit);

  int dim() const { return dim_; }
  const Tensor& mult() const { return mult_; }
  const Tensor& unit() const { return unit_; }
  const Tensor& comult() const { return comult_; }
  const Tensor& counit() const { return counit_; }

  /// N = tr(mult . mult^dagger) / d; equals the quasi-speciality scalar for
  /// law-abiding structures.
  double normalisation_factor() const { return normalisation_; }

  /// Residuals for: associativity, bilateral unitality, both Frobenius
  /// equalities, quasi-speciality, cup/cap symmetry, commutativity and both
  /// snake composites. Failures are report entries, not errors.
  FrobeniusLawReport check_laws(double tol) const;

  bool valid(double tol) const { return check_laws(tol).all_pass(); }

  /// All states copied by comult, deleted by counit and self-conjugate,
  /// each verified to tol. Found by simultaneous diagonalisation of the
  /// left-multiplication operators; output ordered by descending
  /// lexicographic eigenvalue tuple. Requires a commutative structure.
  std::vector<Tensor> classical_states(double tol) const;

  /// cup = comult . unit and cap = dagger(cup). Both snake composites
  /// against these equal the identity (see check_laws).
  std::pair<Tensor, Tensor> cup_cap() const;

 private:
  FrobeniusStructure(int dim, Tensor mult, Tensor unit);

  struct ResidualCache;

  int dim_;
  Tensor mult_, unit_, comult_, counit_;
  double normalisation_;
  std::shared_ptr<ResidualCache> cache_;
};

}  // namespace qclock
