#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qclock/errors.hpp"

namespace qclock {

using cplx = std::complex<double>;

/// Result of a tolerance-based tensor comparison. In global-scalar mode
/// `lambda` is the scalar with f ~ lambda * g; in strict mode it is 1.
struct EqualityReport {
  bool pass = false;
  double residual = 0.0;
  cplx lambda = {1.0, 0.0};
  bool scalar_mode = false;
};

enum class CompareMode { kStrict, kUpToGlobalScalar };

/// Dense complex multilinear map between tensor powers of finite-dimensional
/// spaces. A value with no input wires is a state, with no output wires an
/// effect, with neither a scalar. Entries are stored row-major over
/// (output multi-index, input multi-index). Immutable in normal use; all
/// operations return fresh values.
class Tensor {
 public:
  Tensor() : Tensor(zeros({}, {})) {}

  static Tensor zeros(std::vector<int> out_dims, std::vector<int> in_dims);
  static Tensor scalar(cplx value);
  /// Identity on a single wire of dimension d.
  static Tensor identity(int d);
  /// Identity on a list of wires.
  static Tensor identity(const std::vector<int>& dims);
  /// Basis state |index> on a single wire; index taken mod d.
  static Tensor basis_state(int d, std::int64_t index);
  /// Basis state of a multi-wire system at the given linear index.
  static Tensor basis_state(const std::vector<int>& dims,
                            std::size_t linear_index);
  /// The wire crossing [d1, d2] -> [d2, d1].
  static Tensor swap(int d1, int d2);

  const std::vector<int>& in_dims() const { return in_dims_; }
  const std::vector<int>& out_dims() const { return out_dims_; }
  std::size_t in_total() const { return in_total_; }
  std::size_t out_total() const { return out_total_; }
  std::size_t entry_count() const { return entries_.size(); }

  bool is_state() const { return in_dims_.empty(); }
  bool is_effect() const { return out_dims_.empty(); }
  bool is_scalar() const { return in_dims_.empty() && out_dims_.empty(); }

  cplx at(std::size_t out_lin, std::size_t in_lin) const {
    return entries_[out_lin * in_total_ + in_lin];
  }
  cplx& at(std::size_t out_lin, std::size_t in_lin) {
    return entries_[out_lin * in_total_ + in_lin];
  }
  const std::vector<cplx>& entries() const { return entries_; }
  std::vector<cplx>& entries() { return entries_; }

  /// Largest entry magnitude.
  double max_abs() const;
  /// Euclidean norm of the entry vector (2-norm for states).
  double norm2() const;

  /// Throws if any entry is non-finite.
  void require_finite(const std::string& context) const;

  std::string profile_string() const;

 private:
  Tensor(std::vector<int> out_dims, std::vector<int> in_dims,
         std::vector<cplx> entries);

  std::vector<int> in_dims_;
  std::vector<int> out_dims_;
  std::size_t in_total_ = 1;
  std::size_t out_total_ = 1;
  std::vector<cplx> entries_;
};

/// Sequential composition g after f. Requires f.out_dims == g.in_dims.
Tensor compose(const Tensor& g, const Tensor& f);

/// Parallel composition; f's wires come first on both sides.
Tensor tensor_product(const Tensor& f, const Tensor& g);

/// Conjugate transpose; swaps the wire profiles. Involutive exactly.
Tensor dagger(const Tensor& f);

Tensor operator*(cplx s, const Tensor& f);
Tensor operator+(const Tensor& a, const Tensor& b);
Tensor operator-(const Tensor& a, const Tensor& b);

/// Max-norm of the entrywise difference. Requires equal profiles.
double max_abs_diff(const Tensor& a, const Tensor& b);

/// Tolerance comparison. Strict mode: max-entry difference <= tol.
/// Global-scalar mode: exists lambda != 0 with ||f - lambda g||_max <= tol,
/// lambda anchored at the largest-magnitude entry of g and rejected when
/// |lambda| < tol. The report always carries the achieved residual.
EqualityReport approx_equal(const Tensor& f, const Tensor& g, double tol,
                            CompareMode mode = CompareMode::kStrict);

/// Applies `op` to the consecutive output wires [first_wire,
/// first_wire + op.in_dims.size()) of a state (a Tensor with no inputs).
/// Ops with no input wires insert fresh wires at that position; ops with no
/// output wires contract wires away. Zero state entries are skipped, so
/// pushing basis states through generator pipelines stays cheap.
Tensor apply_to_wires(const Tensor& op, const Tensor& state,
                      std::size_t first_wire);

/// Reorders the wires of a state: wire i of the result is wire perm[i] of
/// the input. perm must be a permutation of 0..n-1.
Tensor permute_state_wires(const Tensor& state,
                           const std::vector<std::size_t>& perm);

/// Assembles a dense map column by column: `column(k)` must return the state
/// obtained by feeding the k-th basis state of `in_dims` through some
/// pipeline. All columns must share one output profile.
Tensor from_columns(const std::vector<int>& in_dims,
                    const std::function<Tensor(std::size_t)>& column);

}  // namespace qclock
