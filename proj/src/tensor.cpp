#include "qclock/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qclock {

namespace {

constexpr std::size_t kMaxEntries = std::size_t(1) << 27;  // ~2 GiB of cplx

std::size_t checked_product(const std::vector<int>& dims) {
  std::size_t total = 1;
  for (int d : dims) {
    if (d <= 0) throw InvalidDimension("wire dimension must be positive");
    if (total > kMaxEntries / static_cast<std::size_t>(d))
      throw TensorTooLarge("wire profile exceeds dense storage limit");
    total *= static_cast<std::size_t>(d);
  }
  return total;
}

std::string dims_string(const std::vector<int>& dims) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) os << ",";
    os << dims[i];
  }
  os << "]";
  return os.str();
}

}  // namespace

Tensor::Tensor(std::vector<int> out_dims, std::vector<int> in_dims,
               std::vector<cplx> entries)
    : in_dims_(std::move(in_dims)),
      out_dims_(std::move(out_dims)),
      entries_(std::move(entries)) {
  in_total_ = checked_product(in_dims_);
  out_total_ = checked_product(out_dims_);
}

Tensor Tensor::zeros(std::vector<int> out_dims, std::vector<int> in_dims) {
  std::size_t out_total = checked_product(out_dims);
  std::size_t in_total = checked_product(in_dims);
  if (in_total != 0 && out_total > kMaxEntries / in_total)
    throw TensorTooLarge("tensor exceeds dense storage limit");
  return Tensor(std::move(out_dims), std::move(in_dims),
                std::vector<cplx>(out_total * in_total, cplx(0.0, 0.0)));
}

Tensor Tensor::scalar(cplx value) {
  Tensor t = zeros({}, {});
  t.entries_[0] = value;
  return t;
}

Tensor Tensor::identity(int d) { return identity(std::vector<int>{d}); }

Tensor Tensor::identity(const std::vector<int>& dims) {
  Tensor t = zeros(dims, dims);
  for (std::size_t i = 0; i < t.in_total_; ++i) t.at(i, i) = 1.0;
  return t;
}

Tensor Tensor::basis_state(int d, std::int64_t index) {
  if (d <= 0) throw InvalidDimension("basis_state: dimension must be positive");
  std::int64_t r = ((index % d) + d) % d;
  Tensor t = zeros({d}, {});
  t.at(static_cast<std::size_t>(r), 0) = 1.0;
  return t;
}

Tensor Tensor::basis_state(const std::vector<int>& dims,
                           std::size_t linear_index) {
  Tensor t = zeros(dims, {});
  t.at(linear_index, 0) = 1.0;
  return t;
}

Tensor Tensor::swap(int d1, int d2) {
  Tensor t = zeros({d2, d1}, {d1, d2});
  for (int a = 0; a < d1; ++a)
    for (int b = 0; b < d2; ++b)
      t.at(static_cast<std::size_t>(b) * d1 + a,
           static_cast<std::size_t>(a) * d2 + b) = 1.0;
  return t;
}

double Tensor::max_abs() const {
  double m = 0.0;
  for (const cplx& v : entries_) m = std::max(m, std::abs(v));
  return m;
}

double Tensor::norm2() const {
  double s = 0.0;
  for (const cplx& v : entries_) s += std::norm(v);
  return std::sqrt(s);
}

void Tensor::require_finite(const std::string& context) const {
  for (const cplx& v : entries_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw ParseError(context + ": tensor entry is not finite");
  }
}

std::string Tensor::profile_string() const {
  return dims_string(in_dims_) + " -> " + dims_string(out_dims_);
}

Tensor compose(const Tensor& g, const Tensor& f) {
  if (f.out_dims() != g.in_dims())
    throw DimensionMismatch("compose: inner profiles differ, f " +
                            f.profile_string() + " vs g " +
                            g.profile_string());
  Tensor r = Tensor::zeros(g.out_dims(), f.in_dims());
  const std::size_t m = g.out_total();
  const std::size_t k = g.in_total();
  const std::size_t n = f.in_total();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      const cplx gv = g.at(i, p);
      if (gv == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) r.at(i, j) += gv * f.at(p, j);
    }
  }
  return r;
}

Tensor tensor_product(const Tensor& f, const Tensor& g) {
  std::vector<int> out_dims = f.out_dims();
  out_dims.insert(out_dims.end(), g.out_dims().begin(), g.out_dims().end());
  std::vector<int> in_dims = f.in_dims();
  in_dims.insert(in_dims.end(), g.in_dims().begin(), g.in_dims().end());
  Tensor r = Tensor::zeros(std::move(out_dims), std::move(in_dims));
  const std::size_t go = g.out_total(), gi = g.in_total();
  for (std::size_t fo = 0; fo < f.out_total(); ++fo)
    for (std::size_t fi = 0; fi < f.in_total(); ++fi) {
      const cplx fv = f.at(fo, fi);
      if (fv == cplx(0.0, 0.0)) continue;
      for (std::size_t oo = 0; oo < go; ++oo)
        for (std::size_t ii = 0; ii < gi; ++ii)
          r.at(fo * go + oo, fi * gi + ii) = fv * g.at(oo, ii);
    }
  return r;
}

Tensor dagger(const Tensor& f) {
  Tensor r = Tensor::zeros(f.in_dims(), f.out_dims());
  for (std::size_t o = 0; o < f.out_total(); ++o)
    for (std::size_t i = 0; i < f.in_total(); ++i)
      r.at(i, o) = std::conj(f.at(o, i));
  return r;
}

Tensor operator*(cplx s, const Tensor& f) {
  Tensor r = f;
  for (cplx& v : r.entries()) v *= s;
  return r;
}

Tensor operator+(const Tensor& a, const Tensor& b) {
  if (a.in_dims() != b.in_dims() || a.out_dims() != b.out_dims())
    throw DimensionMismatch("operator+: profiles differ");
  Tensor r = a;
  for (std::size_t i = 0; i < r.entries().size(); ++i)
    r.entries()[i] += b.entries()[i];
  return r;
}

Tensor operator-(const Tensor& a, const Tensor& b) {
  return a + (cplx(-1.0, 0.0) * b);
}

double max_abs_diff(const Tensor& a, const Tensor& b) {
  if (a.in_dims() != b.in_dims() || a.out_dims() != b.out_dims())
    throw DimensionMismatch("max_abs_diff: profiles differ, " +
                            a.profile_string() + " vs " + b.profile_string());
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

EqualityReport approx_equal(const Tensor& f, const Tensor& g, double tol,
                            CompareMode mode) {
  if (f.in_dims() != g.in_dims() || f.out_dims() != g.out_dims())
    throw DimensionMismatch("approx_equal: profiles differ, " +
                            f.profile_string() + " vs " + g.profile_string());
  EqualityReport rep;
  rep.scalar_mode = (mode == CompareMode::kUpToGlobalScalar);
  if (!rep.scalar_mode) {
    rep.lambda = cplx(1.0, 0.0);
    rep.residual = max_abs_diff(f, g);
    rep.pass = rep.residual <= tol;
    return rep;
  }
  // Anchor lambda at the largest-magnitude entry of g (first such entry in
  // row-major order on ties).
  std::size_t anchor = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < g.entries().size(); ++i) {
    double m = std::abs(g.entries()[i]);
    if (m > best) {
      best = m;
      anchor = i;
    }
  }
  if (best <= 0.0) {
    // g vanishes; equality holds only if f vanishes too.
    rep.lambda = cplx(1.0, 0.0);
    rep.residual = f.max_abs();
    rep.pass = rep.residual <= tol;
    return rep;
  }
  rep.lambda = f.entries()[anchor] / g.entries()[anchor];
  if (std::abs(rep.lambda) < tol) {
    rep.residual = f.max_abs();
    rep.pass = false;
    return rep;
  }
  double m = 0.0;
  for (std::size_t i = 0; i < f.entries().size(); ++i)
    m = std::max(m, std::abs(f.entries()[i] - rep.lambda * g.entries()[i]));
  rep.residual = m;
  rep.pass = m <= tol;
  return rep;
}

Tensor apply_to_wires(const Tensor& op, const Tensor& state,
                      std::size_t first_wire) {
  if (!state.is_state())
    throw DimensionMismatch("apply_to_wires: target must be a state");
  const std::vector<int>& sd = state.out_dims();
  const std::size_t k = op.in_dims().size();
  if (first_wire + k > sd.size())
    throw DimensionMismatch("apply_to_wires: wire range out of bounds");
  for (std::size_t i = 0; i < k; ++i)
    if (sd[first_wire + i] != op.in_dims()[i])
      throw DimensionMismatch("apply_to_wires: wire dimensions differ at " +
                              std::to_string(first_wire + i));

  std::vector<int> rd(sd.begin(), sd.begin() + first_wire);
  rd.insert(rd.end(), op.out_dims().begin(), op.out_dims().end());
  rd.insert(rd.end(), sd.begin() + first_wire + k, sd.end());

  std::size_t suffix = 1;
  for (std::size_t i = first_wire + k; i < sd.size(); ++i)
    suffix *= static_cast<std::size_t>(sd[i]);
  const std::size_t mid_in = op.in_total();
  const std::size_t mid_out = op.out_total();
  const std::size_t prefix = state.out_total() / (mid_in * suffix);

  Tensor r = Tensor::zeros(std::move(rd), {});
  for (std::size_t p = 0; p < prefix; ++p) {
    for (std::size_t i = 0; i < mid_in; ++i) {
      for (std::size_t s = 0; s < suffix; ++s) {
        const cplx v = state.at((p * mid_in + i) * suffix + s, 0);
        if (v == cplx(0.0, 0.0)) continue;
        for (std::size_t o = 0; o < mid_out; ++o)
          r.at((p * mid_out + o) * suffix + s, 0) += op.at(o, i) * v;
      }
    }
  }
  return r;
}

Tensor permute_state_wires(const Tensor& state,
                           const std::vector<std::size_t>& perm) {
  if (!state.is_state())
    throw DimensionMismatch("permute_state_wires: target must be a state");
  const std::vector<int>& sd = state.out_dims();
  if (perm.size() != sd.size())
    throw DimensionMismatch("permute_state_wires: permutation size mismatch");
  std::vector<int> rd(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) rd[i] = sd[perm[i]];

  std::vector<std::size_t> old_stride(sd.size(), 1);
  for (std::size_t i = sd.size(); i-- > 1;)
    old_stride[i - 1] = old_stride[i] * static_cast<std::size_t>(sd[i]);

  Tensor r = Tensor::zeros(rd, {});
  const std::size_t total = state.out_total();
  std::vector<std::size_t> idx(rd.size(), 0);
  for (std::size_t lin = 0; lin < total; ++lin) {
    // Decode lin against the result dims, look up the source entry.
    std::size_t rem = lin;
    std::size_t src = 0;
    for (std::size_t i = 0; i < rd.size(); ++i) {
      std::size_t stride = 1;
      for (std::size_t j = i + 1; j < rd.size(); ++j)
        stride *= static_cast<std::size_t>(rd[j]);
      idx[i] = rem / stride;
      rem %= stride;
      src += idx[i] * old_stride[perm[i]];
    }
    r.at(lin, 0) = state.at(src, 0);
  }
  return r;
}

Tensor from_columns(const std::vector<int>& in_dims,
                    const std::function<Tensor(std::size_t)>& column) {
  std::size_t in_total = 1;
  for (int d : in_dims) in_total *= static_cast<std::size_t>(d);
  Tensor first = column(0);
  Tensor r = Tensor::zeros(first.out_dims(), in_dims);
  for (std::size_t o = 0; o < first.out_total(); ++o)
    r.at(o, 0) = first.at(o, 0);
  for (std::size_t c = 1; c < in_total; ++c) {
    Tensor col = column(c);
    if (col.out_dims() != first.out_dims())
      throw DimensionMismatch("from_columns: inconsistent column profiles");
    for (std::size_t o = 0; o < col.out_total(); ++o) r.at(o, c) = col.at(o, 0);
  }
  return r;
}

}  // namespace qclock
