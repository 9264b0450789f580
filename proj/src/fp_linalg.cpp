#include "irrep/fp_linalg.hpp"

#include <algorithm>
#include <set>

#include "irrep/errors.hpp"

namespace irrep {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2)
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint32_t e = p - 2;
  while (e) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
    e >>= 1u;
  }
  return static_cast<std::uint32_t>(result);
}

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> entries)
    : p_(p), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw InputError("matrix entry count does not match its shape");
  for (auto& x : data_) x %= p_;
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1 % p;
  return m;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
  return t;
}

std::size_t FpMatrix::rank() const {
  FpSubspace rowspace(p_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    rowspace.add(std::span<const std::uint32_t>(data_.data() + r * cols_, cols_));
  }
  return rowspace.dimension();
}

FpMatrix FpMatrix::inverse() const {
  if (rows_ != cols_) throw InputError("cannot invert a non-square matrix");
  const std::size_t n = rows_;
  // Gauss-Jordan on [A | I].
  std::vector<std::uint64_t> aug(n * 2 * n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r * 2 * n + c] = data_[r * n + c];
    aug[r * 2 * n + n + r] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && aug[pivot * 2 * n + col] == 0) ++pivot;
    if (pivot == n) throw InputError("matrix is not invertible mod " + std::to_string(p_));
    if (pivot != col) {
      for (std::size_t c = 0; c < 2 * n; ++c) std::swap(aug[pivot * 2 * n + c], aug[col * 2 * n + c]);
    }
    const std::uint64_t inv = inverse_mod(static_cast<std::uint32_t>(aug[col * 2 * n + col]), p_);
    for (std::size_t c = 0; c < 2 * n; ++c) aug[col * 2 * n + c] = aug[col * 2 * n + c] * inv % p_;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const std::uint64_t f = aug[r * 2 * n + col];
      if (f == 0) continue;
      for (std::size_t c = 0; c < 2 * n; ++c) {
        aug[r * 2 * n + c] = (aug[r * 2 * n + c] + (p_ - f) * aug[col * 2 * n + c]) % p_;
      }
    }
  }
  FpMatrix result(p_, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) result.data_[r * n + c] = static_cast<std::uint32_t>(aug[r * 2 * n + n + c]);
  return result;
}

bool FpMatrix::is_identity() const { return *this == identity(p_, rows_) && rows_ == cols_; }

FpVector FpMatrix::apply(std::span<const std::uint32_t> v) const {
  FpVector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += static_cast<std::uint64_t>(data_[r * cols_ + c]) * v[c];
    out[r] = static_cast<std::uint32_t>(acc % p_);
  }
  return out;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols_ != b.rows_ || a.p_ != b.p_) throw InputError("matrix shape or field mismatch");
  FpMatrix out(a.p_, a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < b.cols_; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        acc += static_cast<std::uint64_t>(a.data_[r * a.cols_ + k]) * b.data_[k * b.cols_ + c];
      }
      out.data_[r * out.cols_ + c] = static_cast<std::uint32_t>(acc % a.p_);
    }
  }
  return out;
}

FpVector FpSubspace::reduce(std::span<const std::uint32_t> v) const {
  FpVector w(v.begin(), v.end());
  for (auto& x : w) x %= p_;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::uint64_t f = w[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < dim_; ++c) {
      w[c] = static_cast<std::uint32_t>((w[c] + (p_ - f) * rows_[i][c]) % p_);
    }
  }
  return w;
}

bool FpSubspace::contains(std::span<const std::uint32_t> v) const {
  auto w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](auto x) { return x == 0; });
}

bool FpSubspace::add(std::span<const std::uint32_t> v) {
  if (v.size() != dim_) throw InputError("vector length does not match subspace dimension");
  auto w = reduce(v);
  std::size_t pivot = 0;
  while (pivot < dim_ && w[pivot] == 0) ++pivot;
  if (pivot == dim_) return false;
  const std::uint64_t inv = inverse_mod(w[pivot], p_);
  for (auto& x : w) x = static_cast<std::uint32_t>(x * inv % p_);
  // Clear the new pivot column from existing rows to stay fully reduced.
  for (auto& row : rows_) {
    const std::uint64_t f = row[pivot];
    if (f == 0) continue;
    for (std::size_t c = 0; c < dim_; ++c) row[c] = static_cast<std::uint32_t>((row[c] + (p_ - f) * w[c]) % p_);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(w));
  return true;
}

FpSubspace invariant_span(std::uint32_t p, std::size_t dim, std::span<const FpMatrix> gens,
                          std::span<const FpVector> seed) {
  FpSubspace space(p, dim);
  std::vector<FpVector> queue;
  for (const auto& v : seed) {
    if (space.add(v)) queue.push_back(v);
  }
  for (std::size_t head = 0; head < queue.size() && !space.is_full(); ++head) {
    for (const auto& g : gens) {
      auto w = g.apply(queue[head]);
      if (space.add(w)) queue.push_back(std::move(w));
    }
  }
  return space;
}

FpVector fp_vector_from_index(std::uint64_t index, std::uint32_t p, std::size_t dim) {
  FpVector v(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return v;
}

namespace {

std::uint64_t power(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

FpSubspace sum_of(std::uint32_t p, std::size_t dim, const FpSubspace& a, const FpSubspace& b) {
  FpSubspace s = a;
  for (const auto& v : b.basis()) s.add(v);
  (void)p;
  (void)dim;
  return s;
}

}  // namespace

std::vector<FpSubspace> invariant_subspaces(std::uint32_t p, std::size_t dim, std::span<const FpMatrix> gens) {
  // Every invariant subspace is a sum of cyclic submodules.
  std::vector<FpSubspace> cyclic;
  std::set<std::vector<FpVector>> seen_cyclic;
  const std::uint64_t total = power(p, dim);
  for (std::uint64_t i = 1; i < total; ++i) {
    FpVector v = fp_vector_from_index(i, p, dim);
    auto span = invariant_span(p, dim, gens, std::span<const FpVector>(&v, 1));
    if (seen_cyclic.insert(span.basis()).second) cyclic.push_back(std::move(span));
  }
  std::vector<FpSubspace> all{FpSubspace(p, dim)};
  std::set<std::vector<FpVector>> seen{all.front().basis()};
  for (std::size_t head = 0; head < all.size(); ++head) {
    for (const auto& c : cyclic) {
      auto s = sum_of(p, dim, all[head], c);
      if (seen.insert(s.basis()).second) all.push_back(std::move(s));
    }
  }
  return all;
}

bool is_semisimple_module(std::uint32_t p, std::size_t dim, std::span<const FpMatrix> gens) {
  auto subs = invariant_subspaces(p, dim, gens);
  for (const auto& w : subs) {
    if (w.dimension() == 0 || w.dimension() == dim) continue;
    bool has_complement = false;
    for (const auto& u : subs) {
      if (u.dimension() + w.dimension() != dim) continue;
      if (sum_of(p, dim, w, u).is_full()) {
        has_complement = true;
        break;
      }
    }
    if (!has_complement) return false;
  }
  return true;
}

}  // namespace irrep
