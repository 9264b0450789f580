#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace irrep {

bool is_prime(std::uint64_t n);

using FpVector = std::vector<std::uint32_t>;

/// Dense matrix over the prime field F_p, row-major.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> entries);

  static FpMatrix identity(std::uint32_t p, std::size_t n);

  std::uint32_t prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint32_t v) { data_[r * cols_ + c] = v % p_; }

  FpMatrix transpose() const;
  std::size_t rank() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }
  /// Throws InputError when singular.
  FpMatrix inverse() const;
  bool is_identity() const;

  FpVector apply(std::span<const std::uint32_t> v) const;

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

/// Incrementally built subspace of F_p^dim kept in reduced row echelon form.
class FpSubspace {
 public:
  FpSubspace(std::uint32_t p, std::size_t dim) : p_(p), dim_(dim) {}

  /// Adds v to the spanning set; returns true if the dimension grew.
  bool add(std::span<const std::uint32_t> v);
  bool contains(std::span<const std::uint32_t> v) const;
  std::size_t dimension() const { return rows_.size(); }
  std::size_t ambient_dimension() const { return dim_; }
  bool is_full() const { return rows_.size() == dim_; }
  const std::vector<FpVector>& basis() const { return rows_; }

  friend bool operator==(const FpSubspace& a, const FpSubspace& b) { return a.rows_ == b.rows_; }

 private:
  FpVector reduce(std::span<const std::uint32_t> v) const;

  std::uint32_t p_;
  std::size_t dim_;
  std::vector<FpVector> rows_;   // sorted by pivot column
  std::vector<std::size_t> pivots_;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

/// Smallest subspace containing `seed` and stable under every matrix in `gens`.
FpSubspace invariant_span(std::uint32_t p, std::size_t dim, std::span<const FpMatrix> gens,
                          std::span<const FpVector> seed);

/// All subspaces stable under `gens`, including {0} and the whole space.
/// Intended for small modules (p^dim in the low thousands).
std::vector<FpSubspace> invariant_subspaces(std::uint32_t p, std::size_t dim, std::span<const FpMatrix> gens);

/// True if every invariant subspace has an invariant complement.
bool is_semisimple_module(std::uint32_t p, std::size_t dim, std::span<const FpMatrix> gens);

/// Decodes index in [0, p^dim) as a little-endian base-p vector.
FpVector fp_vector_from_index(std::uint64_t index, std::uint32_t p, std::size_t dim);

}  // namespace irrep
