#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace irrep {

/// A bijection of {0, ..., degree-1}. Products compose right to left:
/// (a * b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  /// Builds from disjoint cycles; throws InputError on repeated or out-of-range points.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace irrep
