#include "irrep/permutation.hpp"

#include <numeric>

#include "irrep/errors.hpp"

namespace irrep {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw InputError("permutation images are not a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      auto a = cycle[i];
      if (a >= degree) {
        throw InputError("point " + std::to_string(a) + " outside degree " + std::to_string(degree));
      }
      if (used[a]) {
        throw InputError("point " + std::to_string(a) + " repeated in cycle notation");
      }
      used[a] = true;
      images[a] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  Permutation result;
  result.images_ = std::move(inv);
  return result;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    std::uint32_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = images_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InputError("permutation degree mismatch");
  std::vector<std::uint32_t> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = a.images_[b.images_[i]];
  Permutation result;
  result.images_ = std::move(images);
  return result;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace irrep
