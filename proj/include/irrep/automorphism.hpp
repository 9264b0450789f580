#pragma once

#include <span>
#include <vector>

#include "irrep/dsl.hpp"
#include "irrep/group.hpp"

namespace irrep {

inline constexpr std::size_t kMaxAutoGroupOrder = 20000;

/// Finite automorphism group containing the inner automorphisms, kept both
/// as generators and as its full closure.
class AutoGroup {
 public:
  AutoGroup() = default;
  AutoGroup(std::size_t degree, std::vector<ElementMap> generators, std::size_t inner_count,
            std::vector<std::uint16_t> closure, std::size_t order);

  /// Conjugations by the group generators first, then the extra maps.
  const std::vector<ElementMap>& generators() const { return generators_; }
  std::size_t inner_generator_count() const { return inner_count_; }
  std::size_t extra_count() const { return generators_.size() - inner_count_; }
  std::size_t order() const { return order_; }
  ElementMap map(std::size_t i) const;

 private:
  std::size_t degree_ = 0;
  std::vector<ElementMap> generators_;
  std::size_t inner_count_ = 0;
  std::vector<std::uint16_t> closure_;  // order_ rows of degree_ images
  std::size_t order_ = 0;
};

/// Extends generator images to a map on all elements and checks that it is
/// a bijective homomorphism. Throws InputError otherwise.
ElementMap automorphism_from_images(const FiniteGroup& g, std::span<const Elem> images);
ElementMap automorphism_from_spec(const FiniteGroup& g, const AutomorphismSpec& spec);

/// Closure of the inner automorphisms and `extra` under composition. Throws
/// InputError past kMaxAutoGroupOrder maps.
AutoGroup close_auto_group(const FiniteGroup& g, std::span<const ElementMap> extra);
AutoGroup close_auto_group(const FiniteGroup& g, std::span<const AutomorphismSpec> extra);

/// Homomorphism check of every closure element: all pairs up to |G| = 64,
/// 10^4 fixed-seed pairs per map above.
bool verify_auto_group(const FiniteGroup& g, const AutoGroup& a);

}  // namespace irrep
