#pragma once

#include <span>
#include <variant>
#include <vector>

#include "irrep/group.hpp"

namespace irrep {

/// Elementary abelian foot (F_p)^rank with an F_p-basis of group elements.
struct AbelianFoot {
  std::uint32_t p = 0;
  std::size_t rank = 0;
  std::vector<Elem> basis;
};

/// Nonabelian foot: internal direct sum of pairwise conjugate simple groups.
struct NonabelianFoot {
  std::vector<Subgroup> simple_feet;
};

struct Foot {
  Subgroup carrier;
  std::variant<AbelianFoot, NonabelianFoot> kind;

  bool is_abelian() const { return std::holds_alternative<AbelianFoot>(kind); }
  const AbelianFoot& abelian() const { return std::get<AbelianFoot>(kind); }
  const NonabelianFoot& nonabelian() const { return std::get<NonabelianFoot>(kind); }
};

/// MS = MA (+) MH with MA = (+) A_i over a greedy maximal family of abelian
/// feet and MH the direct sum of all nonabelian feet.
///
/// `components` lists the direct summands of MS at the finest level: the
/// chosen abelian feet first, then the simple factors of each nonabelian foot
/// in order. Every element of MS factors uniquely as a product of one element
/// from each component.
struct MinisocleDecomposition {
  std::vector<Foot> feet;
  std::vector<std::size_t> ma_summands;  // indices into feet
  std::vector<std::size_t> mh_feet;      // indices into feet
  Subgroup ma;
  Subgroup mh;
  Subgroup ms;
  std::vector<Subgroup> components;
  std::size_t abelian_components = 0;

  /// Component-wise factorization of an element of MS.
  std::vector<Elem> factorization(Elem z) const;
  Elem component_of(Elem z, std::size_t component) const;

  // Filled by the decomposition routine.
  std::vector<std::int64_t> ms_position;  // parent index -> position in ms.members(), -1 outside
  std::vector<Elem> factors;               // |MS| x components.size(), row-major
};

/// Inclusion-minimal members of { closure of a nontrivial orbit of `maps` },
/// deduplicated and sorted by (order, members). With `within` set, only
/// orbits of elements of that subgroup are considered (the maps must
/// preserve it). These are the minimal `maps`-invariant subgroups.
std::vector<Subgroup> minimal_invariant_subgroups(const FiniteGroup& g, std::span<const ElementMap> maps,
                                                  const Subgroup* within = nullptr);

std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g);

/// Simple as an abstract group: nontrivial, and the only nontrivial normal
/// subgroup generated by a class of h is h itself.
bool is_simple(const FiniteGroup& g, const Subgroup& h);

/// Classifies a minimal `maps`-invariant subgroup. Throws InputError if m is
/// not minimal (naming the smaller invariant subgroup found) and
/// ConsistencyError if a structural claim fails to certify.
Foot classify_invariant_foot(const FiniteGroup& g, const Subgroup& m, std::span<const ElementMap> maps);
Foot classify_foot(const FiniteGroup& g, const Subgroup& m);

/// Minisocle relative to the group generated by `maps` (conjugations for
/// the ordinary minisocle, an automorphism group for the G-minisocle).
/// Verifies every structural invariant before returning.
MinisocleDecomposition decompose_minisocle(const FiniteGroup& g, std::span<const ElementMap> maps);
MinisocleDecomposition minisocle_decomposition(const FiniteGroup& g);

/// Subgroup generated by all feet.
Subgroup socle(const FiniteGroup& g);

/// True if the subgroup generated by `parts` is their internal direct sum.
bool is_internal_direct_sum(const FiniteGroup& g, std::span<const Subgroup> parts);

}  // namespace irrep
