#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "irrep/fp_linalg.hpp"
#include "irrep/permutation.hpp"

namespace irrep {

/// Index of an element inside its FiniteGroup; the identity is always 0.
using Elem = std::uint32_t;

/// A permutation of the element indices of one group, e.g. conjugation by a
/// fixed element or an automorphism.
using ElementMap = std::vector<Elem>;

inline constexpr std::size_t kDefaultMaxOrder = 20000;

/// Fully enumerated finite group with a dense Cayley table.
///
/// Immutable after construction. Tables are stored as 16-bit indices, so the
/// hard ceiling on the order is 65536 regardless of the configured cap.
class FiniteGroup {
 public:
  static constexpr std::size_t kHardMaxOrder = 65536;

  FiniteGroup();  // trivial group
  FiniteGroup(std::size_t order, std::vector<std::uint16_t> table, std::vector<Elem> generators,
              std::vector<std::string> labels);

  std::size_t order() const { return order_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  /// g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inverse_[g]); }

  const std::vector<Elem>& generators() const { return generators_; }
  const std::string& label(Elem x) const { return labels_[x]; }

  std::size_t element_order(Elem x) const;
  bool is_abelian() const;
  bool is_cyclic() const;

  /// Free-form construction metadata (e.g. an unfaithful semidirect action).
  const std::vector<std::string>& notes() const { return notes_; }
  void add_note(std::string note) { notes_.push_back(std::move(note)); }

  /// Named element subsets recorded at construction time (product embeddings,
  /// the vector-space factor of a semidirect product).
  const std::map<std::string, std::vector<Elem>>& marked() const { return marked_; }
  void mark(const std::string& name, std::vector<Elem> members) { marked_[name] = std::move(members); }

 private:
  std::size_t order_;
  std::vector<std::uint16_t> table_;
  std::vector<Elem> inverse_;
  std::vector<Elem> generators_;
  std::vector<std::string> labels_;
  std::vector<std::string> notes_;
  std::map<std::string, std::vector<Elem>> marked_;
};

/// Throws ConsistencyError unless identity, inverse, associativity and
/// generation hold. Associativity is exhaustive up to order 64 and checked on
/// 10^5 fixed-seed random triples above that.
void verify_group_tables(const FiniteGroup& g);

/// Sorted set of element indices of a parent group, closed under the group
/// operations. `generators` is some generating set (not canonical).
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::size_t parent_order, std::vector<Elem> members, std::vector<Elem> generators = {});

  const std::vector<Elem>& members() const { return members_; }
  const std::vector<Elem>& generators() const { return generators_; }
  std::size_t size() const { return members_.size(); }
  std::size_t parent_order() const { return mask_.size(); }
  bool contains(Elem x) const { return x < mask_.size() && mask_[x]; }
  bool is_trivial() const { return members_.size() <= 1; }
  bool is_subset_of(const Subgroup& other) const;
  /// Smallest non-identity member, or 0 for the trivial subgroup.
  Elem least_nontrivial() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  std::vector<Elem> members_;
  std::vector<Elem> generators_;
  std::vector<bool> mask_;
};

/// Deterministic ordering for subgroups: by order, then by member list.
bool subgroup_less(const Subgroup& a, const Subgroup& b);

struct ConjugacyClasses {
  std::vector<std::vector<Elem>> classes;  // each sorted; classes ordered by least member
  std::vector<std::size_t> class_of;
};

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);
Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Elem> seed);
Subgroup subgroup_closure(const FiniteGroup& g, std::initializer_list<Elem> seed);
/// Subgroup generated by the union of the given subgroups.
Subgroup join(const FiniteGroup& g, std::span<const Subgroup> parts);
Subgroup intersection(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

/// Conjugation by each generator of g.
std::vector<ElementMap> inner_maps(const FiniteGroup& g);
/// Conjugation by each listed element.
std::vector<ElementMap> conjugation_maps(const FiniteGroup& g, std::span<const Elem> by);

/// Orbits of `maps` on `domain` (a union of orbits), each sorted, ordered by least member.
std::vector<std::vector<Elem>> orbits(std::span<const ElementMap> maps, std::span<const Elem> domain);
std::vector<Elem> orbit(std::span<const ElementMap> maps, Elem x);

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

/// Smallest subgroup containing `seed` and stable under every map.
Subgroup invariant_closure(const FiniteGroup& g, std::span<const Elem> seed, std::span<const ElementMap> maps);
Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> seed);
Subgroup normal_closure(const FiniteGroup& g, std::initializer_list<Elem> seed);

/// Largest subset of `members` stable under every map. For maps generating a
/// group A this is the intersection of a(K) over a in A.
std::vector<Elem> invariant_core(std::span<const Elem> members, std::size_t parent_order,
                                 std::span<const ElementMap> maps);

bool is_invariant(const Subgroup& h, std::span<const ElementMap> maps);
bool commute_elementwise(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

/// Enumerates the closure of permutation generators breadth-first; element 0
/// is the identity and labels are cycle strings. Throws InputError past max_order.
FiniteGroup group_from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                    std::size_t max_order = kDefaultMaxOrder);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t max_order = kDefaultMaxOrder);

/// H acting on U = (F_p)^n, one matrix per generator of H. Element (h, u) has
/// index h * p^n + index(u), so U occupies indices [0, p^n).
FiniteGroup semidirect_product(std::uint32_t p, std::size_t n, const FiniteGroup& acting,
                               const std::vector<FpMatrix>& action, std::size_t max_order = kDefaultMaxOrder);

/// A subgroup re-indexed as a group in its own right.
struct EmbeddedGroup {
  FiniteGroup group;
  std::vector<Elem> embedding;        // local index -> parent index
  std::vector<std::int64_t> local_of;  // parent index -> local index, -1 outside
};

EmbeddedGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);

/// Breadth-first spanning tree over right multiplication by generators:
/// element y != id equals parent[y] * generators()[via[y]].
struct GeneratorTree {
  std::vector<Elem> order;  // discovery order, starting at the identity
  std::vector<Elem> parent;
  std::vector<std::size_t> via;
};

GeneratorTree generator_tree(const FiniteGroup& g);

}  // namespace irrep
