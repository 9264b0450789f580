#include "irrep/socle.hpp"

#include <algorithm>
#include <set>

#include "irrep/errors.hpp"

namespace irrep {

namespace {

std::vector<ElementMap> local_conjugations(const FiniteGroup& g, const Subgroup& h) {
  const auto& gens = h.generators().empty() ? subgroup_closure(g, h.members()).generators() : h.generators();
  return conjugation_maps(g, gens);
}

Subgroup image_of(const FiniteGroup& g, const Subgroup& h, const ElementMap& m) {
  std::vector<Elem> members;
  members.reserve(h.size());
  for (auto x : h.members()) members.push_back(m[x]);
  std::vector<Elem> gens;
  for (auto x : h.generators()) gens.push_back(m[x]);
  return Subgroup(g.order(), std::move(members), std::move(gens));
}

bool meets_trivially(const Subgroup& a, const Subgroup& b) {
  return std::none_of(a.members().begin(), a.members().end(), [&](Elem x) { return x != 0 && b.contains(x); });
}

}  // namespace

std::vector<Elem> MinisocleDecomposition::factorization(Elem z) const {
  const auto pos = ms_position.at(z);
  if (pos < 0) throw InputError("element is not in the minisocle");
  const std::size_t k = components.size();
  return std::vector<Elem>(factors.begin() + pos * k, factors.begin() + (pos + 1) * k);
}

Elem MinisocleDecomposition::component_of(Elem z, std::size_t component) const {
  const auto pos = ms_position.at(z);
  if (pos < 0) throw InputError("element is not in the minisocle");
  return factors[static_cast<std::size_t>(pos) * components.size() + component];
}

std::vector<Subgroup> minimal_invariant_subgroups(const FiniteGroup& g, std::span<const ElementMap> maps,
                                                  const Subgroup* within) {
  std::vector<Elem> domain;
  if (within) {
    domain = within->members();
  } else {
    domain.resize(g.order());
    for (Elem x = 0; x < g.order(); ++x) domain[x] = x;
  }
  std::vector<Subgroup> candidates;
  std::set<std::vector<Elem>> seen;
  for (const auto& o : orbits(maps, domain)) {
    if (o.size() == 1 && o.front() == 0) continue;
    // An orbit is an invariant set, so the subgroup it generates is invariant.
    auto c = subgroup_closure(g, o);
    if (seen.insert(c.members()).second) candidates.push_back(std::move(c));
  }
  std::vector<Subgroup> minimal;
  for (const auto& c : candidates) {
    bool is_min = std::none_of(candidates.begin(), candidates.end(), [&](const Subgroup& d) {
      return d.size() < c.size() && d.is_subset_of(c);
    });
    if (is_min) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end(), subgroup_less);
  return minimal;
}

std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g) {
  auto maps = inner_maps(g);
  return minimal_invariant_subgroups(g, maps);
}

bool is_simple(const FiniteGroup& g, const Subgroup& h) {
  if (h.is_trivial()) return false;
  auto maps = local_conjugations(g, h);
  for (const auto& o : orbits(maps, h.members())) {
    if (o.size() == 1 && o.front() == 0) continue;
    if (subgroup_closure(g, o).size() != h.size()) return false;
  }
  return true;
}

bool is_internal_direct_sum(const FiniteGroup& g, std::span<const Subgroup> parts) {
  std::size_t product = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    product *= parts[i].size();
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (!commute_elementwise(g, parts[i], parts[j])) return false;
    }
  }
  return join(g, parts).size() == product;
}

Foot classify_invariant_foot(const FiniteGroup& g, const Subgroup& m, std::span<const ElementMap> maps) {
  if (m.is_trivial()) throw InputError("a foot must be nontrivial");
  if (!is_invariant(m, maps)) throw InputError("subgroup is not invariant");
  for (const auto& o : orbits(maps, m.members())) {
    if (o.size() == 1 && o.front() == 0) continue;
    auto c = subgroup_closure(g, o);
    if (c.size() != m.size()) {
      throw InputError("subgroup of order " + std::to_string(m.size()) +
                       " is not minimal: it contains an invariant subgroup of order " + std::to_string(c.size()));
    }
  }

  if (commute_elementwise(g, m, m)) {
    AbelianFoot a;
    a.p = static_cast<std::uint32_t>(g.element_order(m.least_nontrivial()));
    for (auto x : m.members()) {
      if (x != 0 && g.element_order(x) != a.p) throw ConsistencyError("abelian foot is not of prime exponent");
    }
    if (!is_prime(a.p)) throw ConsistencyError("abelian foot exponent is not prime");
    Subgroup span = trivial_subgroup(g);
    for (auto x : m.members()) {
      if (span.contains(x)) continue;
      a.basis.push_back(x);
      span = subgroup_closure(g, a.basis);
    }
    a.rank = a.basis.size();
    std::size_t expected = 1;
    for (std::size_t i = 0; i < a.rank; ++i) expected *= a.p;
    if (expected != m.size() || span.size() != m.size()) throw ConsistencyError("abelian foot basis is not independent");
    return Foot{m, a};
  }

  // Nonabelian: start from one foot of m itself and greedily collect a
  // maximal direct family among its images.
  auto local = local_conjugations(g, m);
  auto feet_of_m = minimal_invariant_subgroups(g, local, &m);
  if (feet_of_m.empty()) throw ConsistencyError("nontrivial group without feet");
  const Subgroup& seed = feet_of_m.front();

  std::vector<Subgroup> images{seed};
  std::set<std::vector<Elem>> seen{seed.members()};
  for (std::size_t head = 0; head < images.size(); ++head) {
    for (const auto& mp : maps) {
      auto img = image_of(g, images[head], mp);
      if (seen.insert(img.members()).second) images.push_back(std::move(img));
    }
  }
  std::sort(images.begin(), images.end(), subgroup_less);

  NonabelianFoot na;
  Subgroup sum = trivial_subgroup(g);
  for (const auto& t : images) {
    if (meets_trivially(t, sum) && commute_elementwise(g, t, sum)) {
      na.simple_feet.push_back(t);
      sum = join(g, na.simple_feet);
    }
  }
  if (!(sum == m)) throw ConsistencyError("conjugates of a simple foot do not generate the nonabelian foot");
  if (!is_internal_direct_sum(g, na.simple_feet)) throw ConsistencyError("simple feet do not form a direct sum");
  for (const auto& s : na.simple_feet) {
    if (commute_elementwise(g, s, s) || !is_simple(g, s)) throw ConsistencyError("factor is not simple nonabelian");
  }
  // The factors must be exactly the feet of m.
  auto sorted_family = na.simple_feet;
  std::sort(sorted_family.begin(), sorted_family.end(), subgroup_less);
  if (!(sorted_family == feet_of_m)) throw ConsistencyError("simple factors differ from the feet of the foot");
  return Foot{m, na};
}

Foot classify_foot(const FiniteGroup& g, const Subgroup& m) {
  auto maps = inner_maps(g);
  return classify_invariant_foot(g, m, maps);
}

MinisocleDecomposition decompose_minisocle(const FiniteGroup& g, std::span<const ElementMap> maps) {
  MinisocleDecomposition d;
  for (const auto& m : minimal_invariant_subgroups(g, maps)) d.feet.push_back(classify_invariant_foot(g, m, maps));

  std::vector<Subgroup> intermediates;
  std::vector<Subgroup> chosen;
  Subgroup sum = trivial_subgroup(g);
  std::vector<Subgroup> abelian_carriers;
  for (std::size_t i = 0; i < d.feet.size(); ++i) {
    const auto& b = d.feet[i];
    if (!b.is_abelian()) continue;
    abelian_carriers.push_back(b.carrier);
    if (b.carrier.is_subset_of(sum)) continue;
    if (!meets_trivially(b.carrier, sum)) throw ConsistencyError("foot neither inside nor disjoint from a sum of feet");
    d.ma_summands.push_back(i);
    chosen.push_back(b.carrier);
    sum = join(g, chosen);
    intermediates.push_back(sum);
  }
  d.ma = abelian_carriers.empty() ? trivial_subgroup(g) : join(g, abelian_carriers);
  if (!(d.ma == sum)) throw ConsistencyError("greedy family of abelian feet does not span MA");
  if (!is_internal_direct_sum(g, chosen)) throw ConsistencyError("abelian summands are not a direct sum");

  std::vector<Subgroup> nonabelian;
  Subgroup hsum = trivial_subgroup(g);
  for (std::size_t i = 0; i < d.feet.size(); ++i) {
    if (d.feet[i].is_abelian()) continue;
    if (!meets_trivially(d.feet[i].carrier, hsum)) throw ConsistencyError("nonabelian feet overlap");
    d.mh_feet.push_back(i);
    nonabelian.push_back(d.feet[i].carrier);
    hsum = join(g, nonabelian);
    intermediates.push_back(hsum);
  }
  d.mh = hsum;
  if (!is_internal_direct_sum(g, nonabelian)) throw ConsistencyError("nonabelian feet are not a direct sum");

  std::vector<Subgroup> halves{d.ma, d.mh};
  d.ms = join(g, halves);
  if (d.ms.size() != d.ma.size() * d.mh.size() || !meets_trivially(d.ma, d.mh) ||
      !commute_elementwise(g, d.ma, d.mh)) {
    throw ConsistencyError("MS is not the direct sum of MA and MH");
  }
  intermediates.push_back(d.ma);
  intermediates.push_back(d.ms);

  // Every foot is either inside an invariant subgroup met along the way or
  // generates a direct sum with it.
  for (const auto& f : d.feet) {
    for (const auto& n : intermediates) {
      if (f.carrier.is_subset_of(n)) continue;
      if (!meets_trivially(f.carrier, n) || !commute_elementwise(g, f.carrier, n)) {
        throw ConsistencyError("foot is neither contained in nor direct with an invariant subgroup");
      }
    }
  }

  for (auto i : d.ma_summands) d.components.push_back(d.feet[i].carrier);
  d.abelian_components = d.components.size();
  for (auto i : d.mh_feet) {
    for (const auto& s : d.feet[i].nonabelian().simple_feet) d.components.push_back(s);
  }

  // Unique factorization table over the components.
  const std::size_t k = d.components.size();
  std::vector<Elem> products{0};
  std::vector<Elem> coords;  // products.size() x (components so far)
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<Elem> next_products;
    std::vector<Elem> next_coords;
    next_products.reserve(products.size() * d.components[c].size());
    for (std::size_t r = 0; r < products.size(); ++r) {
      for (auto x : d.components[c].members()) {
        next_products.push_back(g.mul(products[r], x));
        next_coords.insert(next_coords.end(), coords.begin() + r * c, coords.begin() + (r + 1) * c);
        next_coords.push_back(x);
      }
    }
    products = std::move(next_products);
    coords = std::move(next_coords);
  }
  if (products.size() != d.ms.size()) throw ConsistencyError("component orders do not multiply to |MS|");
  d.ms_position.assign(g.order(), -1);
  for (std::size_t i = 0; i < d.ms.members().size(); ++i) d.ms_position[d.ms.members()[i]] = static_cast<std::int64_t>(i);
  d.factors.assign(products.size() * k, 0);
  std::vector<bool> hit(products.size(), false);
  for (std::size_t r = 0; r < products.size(); ++r) {
    const auto pos = d.ms_position[products[r]];
    if (pos < 0 || hit[pos]) throw ConsistencyError("factorization over the components is not unique");
    hit[pos] = true;
    std::copy(coords.begin() + r * k, coords.begin() + (r + 1) * k, d.factors.begin() + pos * k);
  }

  // Feet of MS as a group: each is a simple component or lies in MA.
  auto ms_local = local_conjugations(g, d.ms);
  for (const auto& m : minimal_invariant_subgroups(g, ms_local, &d.ms)) {
    bool ok = m.is_subset_of(d.ma);
    for (std::size_t c = d.abelian_components; c < k && !ok; ++c) ok = (m == d.components[c]);
    if (!ok) throw ConsistencyError("a foot of MS is neither a simple component nor inside MA");
  }
  return d;
}

MinisocleDecomposition minisocle_decomposition(const FiniteGroup& g) {
  auto maps = inner_maps(g);
  return decompose_minisocle(g, maps);
}

Subgroup socle(const FiniteGroup& g) {
  auto feet = minimal_normal_subgroups(g);
  if (feet.empty()) return trivial_subgroup(g);
  return join(g, feet);
}

}  // namespace irrep
