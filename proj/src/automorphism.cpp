#include "irrep/automorphism.hpp"

#include <random>
#include <unordered_map>

#include "irrep/errors.hpp"

namespace irrep {

namespace {

std::uint64_t hash_images(const std::uint16_t* data, std::size_t n) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= data[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

AutoGroup::AutoGroup(std::size_t degree, std::vector<ElementMap> generators, std::size_t inner_count,
                     std::vector<std::uint16_t> closure, std::size_t order)
    : degree_(degree),
      generators_(std::move(generators)),
      inner_count_(inner_count),
      closure_(std::move(closure)),
      order_(order) {}

ElementMap AutoGroup::map(std::size_t i) const {
  if (i >= order_) throw InputError("automorphism index out of range");
  return ElementMap(closure_.begin() + static_cast<std::ptrdiff_t>(i * degree_),
                    closure_.begin() + static_cast<std::ptrdiff_t>((i + 1) * degree_));
}

ElementMap automorphism_from_images(const FiniteGroup& g, std::span<const Elem> images) {
  const auto& gens = g.generators();
  if (images.size() != gens.size()) {
    throw InputError("automorphism needs " + std::to_string(gens.size()) + " generator images, got " +
                     std::to_string(images.size()));
  }
  for (auto y : images)
    if (y >= g.order()) throw InputError("generator image out of range");
  const GeneratorTree tree = generator_tree(g);
  ElementMap a(g.order(), 0);
  for (std::size_t i = 1; i < tree.order.size(); ++i) {
    const Elem y = tree.order[i];
    a[y] = g.mul(a[tree.parent[y]], images[tree.via[y]]);
  }
  std::vector<bool> hit(g.order(), false);
  for (auto y : a) hit[y] = true;
  for (bool h : hit)
    if (!h) throw InputError("not an automorphism: the generator images do not give a bijection");
  for (Elem x = 0; x < g.order(); ++x) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (a[g.mul(x, gens[k])] != g.mul(a[x], images[k])) {
        throw InputError("not an automorphism: the generator images violate a relation of the group");
      }
    }
  }
  return a;
}

ElementMap automorphism_from_spec(const FiniteGroup& g, const AutomorphismSpec& spec) {
  std::vector<Elem> images(g.generators());
  std::vector<bool> given(images.size(), false);
  for (const auto& [index, word] : spec.images) {
    if (index >= images.size()) throw InputError("automorphism names g" + std::to_string(index) + ", which does not exist");
    if (given[index]) throw InputError("automorphism gives g" + std::to_string(index) + " twice");
    given[index] = true;
    images[index] = evaluate_word(g, word);
  }
  return automorphism_from_images(g, images);
}

AutoGroup close_auto_group(const FiniteGroup& g, std::span<const ElementMap> extra) {
  const std::size_t n = g.order();
  std::vector<ElementMap> gens = inner_maps(g);
  const std::size_t inner = gens.size();
  for (const auto& e : extra) {
    if (e.size() != n) throw InputError("automorphism has the wrong degree");
    gens.push_back(e);
  }

  std::vector<std::uint16_t> closure(n);
  for (std::size_t i = 0; i < n; ++i) closure[i] = static_cast<std::uint16_t>(i);
  std::unordered_multimap<std::uint64_t, std::size_t> index;
  index.emplace(hash_images(closure.data(), n), 0);
  std::size_t count = 1;
  std::vector<std::uint16_t> next(n);
  for (std::size_t cur = 0; cur < count; ++cur) {
    for (const auto& gen : gens) {
      const std::uint16_t* m = closure.data() + cur * n;
      for (std::size_t x = 0; x < n; ++x) next[x] = static_cast<std::uint16_t>(gen[m[x]]);
      const auto h = hash_images(next.data(), n);
      bool found = false;
      auto [lo, hi] = index.equal_range(h);
      for (auto it = lo; it != hi && !found; ++it)
        found = std::equal(next.begin(), next.end(), closure.begin() + static_cast<std::ptrdiff_t>(it->second * n));
      if (found) continue;
      if (count == kMaxAutoGroupOrder) {
        throw InputError("automorphism group exceeds " + std::to_string(kMaxAutoGroupOrder) + " elements");
      }
      closure.insert(closure.end(), next.begin(), next.end());
      index.emplace(h, count++);
    }
  }
  return AutoGroup(n, std::move(gens), inner, std::move(closure), count);
}

AutoGroup close_auto_group(const FiniteGroup& g, std::span<const AutomorphismSpec> extra) {
  std::vector<ElementMap> maps;
  for (const auto& s : extra) maps.push_back(automorphism_from_spec(g, s));
  return close_auto_group(g, maps);
}

bool verify_auto_group(const FiniteGroup& g, const AutoGroup& a) {
  const std::size_t n = g.order();
  std::mt19937_64 rng(0xa070);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
  for (std::size_t i = 0; i < a.order(); ++i) {
    const ElementMap m = a.map(i);
    std::vector<bool> hit(n, false);
    for (auto y : m) hit[y] = true;
    for (bool h : hit)
      if (!h) return false;
    if (n <= 64) {
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          if (m[g.mul(x, y)] != g.mul(m[x], m[y])) return false;
    } else {
      for (int k = 0; k < 10000; ++k) {
        const Elem x = pick(rng), y = pick(rng);
        if (m[g.mul(x, y)] != g.mul(m[x], m[y])) return false;
      }
    }
  }
  return true;
}

}  // namespace irrep
