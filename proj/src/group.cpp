#include "irrep/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

#include "irrep/errors.hpp"

namespace irrep {

FiniteGroup::FiniteGroup() : FiniteGroup(1, {0}, {}, {"e"}) {}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<std::uint16_t> table, std::vector<Elem> generators,
                         std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), generators_(std::move(generators)), labels_(std::move(labels)) {
  if (order_ == 0 || order_ > kHardMaxOrder) throw InputError("group order out of supported range");
  if (table_.size() != order_ * order_) throw InputError("multiplication table has the wrong size");
  if (labels_.size() != order_) {
    labels_.resize(order_);
    for (std::size_t i = 0; i < order_; ++i) {
      if (labels_[i].empty()) labels_[i] = "x" + std::to_string(i);
    }
  }
  for (auto g : generators_) {
    if (g >= order_) throw InputError("generator index out of range");
  }
  inverse_.assign(order_, 0);
  for (Elem a = 0; a < order_; ++a) {
    // a^-1 is the last power of a before the identity.
    Elem prev = 0;
    Elem cur = a;
    std::size_t steps = 0;
    while (cur != 0) {
      prev = cur;
      cur = mul(cur, a);
      if (++steps > order_) throw ConsistencyError("element without finite order in table");
    }
    inverse_[a] = (a == 0) ? 0 : prev;
  }
}

std::size_t FiniteGroup::element_order(Elem x) const {
  std::size_t k = 1;
  for (Elem y = x; y != 0; y = mul(y, x)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (auto a : generators_)
    for (auto b : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::is_cyclic() const {
  for (Elem x = 0; x < order_; ++x) {
    if (element_order(x) == order_) return true;
  }
  return false;
}

void verify_group_tables(const FiniteGroup& g) {
  const auto n = g.order();
  for (Elem x = 0; x < n; ++x) {
    if (g.mul(0, x) != x || g.mul(x, 0) != x) throw ConsistencyError("identity law fails");
    if (g.mul(x, g.inv(x)) != 0 || g.mul(g.inv(x), x) != 0) throw ConsistencyError("inverse law fails");
  }
  auto check = [&](Elem a, Elem b, Elem c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) throw ConsistencyError("associativity fails");
  };
  if (n <= 64) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    for (int i = 0; i < 100000; ++i) check(pick(rng), pick(rng), pick(rng));
  }
  if (subgroup_closure(g, g.generators()).size() != n) throw ConsistencyError("generators do not generate");
}

Subgroup::Subgroup(std::size_t parent_order, std::vector<Elem> members, std::vector<Elem> generators)
    : members_(std::move(members)), generators_(std::move(generators)), mask_(parent_order, false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (auto x : members_) {
    if (x >= parent_order) throw InputError("subgroup member outside parent group");
    mask_[x] = true;
  }
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(members_.begin(), members_.end(), [&](Elem x) { return other.contains(x); });
}

Elem Subgroup::least_nontrivial() const {
  for (auto x : members_)
    if (x != 0) return x;
  return 0;
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup(g.order(), {0}); }

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return Subgroup(g.order(), std::move(all), g.generators());
}

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Elem> seed) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> members{0};
  in[0] = true;
  std::vector<Elem> gens;
  for (auto s : seed) {
    if (s >= g.order()) throw InputError("seed element out of range");
    if (in[s]) continue;
    gens.push_back(s);
    // Re-close under the enlarged generating set. In a finite group closure
    // under right multiplication by generators is the generated subgroup.
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (auto t : gens) {
        Elem y = g.mul(members[head], t);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    }
  }
  return Subgroup(g.order(), std::move(members), std::move(gens));
}

Subgroup subgroup_closure(const FiniteGroup& g, std::initializer_list<Elem> seed) {
  return subgroup_closure(g, std::span<const Elem>(seed.begin(), seed.size()));
}

Subgroup join(const FiniteGroup& g, std::span<const Subgroup> parts) {
  std::vector<Elem> seed;
  for (const auto& h : parts) {
    const auto& src = h.generators().empty() ? h.members() : h.generators();
    seed.insert(seed.end(), src.begin(), src.end());
  }
  return subgroup_closure(g, seed);
}

Subgroup intersection(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> both;
  for (auto x : a.members())
    if (b.contains(x)) both.push_back(x);
  return Subgroup(g.order(), std::move(both));
}

std::vector<ElementMap> conjugation_maps(const FiniteGroup& g, std::span<const Elem> by) {
  std::vector<ElementMap> maps;
  maps.reserve(by.size());
  for (auto s : by) {
    ElementMap m(g.order());
    const Elem s_inv = g.inv(s);
    for (Elem x = 0; x < g.order(); ++x) m[x] = g.mul(g.mul(s, x), s_inv);
    maps.push_back(std::move(m));
  }
  return maps;
}

std::vector<ElementMap> inner_maps(const FiniteGroup& g) { return conjugation_maps(g, g.generators()); }

std::vector<Elem> orbit(std::span<const ElementMap> maps, Elem x) {
  std::vector<Elem> out{x};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& m : maps) {
      Elem y = m[out[head]];
      if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Elem>> orbits(std::span<const ElementMap> maps, std::span<const Elem> domain) {
  std::vector<Elem> sorted(domain.begin(), domain.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = maps.empty() ? (sorted.empty() ? 0 : sorted.back() + 1) : maps.front().size();
  std::vector<bool> seen(std::max<std::size_t>(n, sorted.empty() ? 0 : sorted.back() + 1), false);
  std::vector<std::vector<Elem>> result;
  for (auto x : sorted) {
    if (seen[x]) continue;
    std::vector<Elem> o{x};
    seen[x] = true;
    for (std::size_t head = 0; head < o.size(); ++head) {
      for (const auto& m : maps) {
        Elem y = m[o[head]];
        if (!seen[y]) {
          seen[y] = true;
          o.push_back(y);
        }
      }
    }
    std::sort(o.begin(), o.end());
    result.push_back(std::move(o));
  }
  return result;
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  auto maps = inner_maps(g);
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  ConjugacyClasses cc;
  cc.classes = orbits(maps, all);
  cc.class_of.assign(g.order(), 0);
  for (std::size_t i = 0; i < cc.classes.size(); ++i)
    for (auto x : cc.classes[i]) cc.class_of[x] = i;
  return cc;
}

Subgroup invariant_closure(const FiniteGroup& g, std::span<const Elem> seed, std::span<const ElementMap> maps) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> generators;
  for (auto s : seed) {
    if (in[s]) continue;
    std::vector<Elem> o{s};
    in[s] = true;
    for (std::size_t head = 0; head < o.size(); ++head) {
      for (const auto& m : maps) {
        Elem y = m[o[head]];
        if (!in[y]) {
          in[y] = true;
          o.push_back(y);
        }
      }
    }
    generators.insert(generators.end(), o.begin(), o.end());
  }
  return subgroup_closure(g, generators);
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> seed) {
  auto maps = inner_maps(g);
  return invariant_closure(g, seed, maps);
}

Subgroup normal_closure(const FiniteGroup& g, std::initializer_list<Elem> seed) {
  return normal_closure(g, std::span<const Elem>(seed.begin(), seed.size()));
}

std::vector<Elem> invariant_core(std::span<const Elem> members, std::size_t parent_order,
                                 std::span<const ElementMap> maps) {
  std::vector<bool> in(parent_order, false);
  std::vector<Elem> current(members.begin(), members.end());
  for (auto x : current) in[x] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Elem> next;
    next.reserve(current.size());
    for (auto x : current) {
      bool keep = std::all_of(maps.begin(), maps.end(), [&](const ElementMap& m) { return in[m[x]]; });
      if (keep) {
        next.push_back(x);
      } else {
        in[x] = false;
        changed = true;
      }
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  return current;
}

bool is_invariant(const Subgroup& h, std::span<const ElementMap> maps) {
  for (const auto& m : maps)
    for (auto x : h.members())
      if (!h.contains(m[x])) return false;
  return true;
}

bool commute_elementwise(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  const auto& ga = a.generators().empty() ? a.members() : a.generators();
  const auto& gb = b.generators().empty() ? b.members() : b.generators();
  for (auto x : ga)
    for (auto y : gb)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

namespace {

std::vector<std::uint16_t> table_from_right_multiplication(std::size_t n, std::size_t k,
                                                           const std::vector<Elem>& right,
                                                           const std::vector<Elem>& parent,
                                                           const std::vector<std::size_t>& via) {
  // x * y = (x * parent(y)) * g_via(y); parents precede children in index order.
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    auto* row = table.data() + x * n;
    row[0] = static_cast<std::uint16_t>(x);
    for (std::size_t y = 1; y < n; ++y) {
      row[y] = static_cast<std::uint16_t>(right[static_cast<std::size_t>(row[parent[y]]) * k + via[y]]);
    }
  }
  return table;
}

void check_cap(std::size_t order, std::size_t max_order) {
  const auto cap = std::min(max_order, FiniteGroup::kHardMaxOrder);
  if (order > cap) {
    throw InputError("group closure exceeds max_order " + std::to_string(cap));
  }
}

}  // namespace

FiniteGroup group_from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                    std::size_t max_order) {
  for (const auto& s : generators) {
    if (s.degree() != degree) throw InputError("generator degree mismatch");
  }
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_map<Permutation, Elem, PermutationHash> index{{elements[0], 0}};
  const std::size_t k = generators.size();
  std::vector<Elem> right;
  std::vector<Elem> parent{0};
  std::vector<std::size_t> via{0};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (std::size_t j = 0; j < k; ++j) {
      Permutation y = elements[head] * generators[j];
      auto [it, inserted] = index.try_emplace(y, static_cast<Elem>(elements.size()));
      if (inserted) {
        check_cap(elements.size() + 1, max_order);
        elements.push_back(std::move(y));
        parent.push_back(static_cast<Elem>(head));
        via.push_back(j);
      }
      right.push_back(it->second);
    }
  }
  const std::size_t n = elements.size();
  auto table = table_from_right_multiplication(n, k, right, parent, via);
  std::vector<Elem> gens;
  for (const auto& s : generators) gens.push_back(index.at(s));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : elements) labels.push_back(e.to_cycle_string());
  FiniteGroup g(n, std::move(table), std::move(gens), std::move(labels));
  verify_group_tables(g);
  return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t max_order) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  check_cap(na * nb, max_order);
  const std::size_t n = na * nb;
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem xa = static_cast<Elem>(x / nb);
    const Elem xb = static_cast<Elem>(x % nb);
    for (std::size_t y = 0; y < n; ++y) {
      const Elem ya = static_cast<Elem>(y / nb);
      const Elem yb = static_cast<Elem>(y % nb);
      table[x * n + y] = static_cast<std::uint16_t>(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  }
  std::vector<Elem> gens;
  for (auto s : a.generators()) gens.push_back(static_cast<Elem>(s * nb));
  for (auto s : b.generators()) gens.push_back(s);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = "(" + a.label(x / nb) + ", " + b.label(x % nb) + ")";
  FiniteGroup g(n, std::move(table), std::move(gens), std::move(labels));
  std::vector<Elem> left;
  std::vector<Elem> right;
  for (Elem x = 0; x < na; ++x) left.push_back(static_cast<Elem>(x * nb));
  for (Elem y = 0; y < nb; ++y) right.push_back(y);
  g.mark("left", std::move(left));
  g.mark("right", std::move(right));
  verify_group_tables(g);
  return g;
}

GeneratorTree generator_tree(const FiniteGroup& g) {
  GeneratorTree t;
  t.parent.assign(g.order(), 0);
  t.via.assign(g.order(), 0);
  std::vector<bool> seen(g.order(), false);
  t.order.push_back(0);
  seen[0] = true;
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    const Elem x = t.order[head];
    for (std::size_t j = 0; j < g.generators().size(); ++j) {
      const Elem y = g.mul(x, g.generators()[j]);
      if (!seen[y]) {
        seen[y] = true;
        t.parent[y] = x;
        t.via[y] = j;
        t.order.push_back(y);
      }
    }
  }
  if (t.order.size() != g.order()) throw ConsistencyError("generators do not generate the group");
  return t;
}

FiniteGroup semidirect_product(std::uint32_t p, std::size_t n, const FiniteGroup& acting,
                               const std::vector<FpMatrix>& action, std::size_t max_order) {
  if (!is_prime(p)) throw InputError("semidirect product needs a prime, got " + std::to_string(p));
  if (action.size() != acting.generators().size()) {
    throw InputError("semidirect product needs one matrix per acting generator (" +
                     std::to_string(acting.generators().size()) + "), got " + std::to_string(action.size()));
  }
  for (const auto& m : action) {
    if (m.rows() != n || m.cols() != n || m.prime() != p) throw InputError("action matrix has the wrong shape");
    if (!m.is_invertible()) throw InputError("action matrix is not invertible");
  }
  std::size_t q = 1;
  for (std::size_t i = 0; i < n; ++i) {
    q *= p;
    check_cap(q, max_order);
  }
  const std::size_t m = acting.order();
  check_cap(m * q, max_order);

  // Extend generator images along a spanning tree, then check the
  // homomorphism property on every (element, generator) pair, which is
  // equivalent to checking it on all pairs.
  auto tree = generator_tree(acting);
  std::vector<FpMatrix> rep(m);
  rep[0] = FpMatrix::identity(p, n);
  for (std::size_t i = 1; i < tree.order.size(); ++i) {
    const Elem y = tree.order[i];
    rep[y] = rep[tree.parent[y]] * action[tree.via[y]];
  }
  for (Elem x = 0; x < m; ++x) {
    for (std::size_t j = 0; j < action.size(); ++j) {
      if (rep[acting.mul(x, acting.generators()[j])] != rep[x] * action[j]) {
        throw InputError("semidirect action matrices do not define a homomorphism");
      }
    }
  }

  std::vector<FpVector> vectors(q);
  for (std::size_t u = 0; u < q; ++u) vectors[u] = fp_vector_from_index(u, p, n);
  auto index_of = [&](const FpVector& v) {
    std::size_t idx = 0;
    for (std::size_t i = n; i-- > 0;) idx = idx * p + v[i];
    return idx;
  };
  std::vector<std::size_t> act(m * q);
  for (std::size_t h = 0; h < m; ++h)
    for (std::size_t u = 0; u < q; ++u) act[h * q + u] = index_of(rep[h].apply(vectors[u]));
  std::vector<std::size_t> add(q * q);
  for (std::size_t u = 0; u < q; ++u) {
    for (std::size_t w = 0; w < q; ++w) {
      FpVector s(n);
      for (std::size_t i = 0; i < n; ++i) s[i] = (vectors[u][i] + vectors[w][i]) % p;
      add[u * q + w] = index_of(s);
    }
  }
  const std::size_t total = m * q;
  std::vector<std::uint16_t> table(total * total);
  for (std::size_t x = 0; x < total; ++x) {
    const std::size_t h1 = x / q;
    const std::size_t u1 = x % q;
    for (std::size_t y = 0; y < total; ++y) {
      const std::size_t h2 = y / q;
      const std::size_t u2 = y % q;
      table[x * total + y] = static_cast<std::uint16_t>(acting.mul(static_cast<Elem>(h1), static_cast<Elem>(h2)) * q +
                                                        add[u1 * q + act[h1 * q + u2]]);
    }
  }
  std::vector<Elem> gens;
  for (auto s : acting.generators()) gens.push_back(static_cast<Elem>(s * q));
  for (std::size_t i = 0; i < n; ++i) {
    FpVector e(n, 0);
    e[i] = 1;
    gens.push_back(static_cast<Elem>(index_of(e)));
  }
  std::vector<std::string> labels(total);
  for (std::size_t x = 0; x < total; ++x) {
    std::string u = "[";
    for (std::size_t i = 0; i < n; ++i) u += (i ? " " : "") + std::to_string(vectors[x % q][i]);
    labels[x] = "(" + acting.label(static_cast<Elem>(x / q)) + "; " + u + "])";
  }
  FiniteGroup g(total, std::move(table), std::move(gens), std::move(labels));
  std::vector<Elem> u_members(q);
  std::iota(u_members.begin(), u_members.end(), Elem{0});
  g.mark("U", std::move(u_members));
  std::size_t kernel = 0;
  for (std::size_t h = 0; h < m; ++h)
    if (rep[h].is_identity()) ++kernel;
  if (kernel > 1) {
    g.add_note("semidirect action is not faithful (kernel of order " + std::to_string(kernel) + ")");
  }
  verify_group_tables(g);
  return g;
}

EmbeddedGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  EmbeddedGroup out;
  out.embedding = h.members();
  out.local_of.assign(g.order(), -1);
  for (std::size_t i = 0; i < out.embedding.size(); ++i) out.local_of[out.embedding[i]] = static_cast<std::int64_t>(i);
  const std::size_t n = out.embedding.size();
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto local = out.local_of[g.mul(out.embedding[a], out.embedding[b])];
      if (local < 0) throw InputError("subset is not closed under multiplication");
      table[a * n + b] = static_cast<std::uint16_t>(local);
    }
  }
  std::vector<Elem> parent_gens = h.generators();
  if (parent_gens.empty() && n > 1) parent_gens = subgroup_closure(g, h.members()).generators();
  std::vector<Elem> gens;
  for (auto s : parent_gens) gens.push_back(static_cast<Elem>(out.local_of[s]));
  std::vector<std::string> labels;
  for (auto x : out.embedding) labels.push_back(g.label(x));
  out.group = FiniteGroup(n, std::move(table), std::move(gens), std::move(labels));
  return out;
}

}  // namespace irrep
