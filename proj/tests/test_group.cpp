#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "irrep/errors.hpp"
#include "irrep/group.hpp"
#include "oracles.hpp"

using namespace irrep;

namespace {

std::vector<Elem> members(const Subgroup& s) { return s.members(); }

}  // namespace

TEST_CASE("family orders") {
  const std::vector<std::pair<std::string, std::size_t>> cases = {
      {"cyclic 1", 1},        {"cyclic 12", 12},        {"symmetric 4", 24},   {"symmetric 5", 120},
      {"alternating 4", 12},  {"alternating 5", 60},    {"alternating 2", 1},  {"dihedral 8", 8},
      {"dihedral 4", 4},      {"quaternion 8", 8},      {"quaternion 12", 12}, {"elemabelian 3 2", 9},
      {"elemabelian 2 3", 8}, {"product (cyclic 2) (cyclic 4)", 8},
      {"semidirect 2 2 (symmetric 3) [0 1; 1 0], [0 1; 1 1]", 24}};
  for (const auto& [spec, order] : cases) {
    CAPTURE(spec);
    const auto g = oracle::build(spec);
    CHECK(g.order() == order);
    CHECK_NOTHROW(verify_group_tables(g));
  }
}

TEST_CASE("Cayley table matches permutation composition") {
  const std::vector<Permutation> gens = {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}),
                                         Permutation::from_cycles(5, {{0, 1}})};
  const auto g = group_from_permutations(5, gens);
  // Independent enumeration of the same permutation group.
  std::map<std::string, Permutation> by_label;
  std::vector<Permutation> frontier = {Permutation::identity(5)};
  by_label.emplace("()", Permutation::identity(5));
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (const auto& s : gens) {
        const auto q = p * s;
        if (by_label.emplace(q.to_cycle_string(), q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  REQUIRE(by_label.size() == g.order());
  std::mt19937 rng(2);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g.order() - 1));
  for (int t = 0; t < 2000; ++t) {
    const Elem a = pick(rng), b = pick(rng);
    const auto expected = by_label.at(g.label(a)) * by_label.at(g.label(b));
    CHECK(g.label(g.mul(a, b)) == expected.to_cycle_string());
  }
  CHECK(g.label(0) == "()");
}

TEST_CASE("element orders of the quaternion group") {
  const auto g = oracle::build("quaternion 8");
  std::map<std::size_t, int> counts;
  for (Elem x = 0; x < g.order(); ++x) ++counts[g.element_order(x)];
  CHECK(counts[1] == 1);
  CHECK(counts[2] == 1);
  CHECK(counts[4] == 6);
  CHECK_FALSE(g.is_abelian());
}

TEST_CASE("abelian and cyclic predicates") {
  CHECK(oracle::build("cyclic 12").is_cyclic());
  CHECK(oracle::build("product (cyclic 3) (cyclic 4)").is_cyclic());
  CHECK_FALSE(oracle::build("product (cyclic 2) (cyclic 4)").is_cyclic());
  CHECK(oracle::build("elemabelian 2 3").is_abelian());
  CHECK_FALSE(oracle::build("dihedral 6").is_abelian());
}

TEST_CASE("closures agree with brute force") {
  std::mt19937 rng(9);
  for (const char* spec : {"symmetric 4", "dihedral 12", "quaternion 8", "alternating 5",
                           "product (cyclic 2) (symmetric 3)"}) {
    CAPTURE(spec);
    const auto g = oracle::build(spec);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g.order() - 1));
    for (int t = 0; t < 25; ++t) {
      const std::vector<Elem> seed = {pick(rng), pick(rng)};
      CHECK(members(subgroup_closure(g, seed)) == oracle::closure(g, seed));
      const std::vector<Elem> one = {seed[0]};
      CHECK(members(normal_closure(g, one)) == oracle::normal_closure(g, one));
    }
  }
}

TEST_CASE("conjugacy classes agree with brute force") {
  for (const char* spec : {"symmetric 5", "dihedral 10", "quaternion 8", "alternating 4"}) {
    CAPTURE(spec);
    const auto g = oracle::build(spec);
    const auto cc = conjugacy_classes(g);
    auto expected = oracle::classes(g);
    auto got = cc.classes;
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
    for (std::size_t c = 0; c < cc.classes.size(); ++c)
      for (auto x : cc.classes[c]) CHECK(cc.class_of[x] == c);
  }
}

TEST_CASE("invariant core under conjugation is the normal core") {
  const auto g = oracle::build("symmetric 4");
  const auto maps = inner_maps(g);
  std::mt19937 rng(4);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g.order() - 1));
  for (int t = 0; t < 30; ++t) {
    const auto h = oracle::closure(g, {pick(rng)});
    // Intersection of all conjugates.
    std::set<Elem> core(h.begin(), h.end());
    for (Elem x = 0; x < g.order(); ++x) {
      std::set<Elem> conj;
      for (auto y : h) conj.insert(g.conj(x, y));
      std::set<Elem> keep;
      for (auto y : core)
        if (conj.count(y)) keep.insert(y);
      core = keep;
    }
    CHECK(invariant_core(h, g.order(), maps) == std::vector<Elem>(core.begin(), core.end()));
  }
}

TEST_CASE("direct product marks its factors") {
  const auto g = oracle::build("product (symmetric 3) (cyclic 4)");
  const auto& left = g.marked().at("left");
  const auto& right = g.marked().at("right");
  CHECK(left.size() == 6);
  CHECK(right.size() == 4);
  for (auto a : left)
    for (auto b : right) CHECK(g.mul(a, b) == g.mul(b, a));
  CHECK(oracle::is_normal(g, oracle::closure(g, left)));
}

TEST_CASE("semidirect product structure") {
  const auto g = oracle::build("semidirect 2 2 (symmetric 3) [0 1; 1 0], [0 1; 1 1]");
  const auto& u = g.marked().at("U");
  CHECK(u.size() == 4);
  CHECK(oracle::is_normal(g, u));
  CHECK(g.notes().empty());
  // Unfaithful action: Sym(3) acting through its sign on F_3.
  const auto h = oracle::build("semidirect 3 1 (symmetric 3) [2], [1]");
  CHECK(h.order() == 18);
  CHECK_FALSE(h.notes().empty());
}

TEST_CASE("size caps") {
  CHECK_THROWS_AS(build_group(parse_group_spec("symmetric 8")), InputError);
  CHECK_THROWS_AS(build_group(parse_group_spec("cyclic 50"), 40), InputError);
  CHECK_NOTHROW(build_group(parse_group_spec("symmetric 7")));
}

TEST_CASE("subgroups re-indexed as groups") {
  const auto g = oracle::build("symmetric 4");
  const auto h = normal_closure(g, {g.generators()[0]});
  const auto eg = subgroup_as_group(g, h);
  REQUIRE(eg.group.order() == h.size());
  CHECK_NOTHROW(verify_group_tables(eg.group));
  for (Elem a = 0; a < eg.group.order(); ++a)
    for (Elem b = 0; b < eg.group.order(); ++b)
      CHECK(eg.embedding[eg.group.mul(a, b)] == g.mul(eg.embedding[a], eg.embedding[b]));
}

TEST_CASE("generator tree reconstructs every element") {
  const auto g = oracle::build("dihedral 12");
  const auto t = generator_tree(g);
  CHECK(t.order.size() == g.order());
  for (std::size_t i = 1; i < t.order.size(); ++i) {
    const Elem y = t.order[i];
    CHECK(g.mul(t.parent[y], g.generators()[t.via[y]]) == y);
  }
}

TEST_CASE("orbits partition the domain") {
  const auto g = oracle::build("alternating 5");
  const auto maps = inner_maps(g);
  const auto w = whole_group(g);
  const auto orbs = orbits(maps, w.members());
  std::size_t total = 0;
  for (const auto& o : orbs) total += o.size();
  CHECK(total == 60);
  CHECK(orbs.size() == 5);
}
