#include <doctest.h>

#include <algorithm>
#include <set>

#include "irrep/errors.hpp"
#include "irrep/socle.hpp"
#include "oracles.hpp"

using namespace irrep;

namespace {

std::vector<std::vector<Elem>> member_lists(const std::vector<Subgroup>& subs) {
  std::vector<std::vector<Elem>> out;
  for (const auto& s : subs) out.push_back(s.members());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_simple_by_oracle(const FiniteGroup& g, const Subgroup& h) {
  const auto eg = subgroup_as_group(g, h);
  return oracle::normal_subgroups(eg.group).size() == 2;
}

}  // namespace

TEST_CASE("minimal normal subgroups agree with the class-union oracle") {
  for (const char* spec :
       {"cyclic 12", "cyclic 9", "elemabelian 2 3", "product (cyclic 2) (cyclic 4)", "dihedral 8", "dihedral 12",
        "quaternion 8", "symmetric 3", "symmetric 4", "symmetric 5", "alternating 4", "alternating 5",
        "product (cyclic 3) (alternating 5)", "semidirect 2 2 (symmetric 3) [0 1; 1 0], [0 1; 1 1]",
        "product (symmetric 3) (symmetric 3)"}) {
    CAPTURE(spec);
    const auto g = oracle::build(spec);
    CHECK(member_lists(minimal_normal_subgroups(g)) == oracle::minimal_normal_subgroups(g));
  }
}

TEST_CASE("socles of symmetric groups") {
  const auto alt = [](int n) { return oracle::build("alternating " + std::to_string(n)).order(); };
  for (int n : {3, 5, 6}) {
    const auto g = oracle::build("symmetric " + std::to_string(n));
    const auto s = socle(g);
    CHECK(s.size() == alt(n));
    // The alternating group is the set of even permutations: index 2, squares inside.
    for (Elem x = 0; x < g.order(); ++x) CHECK(s.contains(g.mul(x, x)));
  }
  const auto s4 = oracle::build("symmetric 4");
  const auto v = socle(s4);
  CHECK(v.size() == 4);
  std::set<std::string> labels;
  for (auto x : v.members()) labels.insert(s4.label(x));
  CHECK(labels == std::set<std::string>{"()", "(0 1)(2 3)", "(0 2)(1 3)", "(0 3)(1 2)"});
}

TEST_CASE("alternating group of degree four has the Vierergruppe as unique foot") {
  const auto g = oracle::build("alternating 4");
  const auto feet = minimal_normal_subgroups(g);
  REQUIRE(feet.size() == 1);
  CHECK(feet[0].size() == 4);
  for (auto x : feet[0].members()) CHECK(g.mul(x, x) == 0);
  const auto f = classify_foot(g, feet[0]);
  REQUIRE(f.is_abelian());
  CHECK(f.abelian().p == 2);
  CHECK(f.abelian().rank == 2);
}

TEST_CASE("socle of the semidirect entry is the vector space") {
  const auto g = oracle::build("semidirect 2 2 (symmetric 3) [0 1; 1 0], [0 1; 1 1]");
  CHECK(socle(g).members() == g.marked().at("U"));
}

TEST_CASE("decomposition invariants") {
  for (const char* spec :
       {"cyclic 1", "cyclic 30", "elemabelian 3 2", "product (cyclic 2) (cyclic 4)", "dihedral 12",
        "quaternion 8", "symmetric 4", "symmetric 6", "alternating 6", "product (cyclic 3) (alternating 5)",
        "product (alternating 5) (alternating 5)", "product (symmetric 3) (symmetric 3)",
        "product (cyclic 6) (alternating 4)"}) {
    CAPTURE(spec);
    const auto g = oracle::build(spec);
    const auto d = minisocle_decomposition(g);
    CHECK(d.ms.size() == d.ma.size() * d.mh.size());
    CHECK(socle(g) == d.ms);
    CHECK(d.ma.is_subset_of(d.ms));
    CHECK(d.mh.is_subset_of(d.ms));
    CHECK(intersection(g, d.ma, d.mh).is_trivial());

    // Abelian summands: elementary abelian with a basis of the right size.
    for (auto i : d.ma_summands) {
      const auto& foot = d.feet[i];
      REQUIRE(foot.is_abelian());
      const auto& a = foot.abelian();
      std::size_t expected = 1;
      for (std::size_t r = 0; r < a.rank; ++r) expected *= a.p;
      CHECK(foot.carrier.size() == expected);
      for (auto x : foot.carrier.members())
        if (x != 0) CHECK(g.element_order(x) == a.p);
      CHECK(oracle::closure(g, a.basis) == foot.carrier.members());
    }
    // Nonabelian feet: simple factors, all conjugate to the first.
    for (const auto& foot : d.feet) {
      if (foot.is_abelian()) continue;
      const auto& simple = foot.nonabelian().simple_feet;
      for (const auto& s : simple) {
        CHECK(is_simple_by_oracle(g, s));
        bool conjugate = false;
        for (Elem x = 0; x < g.order() && !conjugate; ++x) {
          std::vector<Elem> image;
          for (auto y : simple[0].members()) image.push_back(g.conj(x, y));
          std::sort(image.begin(), image.end());
          conjugate = image == s.members();
        }
        CHECK(conjugate);
      }
      CHECK(oracle::join_all(g, member_lists(simple)) == foot.carrier.members());
      CHECK(is_internal_direct_sum(g, simple));
    }
    // Unique factorization: the component map is a bijection onto MS.
    std::set<std::vector<Elem>> seen;
    for (auto z : d.ms.members()) {
      const auto f = d.factorization(z);
      Elem prod = 0;
      for (std::size_t c = 0; c < f.size(); ++c) {
        CHECK(d.components[c].contains(f[c]));
        prod = g.mul(prod, f[c]);
      }
      CHECK(prod == z);
      CHECK(seen.insert(f).second);
    }
    std::size_t product = 1;
    for (const auto& c : d.components) product *= c.size();
    CHECK(product == d.ms.size());
  }
}

TEST_CASE("two alternating feet in a direct square") {
  const auto g = oracle::build("product (alternating 5) (alternating 5)");
  const auto d = minisocle_decomposition(g);
  CHECK(d.feet.size() == 2);
  CHECK(d.ma.is_trivial());
  CHECK(d.mh.size() == 3600);
  for (const auto& f : d.feet) {
    REQUIRE_FALSE(f.is_abelian());
    CHECK(f.nonabelian().simple_feet.size() == 1);
  }
}

TEST_CASE("greedy abelian family omits redundant feet") {
  // Z/2 x Z/2 has three feet of order 2; any two form MA.
  const auto g = oracle::build("elemabelian 2 2");
  const auto d = minisocle_decomposition(g);
  CHECK(d.feet.size() == 3);
  CHECK(d.ma_summands.size() == 2);
  CHECK(d.ma.size() == 4);
}

TEST_CASE("non-minimal subgroups are rejected") {
  const auto g = oracle::build("symmetric 4");
  const auto maps = inner_maps(g);
  const auto a4 = normal_closure(g, {g.generators()[0]});  // 4-cycle: closure is the whole group
  CHECK_THROWS_AS(classify_invariant_foot(g, a4, maps), InputError);
  CHECK_FALSE(is_simple(g, whole_group(g)));
  CHECK(is_simple(oracle::build("alternating 5"), whole_group(oracle::build("alternating 5"))));
}
