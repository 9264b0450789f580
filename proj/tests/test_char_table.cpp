#include <doctest.h>

#include <random>
#include <set>

#include <Eigen/QR>

#include "irrep/char_table.hpp"
#include "irrep/errors.hpp"
#include "oracles.hpp"

using namespace irrep;

namespace {

std::vector<std::size_t> degrees_of(const char* spec) { return character_table(oracle::build(spec)).degrees; }

Eigen::MatrixXcd random_unitary(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(d(rng), d(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
  return qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
}

}  // namespace

TEST_CASE("known degree sequences") {
  CHECK(degrees_of("symmetric 3") == std::vector<std::size_t>{1, 1, 2});
  CHECK(degrees_of("quaternion 8") == std::vector<std::size_t>{1, 1, 1, 1, 2});
  CHECK(degrees_of("symmetric 4") == std::vector<std::size_t>{1, 1, 2, 3, 3});
  CHECK(degrees_of("alternating 5") == std::vector<std::size_t>{1, 3, 3, 4, 5});
  CHECK(degrees_of("symmetric 5") == std::vector<std::size_t>{1, 1, 4, 4, 5, 5, 6});
  CHECK(degrees_of("dihedral 10") == std::vector<std::size_t>{1, 1, 2, 2});
  CHECK(degrees_of("cyclic 1") == std::vector<std::size_t>{1});
}

TEST_CASE("cyclic group of order four") {
  const auto g = oracle::build("cyclic 4");
  const auto t = character_table(g);
  REQUIRE(t.size() == 4);
  CHECK(t.is_trivial_row(0));
  const std::vector<Complex> roots = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::set<std::vector<std::pair<double, double>>> rows;
  for (std::size_t r = 0; r < 4; ++r) {
    std::vector<std::pair<double, double>> row;
    for (Elem x = 0; x < 4; ++x) {
      const Complex v = t.value(r, x);
      double best = 10;
      for (const auto& w : roots) best = std::min(best, std::abs(v - w));
      CHECK(best < 1e-10);
      row.emplace_back(std::round(v.real()), std::round(v.imag()));
    }
    rows.insert(row);
  }
  CHECK(rows.size() == 4);
}

TEST_CASE("linear characters are homomorphisms") {
  for (const char* spec : {"cyclic 12", "product (cyclic 2) (cyclic 4)", "symmetric 4", "dihedral 12"}) {
    CAPTURE(spec);
    const auto g = oracle::build(spec);
    const auto t = character_table(g);
    for (std::size_t r = 0; r < t.size(); ++r) {
      if (t.degrees[r] != 1) continue;
      for (Elem x = 0; x < g.order(); ++x)
        for (Elem y = 0; y < g.order(); ++y)
          CHECK(std::abs(t.value(r, g.mul(x, y)) - t.value(r, x) * t.value(r, y)) < 1e-9);
    }
  }
}

TEST_CASE("functional equation of irreducible characters") {
  // sum_g chi(x g y g^-1) = |G| chi(x) chi(y) / chi(1)
  std::mt19937 rng(8);
  for (const char* spec : {"quaternion 8", "symmetric 4", "alternating 5", "dihedral 10"}) {
    CAPTURE(spec);
    const auto g = oracle::build(spec);
    const auto t = character_table(g);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g.order() - 1));
    for (std::size_t r = 0; r < t.size(); ++r) {
      for (int k = 0; k < 5; ++k) {
        const Elem x = pick(rng), y = pick(rng);
        Complex lhs = 0;
        for (Elem s = 0; s < g.order(); ++s) lhs += t.value(r, g.mul(x, g.conj(s, y)));
        const Complex rhs = static_cast<double>(g.order()) * t.value(r, x) * t.value(r, y) /
                            static_cast<double>(t.degrees[r]);
        CHECK(std::abs(lhs - rhs) < 1e-8);
      }
    }
  }
}

TEST_CASE("table self-checks and normal kernels") {
  for (const char* spec : {"symmetric 5", "alternating 6", "quaternion 12", "product (cyclic 3) (alternating 5)"}) {
    CAPTURE(spec);
    const auto g = oracle::build(spec);
    const auto t = character_table(g);
    const auto c = check_character_table(t);
    CHECK(c.passes(1e-8));
    CHECK(t.size() == oracle::classes(g).size());
    for (std::size_t r = 0; r < t.size(); ++r) {
      const auto k = t.kernel(r);
      CHECK(oracle::closure(g, k) == k);
      CHECK(oracle::is_normal(g, k));
    }
  }
}

TEST_CASE("faithful irreducible characters") {
  CHECK_FALSE(has_faithful_irreducible(oracle::build("elemabelian 2 2"), character_table(oracle::build("elemabelian 2 2"))));
  const auto q8 = oracle::build("quaternion 8");
  const auto row = has_faithful_irreducible(q8, character_table(q8));
  REQUIRE(row);
  CHECK(character_table(q8).degrees[*row] == 2);

  // (Z/2)^3 with coordinate permutations adjoined.
  const auto e = oracle::build("elemabelian 2 3");
  const auto& gens = e.generators();
  auto coordinate_map = [&](std::vector<int> perm) {
    ElementMap m(e.order());
    for (Elem x = 0; x < e.order(); ++x) {
      // Decompose x in the generator basis by brute force.
      for (int bits = 0; bits < 8; ++bits) {
        Elem y = 0, z = 0;
        for (int i = 0; i < 3; ++i)
          if (bits >> i & 1) {
            y = e.mul(y, gens[i]);
            z = e.mul(z, gens[perm[i]]);
          }
        if (y == x) m[x] = z;
      }
    }
    return m;
  };
  const std::vector<ElementMap> autos = {coordinate_map({1, 0, 2}), coordinate_map({1, 2, 0})};
  const auto te = character_table(e);
  CHECK_FALSE(has_faithful_irreducible(e, te));
  const auto g_row = has_faithful_irreducible(e, te, autos);
  REQUIRE(g_row);
  CHECK(te.degrees[*g_row] == 1);
}

TEST_CASE("explicit representations") {
  SUBCASE("cyclic of order three") {
    const auto g = oracle::build("cyclic 3");
    const auto t = character_table(g);
    const auto rep = construct_irreducible_rep(g, t, 1);
    CHECK(rep.degree == 1);
    const Complex w = rep.images[g.generators()[0]](0, 0);
    CHECK(std::abs(std::pow(w, 3) - Complex(1, 0)) < 1e-10);
    CHECK(std::abs(w - Complex(1, 0)) > 0.5);
  }
  SUBCASE("symmetric of degree three") {
    const auto g = oracle::build("symmetric 3");
    const auto t = character_table(g);
    const auto rep = construct_irreducible_rep(g, t, 2);
    REQUIRE(rep.degree == 2);
    CHECK(rep.commutant_dimension == 1);
    for (Elem x = 0; x < g.order(); ++x)
      if (g.element_order(x) == 2) CHECK(std::abs(rep.images[x].trace()) < 1e-10);
    const auto c = check_irrep(g, t, rep);
    CHECK(c.unitarity < 1e-10);
    CHECK(c.multiplicativity < 1e-10);
  }
  SUBCASE("quaternion group") {
    const auto g = oracle::build("quaternion 8");
    const auto t = character_table(g);
    const auto rep = construct_irreducible_rep(g, t, 4);
    const auto c = check_irrep(g, t, rep);
    CHECK(c.min_pairwise_distance > 1e-6);
    CHECK(rep.commutant_dimension == 1);
  }
  SUBCASE("faithfulness follows the kernel") {
    const auto g = oracle::build("symmetric 4");
    const auto t = character_table(g);
    for (std::size_t r = 0; r < t.size(); ++r) {
      const auto rep = construct_irreducible_rep(g, t, r);
      std::set<std::vector<std::pair<long long, long long>>> distinct;
      for (const auto& m : rep.images) {
        std::vector<std::pair<long long, long long>> key;
        for (Eigen::Index i = 0; i < m.size(); ++i)
          key.emplace_back(std::llround(m.data()[i].real() * 1e6), std::llround(m.data()[i].imag() * 1e6));
        distinct.insert(key);
      }
      CHECK(distinct.size() * t.kernel(r).size() == g.order());
    }
  }
  SUBCASE("size precondition") {
    const auto g = oracle::build("symmetric 6");
    CHECK_THROWS_AS(construct_irreducible_rep(g, character_table(g), 1), InputError);
  }
}

TEST_CASE("tensor products with a non-scalar factor are non-scalar") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int t = 0; t < 100; ++t) {
    const auto s1 = random_unitary(dim(rng) + 1, rng);  // degree >= 2, almost surely non-scalar
    const auto s2 = random_unitary(dim(rng), rng);
    REQUIRE(scalar_distance(s1) > 1e-6);
    CHECK(scalar_distance(kronecker(s1, s2)) > 1e-9);
  }
  // A scalar factor on both sides gives a scalar.
  const Eigen::MatrixXcd a = Complex(0, 1) * Eigen::MatrixXcd::Identity(2, 2);
  const Eigen::MatrixXcd b = Complex(-1, 0) * Eigen::MatrixXcd::Identity(3, 3);
  CHECK(scalar_distance(kronecker(a, b)) < 1e-15);
}
