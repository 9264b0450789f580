#include <doctest.h>

#include "irrep/dsl.hpp"
#include "irrep/errors.hpp"
#include "oracles.hpp"

using namespace irrep;

TEST_CASE("canonical text round-trips") {
  for (const char* text : {"cyclic 7", "symmetric 4", "elemabelian 3 2", "perm 4: (0 1 2 3), (0 1)",
                           "product (cyclic 2) (product (cyclic 3) (alternating 5))",
                           "semidirect 2 2 (symmetric 3) [0 1; 1 0], [0 1; 1 1]", "perm 3: (0)"}) {
    CAPTURE(text);
    const auto spec = parse_group_spec(text);
    CHECK(parse_group_spec(to_string(spec)) == spec);
    CHECK(to_string(parse_group_spec(to_string(spec))) == to_string(spec));
  }
}

TEST_CASE("whitespace and newlines are insignificant") {
  CHECK(parse_group_spec("product(cyclic 2)\n  (cyclic 4)") == parse_group_spec("product (cyclic 2) (cyclic 4)"));
}

TEST_CASE("parse errors carry positions") {
  auto position = [](const char* text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_group_spec(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(position("cyclc 3") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(position("product (cyclic 2)\n(frob 3)") == std::pair<std::size_t, std::size_t>{2, 2});
  CHECK(position("perm 3: (0 3)").first == 1);
  CHECK(position("perm 3: (0 3)").second == 12);
  CHECK(position("dihedral 7").second == 1);
  CHECK(position("elemabelian 4 2").second == 1);
  CHECK(position("cyclic 3 $").second == 10);
}

TEST_CASE("semantic rejections") {
  CHECK_THROWS_AS(parse_group_spec("semidirect 2 2 (cyclic 2) [1 1; 1 1]"), ParseError);  // singular
  CHECK_THROWS_AS(parse_group_spec("semidirect 4 1 (cyclic 2) [1]"), ParseError);         // not prime
  CHECK_THROWS_AS(parse_group_spec("semidirect 2 2 (cyclic 2) [1 0]"), ParseError);       // wrong shape
  CHECK_THROWS_AS(parse_group_spec("quaternion 6"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("cyclic 0"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("cyclic"), ParseError);
  CHECK_THROWS_AS(parse_group_spec(""), ParseError);
  // Matrix count must match the acting generators; this is only known once built.
  CHECK_THROWS_AS(build_group(parse_group_spec("semidirect 2 1 (symmetric 3) [1]")), InputError);
  // Not a homomorphism: the transposition and the 3-cycle both sent to [0 1; 1 1].
  CHECK_THROWS_AS(build_group(parse_group_spec("semidirect 2 2 (symmetric 3) [0 1; 1 1], [0 1; 1 1]")), InputError);
}

TEST_CASE("autos blocks and words") {
  const auto autos = parse_autos_block("autos:\n g0 -> g1, g1 -> g0 ; g0 -> g0^-1\n");
  REQUIRE(autos.size() == 2);
  CHECK(autos[0].images.size() == 2);
  CHECK(autos[0].images[0] == std::pair<std::size_t, std::string>{0, "g1"});
  CHECK(autos[1].images[0].second == "g0^-1");
  CHECK_THROWS_AS(parse_autos_block("g0 = g1"), ParseError);
  CHECK_THROWS_AS(parse_autos_block("x0 -> g1"), ParseError);

  const auto g = oracle::build("cyclic 5");
  const Elem a = g.generators()[0];
  CHECK(evaluate_word(g, "e") == 0);
  CHECK(evaluate_word(g, "g0 g0") == g.mul(a, a));
  CHECK(evaluate_word(g, "g0^-1") == g.inv(a));
  CHECK(evaluate_word(g, "g0^7") == g.mul(a, a));
  CHECK_THROWS_AS(evaluate_word(g, "g1"), InputError);
  CHECK_THROWS_AS(evaluate_word(g, "h0"), InputError);

  const auto [spec, block] = split_autos("cyclic 4 autos: g0 -> g0^-1");
  CHECK(spec == "cyclic 4");
  CHECK(block == "g0 -> g0^-1");
}

TEST_CASE("family generators") {
  // Dihedral of order 4 is the Klein four group.
  CHECK(oracle::build("dihedral 4").is_abelian());
  CHECK_FALSE(oracle::build("dihedral 4").is_cyclic());
  for (int n = 3; n <= 7; ++n) {
    const auto g = oracle::build("alternating " + std::to_string(n));
    for (auto s : g.generators()) CHECK(g.label(s) != "");
    std::size_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(g.order() == fact / 2);
  }
}
