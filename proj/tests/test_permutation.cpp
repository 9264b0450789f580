#include <doctest.h>

#include <random>

#include "irrep/errors.hpp"
#include "irrep/permutation.hpp"

using irrep::Permutation;

TEST_CASE("permutation composition is right to left") {
  const auto a = Permutation::from_cycles(3, {{0, 1}});
  const auto b = Permutation::from_cycles(3, {{1, 2}});
  const auto ab = a * b;
  // b sends 1 to 2, then a fixes 2.
  CHECK(ab(1) == 2);
  CHECK(ab(2) == 0);
  CHECK(ab(0) == 1);
  CHECK(ab.to_cycle_string() == "(0 1 2)");
}

TEST_CASE("identity and inverse") {
  CHECK(Permutation::identity(4).to_cycle_string() == "()");
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    std::vector<std::uint32_t> img(7);
    for (std::uint32_t i = 0; i < 7; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation p(img);
    CHECK((p * p.inverse()).is_identity());
    CHECK((p.inverse() * p).is_identity());
  }
}

TEST_CASE("malformed permutations are rejected") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), irrep::InputError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 3}}), irrep::InputError);
  CHECK_THROWS_AS(Permutation::from_cycles(4, {{0, 1}, {1, 2}}), irrep::InputError);
  CHECK_THROWS_AS(Permutation::identity(2) * Permutation::identity(3), irrep::InputError);
}

TEST_CASE("cycle strings list cycles by least point") {
  const auto p = Permutation::from_cycles(6, {{4, 5}, {2, 0, 1}});
  CHECK(p.to_cycle_string() == "(0 1 2)(4 5)");
}
