#include <doctest.h>

#include <random>
#include <set>

#include "irrep/errors.hpp"
#include "irrep/fp_linalg.hpp"

using irrep::FpMatrix;
using irrep::FpSubspace;

namespace {

FpMatrix random_matrix(std::uint32_t p, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, d(rng));
  return m;
}

}  // namespace

TEST_CASE("primality") {
  const std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13, 97, 7919};
  for (auto p : primes) CHECK(irrep::is_prime(p));
  for (std::uint64_t n : {0, 1, 4, 9, 91, 7917}) CHECK_FALSE(irrep::is_prime(n));
}

TEST_CASE("inverse matrices over F_p") {
  std::mt19937 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int t = 0; t < 40; ++t) {
      const auto m = random_matrix(p, 3, rng);
      if (!m.is_invertible()) {
        CHECK_THROWS_AS(m.inverse(), irrep::InputError);
        continue;
      }
      CHECK((m * m.inverse()).is_identity());
      CHECK((m.inverse() * m).is_identity());
    }
  }
}

TEST_CASE("rank of known matrices") {
  CHECK(FpMatrix(2, 2, 2, {1, 1, 1, 1}).rank() == 1);
  CHECK(FpMatrix(3, 2, 2, {1, 2, 2, 1}).rank() == 1);  // 1*1 - 2*2 = -3 = 0 mod 3
  CHECK(FpMatrix(5, 2, 2, {1, 2, 2, 1}).rank() == 2);
}

TEST_CASE("subspace membership agrees with brute-force span") {
  std::mt19937 rng(5);
  const std::uint32_t p = 3;
  const std::size_t dim = 3;
  for (int t = 0; t < 30; ++t) {
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    std::vector<irrep::FpVector> gens(2, irrep::FpVector(dim));
    for (auto& v : gens)
      for (auto& c : v) c = d(rng);
    FpSubspace s(p, dim);
    for (const auto& v : gens) s.add(v);
    // All combinations a*g0 + b*g1.
    std::set<irrep::FpVector> span;
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) {
        irrep::FpVector v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = (a * gens[0][i] + b * gens[1][i]) % p;
        span.insert(v);
      }
    std::size_t expected_dim = 0;
    for (std::size_t size = span.size(); size > 1; size /= p) ++expected_dim;
    CHECK(s.dimension() == expected_dim);
    for (std::uint64_t i = 0; i < 27; ++i) {
      const auto v = irrep::fp_vector_from_index(i, p, dim);
      CHECK(s.contains(v) == (span.count(v) == 1));
    }
  }
}

TEST_CASE("invariant subspaces of a Jordan block and a permutation module") {
  // Unipotent Jordan block over F_2: the only invariant subspaces form a chain.
  const FpMatrix j(2, 2, 2, {1, 1, 0, 1});
  const FpMatrix gens[] = {j};
  CHECK(irrep::invariant_subspaces(2, 2, gens).size() == 3);
  CHECK_FALSE(irrep::is_semisimple_module(2, 2, gens));

  // Coordinate swap over F_3: fixed line and sign line, semisimple.
  const FpMatrix swap(3, 2, 2, {0, 1, 1, 0});
  const FpMatrix gens3[] = {swap};
  CHECK(irrep::invariant_subspaces(3, 2, gens3).size() == 4);
  CHECK(irrep::is_semisimple_module(3, 2, gens3));
}

TEST_CASE("invariant span of an orbit") {
  const FpMatrix cyc(2, 3, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0});
  const FpMatrix gens[] = {cyc};
  const irrep::FpVector e0[] = {{1, 0, 0}};
  CHECK(irrep::invariant_span(2, 3, gens, e0).is_full());
  const irrep::FpVector diag[] = {{1, 1, 1}};
  CHECK(irrep::invariant_span(2, 3, gens, diag).dimension() == 1);
  const irrep::FpVector sum_zero[] = {{1, 1, 0}};
  CHECK(irrep::invariant_span(2, 3, gens, sum_zero).dimension() == 2);
}

TEST_CASE("vector decoding is little-endian base p") {
  CHECK(irrep::fp_vector_from_index(5, 2, 3) == irrep::FpVector{1, 0, 1});
  CHECK(irrep::fp_vector_from_index(7, 3, 2) == irrep::FpVector{1, 2});
}
