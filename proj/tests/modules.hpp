#pragma once

// Test-side F_p modules: hand-built modules, brute-force orbit spans and a
// fixed-seed generator of random semisimple modules.

#include <random>
#include <set>
#include <vector>

#include "irrep/criterion.hpp"
#include "irrep/fp_linalg.hpp"

namespace modules {

using irrep::FpMatrix;
using irrep::FpModule;
using irrep::FpVector;
using irrep::fp_vector_from_index;

inline FpModule bare_module(std::uint32_t p, std::size_t dim, std::vector<FpMatrix> action) {
  FpModule m;
  m.p = p;
  m.dim = dim;
  m.block_offsets = {0, dim};
  m.action = std::move(action);
  return m;
}

// Orbit of v by breadth-first search over vectors, then the rank of the orbit.
inline bool orbit_spans(std::uint32_t p, std::size_t dim, const std::vector<FpMatrix>& gens, const FpVector& v) {
  std::set<FpVector> seen = {v};
  std::vector<FpVector> frontier = {v};
  while (!frontier.empty()) {
    std::vector<FpVector> next;
    for (const auto& w : frontier)
      for (const auto& a : gens) {
        auto u = a.apply(w);
        if (seen.insert(u).second) next.push_back(u);
      }
    frontier = std::move(next);
  }
  std::vector<std::uint32_t> entries;
  for (const auto& w : seen) entries.insert(entries.end(), w.begin(), w.end());
  return FpMatrix(p, seen.size(), dim, entries).rank() == dim;
}

inline bool some_orbit_spans(std::uint32_t p, std::size_t dim, const std::vector<FpMatrix>& gens) {
  if (dim == 0) return true;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= p;
  for (std::uint64_t i = 1; i < total; ++i)
    if (orbit_spans(p, dim, gens, fp_vector_from_index(i, p, dim))) return true;
  return false;
}

inline FpMatrix random_invertible(std::uint32_t p, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
  for (;;) {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, d(rng));
    if (m.is_invertible()) return m;
  }
}

// Block-diagonal generators (each block random, identity or scalar), then a
// random change of basis, so that reducible modules show up often.
inline std::vector<FpMatrix> random_generators(std::uint32_t p, std::size_t dim, std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 3);
  std::vector<std::size_t> blocks;
  if (coin(rng) == 0) {
    blocks = {dim};
  } else {
    std::uniform_int_distribution<std::size_t> width(1, dim);
    for (std::size_t left = dim; left > 0;) {
      const std::size_t w = std::min(left, width(rng));
      blocks.push_back(w);
      left -= w;
    }
  }
  std::vector<int> kind(blocks.size());
  for (auto& k : kind) k = coin(rng) % 3;
  const auto change = random_invertible(p, dim, rng);
  const auto change_inv = change.inverse();
  std::vector<FpMatrix> out;
  std::uniform_int_distribution<std::uint32_t> unit(1, p - 1);
  for (std::size_t c = 0; c < count; ++c) {
    FpMatrix m(p, dim, dim);
    std::size_t at = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const std::size_t w = blocks[b];
      FpMatrix block = kind[b] == 0 ? random_invertible(p, w, rng) : FpMatrix::identity(p, w);
      const std::uint32_t s = kind[b] == 2 ? unit(rng) : 1;
      for (std::size_t i = 0; i < w; ++i)
        for (std::size_t j = 0; j < w; ++j) m.set(at + i, at + j, block(i, j) * s);
      at += w;
    }
    out.push_back(change * m * change_inv);
  }
  return out;
}


struct RandomModule {
  std::uint32_t p;
  std::size_t dim;
  std::vector<FpMatrix> gens;
};

/// Modules over p in {2, 3, 5}, dimension 1..4, 1..3 generators, rejecting
/// any with an invariant subspace that lacks an invariant complement.
inline std::vector<RandomModule> random_semisimple_modules(std::size_t count, std::uint64_t seed,
                                                           std::size_t* rejected = nullptr) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_p(0, 2), pick_dim(1, 4), pick_count(1, 3);
  const std::uint32_t primes[] = {2, 3, 5};
  std::vector<RandomModule> out;
  while (out.size() < count) {
    const std::uint32_t p = primes[pick_p(rng)];
    const auto dim = static_cast<std::size_t>(pick_dim(rng));
    auto gens = random_generators(p, dim, static_cast<std::size_t>(pick_count(rng)), rng);
    if (!irrep::is_semisimple_module(p, dim, gens)) {
      if (rejected) ++*rejected;
      continue;
    }
    out.push_back({p, dim, std::move(gens)});
  }
  return out;
}

}  // namespace modules
