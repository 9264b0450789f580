#include "irrep/criterion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "irrep/errors.hpp"

namespace irrep {

namespace {

std::uint64_t power_capped(std::uint32_t p, std::size_t dim) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    out *= p;
    if (out > (std::uint64_t{1} << 40)) return out;
  }
  return out;
}

bool spans(std::uint32_t p, std::size_t dim, std::span<const FpMatrix> gens, const FpVector& v) {
  const FpVector seed[] = {v};
  return invariant_span(p, dim, gens, seed).is_full();
}

bool is_zero(const FpVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t c) { return c == 0; });
}

std::optional<FpVector> find_spanning_vector(const FpModule& m, std::span<const FpMatrix> gens, bool& sampled) {
  sampled = false;
  if (m.dim == 0) return FpVector{};
  const std::uint64_t total = power_capped(m.p, m.dim);
  if (total <= kExhaustiveSearchLimit) {
    for (std::uint64_t i = 1; i < total; ++i) {
      FpVector v = fp_vector_from_index(i, m.p, m.dim);
      if (spans(m.p, m.dim, gens, v)) return v;
    }
    return std::nullopt;
  }
  sampled = true;
  for (std::size_t b = 0; b + 1 < m.block_offsets.size(); ++b) {
    const std::size_t lo = m.block_offsets[b], width = m.block_offsets[b + 1] - lo;
    const std::uint64_t block_total = std::min<std::uint64_t>(power_capped(m.p, width), kExhaustiveSearchLimit);
    for (std::uint64_t i = 1; i < block_total; ++i) {
      FpVector local = fp_vector_from_index(i, m.p, width);
      FpVector v(m.dim, 0);
      std::copy(local.begin(), local.end(), v.begin() + static_cast<std::ptrdiff_t>(lo));
      if (spans(m.p, m.dim, gens, v)) return v;
    }
  }
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<std::uint32_t> coord(0, m.p - 1);
  for (std::size_t i = 0; i < kSampledVectors; ++i) {
    FpVector v(m.dim);
    for (auto& c : v) c = coord(rng);
    if (!is_zero(v) && spans(m.p, m.dim, gens, v)) return v;
  }
  return std::nullopt;
}

std::uint32_t pairing(const FpVector& phi, const FpVector& x, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < phi.size(); ++i) acc += static_cast<std::uint64_t>(phi[i]) * x[i];
  return static_cast<std::uint32_t>(acc % p);
}

bool core_is_trivial(std::span<const Elem> kernel, std::size_t parent_order, std::span<const ElementMap> maps) {
  if (kernel.size() <= 1) return true;
  return invariant_core(kernel, parent_order, maps).size() <= 1;
}

}  // namespace

const FpVector& FpModule::coords_of(Elem x) const {
  auto it = coords.find(x);
  if (it == coords.end()) throw InputError("element " + std::to_string(x) + " is outside MA");
  return it->second;
}

FpMatrix FpModule::matrix_of(const ElementMap& map) const {
  FpMatrix m(p, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const FpVector& c = coords_of(map[basis[j]]);
    for (std::size_t i = 0; i < dim; ++i) m.set(i, j, c[i]);
  }
  return m;
}

std::vector<FpMatrix> FpModule::dual_action() const {
  std::vector<FpMatrix> out;
  for (const auto& a : action) out.push_back(a.inverse().transpose());
  return out;
}

std::vector<FpModule> ma_fp_modules(const FiniteGroup& g, const MinisocleDecomposition& deco,
                                    std::span<const ElementMap> maps) {
  std::set<std::uint32_t> primes;
  for (auto i : deco.ma_summands) primes.insert(deco.feet[i].abelian().p);

  std::vector<FpModule> out;
  for (auto p : primes) {
    FpModule m;
    m.p = p;
    // Abelian component c of deco.components is the foot deco.ma_summands[c].
    std::vector<std::size_t> comps;
    std::vector<std::unordered_map<Elem, FpVector>> local;
    for (std::size_t c = 0; c < deco.ma_summands.size(); ++c) {
      const auto& foot = deco.feet[deco.ma_summands[c]].abelian();
      if (foot.p != p) continue;
      comps.push_back(c);
      m.block_offsets.push_back(m.dim);
      m.basis.insert(m.basis.end(), foot.basis.begin(), foot.basis.end());
      m.dim += foot.rank;
      std::unordered_map<Elem, FpVector> coords;
      const std::uint64_t size = power_capped(p, foot.rank);
      for (std::uint64_t i = 0; i < size; ++i) {
        FpVector v = fp_vector_from_index(i, p, foot.rank);
        Elem x = g.identity();
        for (std::size_t j = 0; j < foot.rank; ++j)
          for (std::uint32_t e = 0; e < v[j]; ++e) x = g.mul(x, foot.basis[j]);
        coords.emplace(x, std::move(v));
      }
      local.push_back(std::move(coords));
    }
    m.block_offsets.push_back(m.dim);
    for (auto x : deco.ma.members()) {
      FpVector v(m.dim, 0);
      for (std::size_t b = 0; b < comps.size(); ++b) {
        const FpVector& part = local[b].at(deco.component_of(x, comps[b]));
        std::copy(part.begin(), part.end(), v.begin() + static_cast<std::ptrdiff_t>(m.block_offsets[b]));
      }
      m.coords.emplace(x, std::move(v));
    }
    for (const auto& map : maps) m.action.push_back(m.matrix_of(map));
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<FpModule> ma_fp_modules(const FiniteGroup& g, const MinisocleDecomposition& deco) {
  const auto maps = inner_maps(g);
  return ma_fp_modules(g, deco, maps);
}

OrbitCheckResult orbit_generation_check(const FpModule& m) {
  OrbitCheckResult r;
  r.p = m.p;
  r.dim = m.dim;
  bool sampled_primal = false, sampled_dual = false;
  r.primal_witness = find_spanning_vector(m, m.action, sampled_primal);
  const auto dual = m.dual_action();
  r.dual_witness = find_spanning_vector(m, dual, sampled_dual);
  r.primal = r.primal_witness.has_value();
  r.dual = r.dual_witness.has_value();
  r.sampled = sampled_primal || sampled_dual;
  return r;
}

Complex DualCharacter::evaluate(std::span<const FpModule> modules, Elem x) const {
  double turns = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    turns += static_cast<double>(pairing(covectors[i], modules[i].coords_of(x), primes[i])) / primes[i];
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

bool DualCharacter::in_kernel(std::span<const FpModule> modules, Elem x) const {
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (pairing(covectors[i], modules[i].coords_of(x), primes[i]) != 0) return false;
  }
  return true;
}

bool DualCharacter::is_trivial() const {
  return std::all_of(covectors.begin(), covectors.end(), is_zero);
}

std::vector<Elem> dual_kernel(const MinisocleDecomposition& deco, std::span<const FpModule> modules,
                              const DualCharacter& chi) {
  std::vector<Elem> k;
  for (auto x : deco.ma.members())
    if (chi.in_kernel(modules, x)) k.push_back(x);
  return k;
}

CharacterSearch faithful_character_search(const FiniteGroup& g, const MinisocleDecomposition& deco,
                                          std::span<const ElementMap> maps, std::span<const FpModule> modules) {
  CharacterSearch out;
  DualCharacter chi;
  for (const auto& m : modules) {
    chi.primes.push_back(m.p);
    chi.covectors.emplace_back(m.dim, 0);
  }
  if (deco.ma.size() <= kExhaustiveSearchLimit) {
    // Mixed radix over the dual, first prime least significant.
    const std::size_t total = deco.ma.size();
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < modules.size(); ++i) {
        const std::uint64_t radix = power_capped(modules[i].p, modules[i].dim);
        chi.covectors[i] = fp_vector_from_index(rest % radix, modules[i].p, modules[i].dim);
        rest /= radix;
      }
      ++out.tested;
      if (core_is_trivial(dual_kernel(deco, modules, chi), g.order(), maps)) {
        out.character = chi;
        return out;
      }
    }
    return out;
  }
  out.exhaustive = false;
  for (std::size_t i = 0; i < modules.size(); ++i) {
    const auto r = orbit_generation_check(modules[i]);
    if (!r.dual) return out;
    chi.covectors[i] = *r.dual_witness;
  }
  out.tested = 1;
  if (!core_is_trivial(dual_kernel(deco, modules, chi), g.order(), maps)) {
    throw ConsistencyError("dual orbit witnesses did not combine into a faithful character");
  }
  out.character = chi;
  return out;
}

CharacterSearch faithful_character_search(const FiniteGroup& g, const MinisocleDecomposition& deco) {
  const auto maps = inner_maps(g);
  const auto modules = ma_fp_modules(g, deco, maps);
  return faithful_character_search(g, deco, maps, modules);
}

MsRepresentation ms_faithful_rep(const FiniteGroup& g, const MinisocleDecomposition& deco, const DualCharacter& chi,
                                 std::span<const ElementMap> maps, std::span<const FpModule> modules) {
  MsRepresentation rep;
  rep.chi = chi;
  // rho values per parent element of each simple component.
  std::vector<std::unordered_map<Elem, Complex>> rho_values;
  for (std::size_t c = deco.abelian_components; c < deco.components.size(); ++c) {
    const EmbeddedGroup eg = subgroup_as_group(g, deco.components[c]);
    const CharacterTable t = character_table(eg.group);
    std::size_t row = 0;
    while (row < t.size() && t.is_trivial_row(row)) ++row;
    if (row == t.size()) throw ConsistencyError("simple component has no nontrivial character");
    rep.rho.push_back({c, row, t.degrees[row]});
    rep.degree *= t.degrees[row];
    std::unordered_map<Elem, Complex> values;
    for (Elem local = 0; local < eg.group.order(); ++local) values.emplace(eg.embedding[local], t.value(row, local));
    rho_values.push_back(std::move(values));
  }

  const auto& members = deco.ms.members();
  const double deg = static_cast<double>(rep.degree);
  double norm = 0;
  std::vector<Elem> scalars;
  rep.character.reserve(members.size());
  for (auto z : members) {
    const auto f = deco.factorization(z);
    Complex v(1.0, 0.0);
    for (std::size_t i = 0; i < deco.abelian_components; ++i) v *= chi.evaluate(modules, f[i]);
    for (std::size_t j = 0; j < rho_values.size(); ++j) v *= rho_values[j].at(f[deco.abelian_components + j]);
    rep.character.push_back(v);
    norm += std::norm(v);
    if (std::abs(v - deg) < 1e-6) rep.kernel.push_back(z);
    if (std::abs(std::abs(v) - deg) < 1e-6) scalars.push_back(z);
  }
  rep.norm_deviation = std::abs(norm / static_cast<double>(members.size()) - 1.0);
  rep.core_trivial = core_is_trivial(rep.kernel, g.order(), maps);
  rep.scalars_in_ma = scalars == deco.ma.members();
  if (rep.norm_deviation > 1e-6) throw ConsistencyError("chi (x) rho is not irreducible on MS");
  if (!rep.scalars_in_ma) throw ConsistencyError("rho acts as a scalar on a nontrivial element of MH");
  if (!rep.core_trivial) throw ConsistencyError("kernel of chi (x) rho has a nontrivial invariant core");
  return rep;
}

std::optional<Elem> orbit_generator(const FiniteGroup& g, const Subgroup& target, std::span<const ElementMap> maps) {
  std::vector<bool> seen(g.order(), false);
  for (auto x : target.members()) {
    if (seen[x]) continue;
    for (auto y : orbit(maps, x)) seen[y] = true;
    const Elem seed[] = {x};
    if (invariant_closure(g, seed, maps) == target) return x;
  }
  return std::nullopt;
}

std::optional<Elem> condition_iv(const FiniteGroup& g, const MinisocleDecomposition& deco) {
  const auto maps = inner_maps(g);
  return orbit_generator(g, deco.ma, maps);
}

std::optional<Elem> condition_v(const FiniteGroup& g, const MinisocleDecomposition& deco) {
  const auto maps = inner_maps(g);
  return orbit_generator(g, deco.ms, maps);
}

namespace {

// Exhaustive scan of the irreducible characters of MS, or nullopt when MS is
// too large for its own table.
std::optional<bool> ms_table_verdict(const FiniteGroup& g, const MinisocleDecomposition& deco,
                                     std::span<const ElementMap> maps) {
  const bool whole = deco.ms.size() == g.order();
  if (!whole && deco.ms.size() > kExhaustiveSearchLimit) return std::nullopt;
  const auto ms_inner = conjugation_maps(g, deco.ms.generators());
  if (orbits(ms_inner, deco.ms.members()).size() > kMaxTableClasses) return std::nullopt;
  if (whole) return has_faithful_irreducible(g, character_table(g), maps).has_value();
  const EmbeddedGroup eg = subgroup_as_group(g, deco.ms);
  const CharacterTable t = character_table(eg.group);
  return invariant_faithful_row(t, eg.embedding, g.order(), maps).has_value();
}

}  // namespace

CriterionReport evaluate_conditions(const FiniteGroup& g, const MinisocleDecomposition& deco,
                                    std::span<const ElementMap> maps) {
  CriterionReport r;
  r.ma_trivial = deco.ma.is_trivial();
  const auto modules = ma_fp_modules(g, deco, maps);

  const auto search = faithful_character_search(g, deco, maps, modules);
  r.cond_ii = search.character.has_value();
  r.cond_ii_exhaustive = search.exhaustive;
  r.cond_ii_witness = search.character;

  bool all_dual = true;
  for (const auto& m : modules) {
    r.orbit_checks.push_back(orbit_generation_check(m));
    all_dual = all_dual && r.orbit_checks.back().dual;
  }
  r.dual_bridge = all_dual == r.cond_ii;

  if (search.character) r.cond_iii_witness = ms_faithful_rep(g, deco, *search.character, maps, modules);
  if (auto table = ms_table_verdict(g, deco, maps)) {
    r.cond_iii = *table;
    r.cond_iii_method = "table";
  } else {
    r.cond_iii = r.cond_iii_witness.has_value();
    r.cond_iii_method = "construction";
  }

  r.cond_iv_witness = orbit_generator(g, deco.ma, maps);
  r.cond_iv = r.cond_iv_witness.has_value();
  r.cond_v_witness = orbit_generator(g, deco.ms, maps);
  r.cond_v = r.cond_v_witness.has_value();

  r.verdict = r.ma_trivial || r.cond_v;
  r.agree = r.cond_ii == r.cond_iii && r.cond_iii == r.cond_iv && r.cond_iv == r.cond_v && r.verdict == r.cond_v;
  return r;
}

CriterionReport decide_irreducibly_represented(const FiniteGroup& g, const MinisocleDecomposition& deco) {
  const auto maps = inner_maps(g);
  return evaluate_conditions(g, deco, maps);
}

CriterionReport decide_irreducibly_represented(const FiniteGroup& g) {
  return decide_irreducibly_represented(g, minisocle_decomposition(g));
}

}  // namespace irrep
