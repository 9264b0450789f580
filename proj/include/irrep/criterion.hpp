#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "irrep/char_table.hpp"
#include "irrep/fp_linalg.hpp"
#include "irrep/group.hpp"
#include "irrep/socle.hpp"

namespace irrep {

inline constexpr std::uint64_t kExhaustiveSearchLimit = 4096;
inline constexpr std::size_t kSampledVectors = 10000;
inline constexpr std::size_t kMaxTableClasses = 128;

/// The p-primary part V_p of MA as an F_p-module under a set of maps.
struct FpModule {
  std::uint32_t p = 2;
  std::size_t dim = 0;
  std::vector<Elem> basis;                  // concatenated abelian-foot bases
  std::vector<std::size_t> block_offsets;   // start of each foot's block, plus dim at the end
  std::vector<FpMatrix> action;             // one per map; column j = coords(map(basis[j]))
  std::unordered_map<Elem, FpVector> coords;  // every element of MA -> coordinates of its p-part

  const FpVector& coords_of(Elem x) const;
  /// Matrix of an arbitrary map preserving MA.
  FpMatrix matrix_of(const ElementMap& map) const;
  /// Inverse transposes of the action matrices.
  std::vector<FpMatrix> dual_action() const;
};

/// One module per prime dividing |MA|, primes ascending.
std::vector<FpModule> ma_fp_modules(const FiniteGroup& g, const MinisocleDecomposition& deco,
                                    std::span<const ElementMap> maps);
std::vector<FpModule> ma_fp_modules(const FiniteGroup& g, const MinisocleDecomposition& deco);

struct OrbitCheckResult {
  std::uint32_t p = 2;
  std::size_t dim = 0;
  bool primal = false;
  bool dual = false;
  bool sampled = false;  // false: every vector was tried
  std::optional<FpVector> primal_witness;
  std::optional<FpVector> dual_witness;
};

/// Looks for a vector whose orbit spans the module, and likewise on the dual.
/// Exhaustive up to p^dim = 4096; above that, vectors supported in one foot
/// block plus 10^4 fixed-seed random vectors.
OrbitCheckResult orbit_generation_check(const FpModule& m);

/// Product over primes of exp(2 pi i <phi_p, coords_p(x)> / p).
struct DualCharacter {
  std::vector<std::uint32_t> primes;
  std::vector<FpVector> covectors;

  Complex evaluate(std::span<const FpModule> modules, Elem x) const;
  /// Exact kernel membership (every pairing vanishes mod p).
  bool in_kernel(std::span<const FpModule> modules, Elem x) const;
  bool is_trivial() const;
  friend bool operator==(const DualCharacter&, const DualCharacter&) = default;
};

struct CharacterSearch {
  std::optional<DualCharacter> character;
  bool exhaustive = true;
  std::size_t tested = 0;
};

/// Elements of MA in the kernel of chi.
std::vector<Elem> dual_kernel(const MinisocleDecomposition& deco, std::span<const FpModule> modules,
                              const DualCharacter& chi);

/// A character of MA whose kernel has trivial core under `maps`. Exhaustive
/// over the dual (mixed radix, primes ascending) when |MA| <= 4096, otherwise
/// assembled from per-prime dual orbit witnesses and then verified.
CharacterSearch faithful_character_search(const FiniteGroup& g, const MinisocleDecomposition& deco,
                                          std::span<const ElementMap> maps, std::span<const FpModule> modules);
CharacterSearch faithful_character_search(const FiniteGroup& g, const MinisocleDecomposition& deco);

/// chi (x) rho on MS, rho being the tensor product of one nontrivial
/// irreducible per simple component.
struct MsRepresentation {
  DualCharacter chi;
  struct SimpleFactor {
    std::size_t component = 0;  // index into deco.components
    std::size_t row = 0;        // row of the factor's own character table
    std::size_t degree = 0;
  };
  std::vector<SimpleFactor> rho;
  std::size_t degree = 1;
  std::vector<Complex> character;  // indexed like deco.ms.members()
  std::vector<Elem> kernel;
  double norm_deviation = 0;       // |<psi, psi> - 1|
  bool core_trivial = false;
  bool scalars_in_ma = false;      // |psi(z)| = deg exactly on MA
};

/// Builds chi (x) rho and certifies irreducibility, kernel core and the
/// non-scalar property. Throws ConsistencyError if any certificate fails.
MsRepresentation ms_faithful_rep(const FiniteGroup& g, const MinisocleDecomposition& deco, const DualCharacter& chi,
                                 std::span<const ElementMap> maps, std::span<const FpModule> modules);

/// Least x in `target` (index order) whose orbit under `maps` generates target.
std::optional<Elem> orbit_generator(const FiniteGroup& g, const Subgroup& target, std::span<const ElementMap> maps);
std::optional<Elem> condition_iv(const FiniteGroup& g, const MinisocleDecomposition& deco);
std::optional<Elem> condition_v(const FiniteGroup& g, const MinisocleDecomposition& deco);

struct CriterionReport {
  bool ma_trivial = false;
  bool cond_ii = false;
  bool cond_ii_exhaustive = true;
  std::optional<DualCharacter> cond_ii_witness;
  std::vector<OrbitCheckResult> orbit_checks;
  bool dual_bridge = true;  // cond_ii == every module passes the dual check
  bool cond_iii = false;
  std::string cond_iii_method;  // "table" or "construction"
  std::optional<MsRepresentation> cond_iii_witness;
  bool cond_iv = false;
  std::optional<Elem> cond_iv_witness;
  bool cond_v = false;
  std::optional<Elem> cond_v_witness;
  bool verdict = false;
  bool agree = false;
};

/// Conditions (ii)-(v) relative to the group generated by `maps`, which must
/// preserve every subgroup in `deco`.
CriterionReport evaluate_conditions(const FiniteGroup& g, const MinisocleDecomposition& deco,
                                    std::span<const ElementMap> maps);
CriterionReport decide_irreducibly_represented(const FiniteGroup& g, const MinisocleDecomposition& deco);
CriterionReport decide_irreducibly_represented(const FiniteGroup& g);

}  // namespace irrep
