#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "irrep/char_table.hpp"
#include "irrep/criterion.hpp"
#include "irrep/g_variant.hpp"
#include "irrep/socle.hpp"

namespace irrep {

inline constexpr int kReportSchema = 1;

// Plain mirrors of the analysis results, shaped for JSON.

struct GroupInfo {
  std::string name;
  std::string spec;
  std::size_t order = 0;
  std::size_t class_count = 0;
  std::vector<std::string> notes;
  friend bool operator==(const GroupInfo&, const GroupInfo&) = default;
};

struct FootInfo {
  std::string kind;  // "abelian" or "nonabelian"
  std::size_t order = 0;
  std::vector<std::string> generators;
  std::uint32_t p = 0;                // abelian
  std::size_t rank = 0;               // abelian
  std::size_t simple_factors = 0;     // nonabelian
  std::size_t simple_order = 0;       // nonabelian
  friend bool operator==(const FootInfo&, const FootInfo&) = default;
};

struct SocleInfo {
  std::vector<FootInfo> feet;
  std::vector<std::size_t> ma_summands;
  std::size_t ma_order = 0;
  std::size_t mh_order = 0;
  std::size_t ms_order = 0;
  friend bool operator==(const SocleInfo&, const SocleInfo&) = default;
};

struct DualCharacterInfo {
  std::vector<std::uint32_t> primes;
  std::vector<std::vector<std::uint32_t>> covectors;
  friend bool operator==(const DualCharacterInfo&, const DualCharacterInfo&) = default;
};

struct ModuleInfo {
  std::uint32_t p = 0;
  std::size_t dim = 0;
  bool primal = false;
  bool dual = false;
  bool sampled = false;
  friend bool operator==(const ModuleInfo&, const ModuleInfo&) = default;
};

struct SimpleFactorInfo {
  std::size_t component = 0;
  std::size_t row = 0;
  std::size_t degree = 0;
  friend bool operator==(const SimpleFactorInfo&, const SimpleFactorInfo&) = default;
};

struct MsRepInfo {
  DualCharacterInfo chi;
  std::vector<SimpleFactorInfo> rho;
  std::size_t degree = 0;
  std::size_t kernel_size = 0;
  double norm_deviation = 0;
  bool core_trivial = false;
  bool scalars_in_ma = false;
  friend bool operator==(const MsRepInfo&, const MsRepInfo&) = default;
};

struct WitnessElement {
  std::uint32_t index = 0;
  std::string label;
  friend bool operator==(const WitnessElement&, const WitnessElement&) = default;
};

struct CriterionInfo {
  bool ma_trivial = false;
  bool cond_ii = false;
  bool cond_ii_exhaustive = true;
  std::optional<DualCharacterInfo> cond_ii_witness;
  std::vector<ModuleInfo> modules;
  bool dual_bridge = true;
  bool cond_iii = false;
  std::string cond_iii_method;
  std::optional<MsRepInfo> cond_iii_witness;
  bool cond_iv = false;
  std::optional<WitnessElement> cond_iv_witness;
  bool cond_v = false;
  std::optional<WitnessElement> cond_v_witness;
  bool verdict = false;
  bool agree = false;
  friend bool operator==(const CriterionInfo&, const CriterionInfo&) = default;
};

struct RepresentationInfo {
  std::size_t row = 0;
  std::size_t degree = 0;
  std::size_t commutant_dimension = 0;
  std::size_t split_attempts = 0;
  double unitarity = 0;
  double multiplicativity = 0;
  double character_error = 0;
  double min_pairwise_distance = 0;
  bool faithful = false;
  /// One row-major matrix per group generator, 12 significant digits.
  std::vector<std::vector<std::complex<double>>> generator_images;
  friend bool operator==(const RepresentationInfo&, const RepresentationInfo&) = default;
};

struct OracleInfo {
  std::vector<std::size_t> degrees;
  std::optional<std::size_t> faithful_row;
  bool verdict = false;
  double degree_sum_error = 0;
  double row_orthogonality = 0;
  double column_orthogonality = 0;
  std::optional<RepresentationInfo> representation;
  friend bool operator==(const OracleInfo&, const OracleInfo&) = default;
};

struct GVariantInfo {
  std::size_t auto_order = 0;
  std::size_t extra_count = 0;
  SocleInfo socle;
  CriterionInfo conditions;
  bool cond_ii = false;
  bool cond_iii = false;
  bool oracle = false;
  std::optional<std::size_t> oracle_row;
  bool verdict = false;
  bool agree = false;
  bool ms_in_msg = false;
  bool msg_in_ms = false;
  friend bool operator==(const GVariantInfo&, const GVariantInfo&) = default;
};

struct AnalysisReport {
  int schema = kReportSchema;
  GroupInfo group;
  SocleInfo socle;
  CriterionInfo criterion;
  OracleInfo oracle;
  std::optional<GVariantInfo> g_variant;
  bool agreement = false;
  std::map<std::string, double> timings;  // seconds per stage
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

SocleInfo socle_info(const FiniteGroup& g, const MinisocleDecomposition& deco);
DualCharacterInfo dual_character_info(const DualCharacter& chi);
CriterionInfo criterion_info(const FiniteGroup& g, const CriterionReport& r);
RepresentationInfo representation_info(const FiniteGroup& g, std::size_t row, const IrrepMatrices& rep,
                                       const IrrepCheck& check);
GVariantInfo g_variant_info(const FiniteGroup& g, const GVariantReport& r);

/// Rounds to 12 significant digits.
double round_significant(double x);

std::string report_to_json(const AnalysisReport& r, int indent = 2);
/// Ignores unknown keys. Throws InputError on malformed or incompatible input.
AnalysisReport report_from_json(const std::string& text);

}  // namespace irrep
