#include "irrep/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include <json.hpp>

#include "irrep/errors.hpp"

namespace nlohmann {

template <typename T>
struct adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& v) {
    if (v) j = *v;
    else j = nullptr;
  }
  static void from_json(const json& j, std::optional<T>& v) {
    if (j.is_null()) v.reset();
    else v = j.get<T>();
  }
};

template <>
struct adl_serializer<std::complex<double>> {
  static void to_json(json& j, const std::complex<double>& z) { j = json::array({z.real(), z.imag()}); }
  static void from_json(const json& j, std::complex<double>& z) {
    if (!j.is_array() || j.size() != 2) throw json::type_error::create(302, "complex number must be [re, im]", &j);
    z = {j[0].get<double>(), j[1].get<double>()};
  }
};

}  // namespace nlohmann

namespace irrep {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(GroupInfo, name, spec, order, class_count, notes)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FootInfo, kind, order, generators, p, rank, simple_factors, simple_order)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SocleInfo, feet, ma_summands, ma_order, mh_order, ms_order)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DualCharacterInfo, primes, covectors)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ModuleInfo, p, dim, primal, dual, sampled)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SimpleFactorInfo, component, row, degree)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(MsRepInfo, chi, rho, degree, kernel_size, norm_deviation, core_trivial,
                                   scalars_in_ma)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(WitnessElement, index, label)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CriterionInfo, ma_trivial, cond_ii, cond_ii_exhaustive, cond_ii_witness, modules,
                                   dual_bridge, cond_iii, cond_iii_method, cond_iii_witness, cond_iv,
                                   cond_iv_witness, cond_v, cond_v_witness, verdict, agree)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RepresentationInfo, row, degree, commutant_dimension, split_attempts, unitarity,
                                   multiplicativity, character_error, min_pairwise_distance, faithful,
                                   generator_images)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(OracleInfo, degrees, faithful_row, verdict, degree_sum_error, row_orthogonality,
                                   column_orthogonality, representation)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(GVariantInfo, auto_order, extra_count, socle, conditions, cond_ii, cond_iii,
                                   oracle, oracle_row, verdict, agree, ms_in_msg, msg_in_ms)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AnalysisReport, schema, group, socle, criterion, oracle, g_variant, agreement,
                                   timings)

double round_significant(double x) {
  if (x == 0 || !std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return std::strtod(buf, nullptr);
}

SocleInfo socle_info(const FiniteGroup& g, const MinisocleDecomposition& deco) {
  SocleInfo s;
  for (const auto& f : deco.feet) {
    FootInfo fi;
    fi.order = f.carrier.size();
    for (auto x : f.carrier.generators()) fi.generators.push_back(g.label(x));
    if (f.is_abelian()) {
      fi.kind = "abelian";
      fi.p = f.abelian().p;
      fi.rank = f.abelian().rank;
    } else {
      fi.kind = "nonabelian";
      fi.simple_factors = f.nonabelian().simple_feet.size();
      fi.simple_order = f.nonabelian().simple_feet.front().size();
    }
    s.feet.push_back(std::move(fi));
  }
  s.ma_summands = deco.ma_summands;
  s.ma_order = deco.ma.size();
  s.mh_order = deco.mh.size();
  s.ms_order = deco.ms.size();
  return s;
}

DualCharacterInfo dual_character_info(const DualCharacter& chi) { return {chi.primes, chi.covectors}; }

CriterionInfo criterion_info(const FiniteGroup& g, const CriterionReport& r) {
  CriterionInfo c;
  c.ma_trivial = r.ma_trivial;
  c.cond_ii = r.cond_ii;
  c.cond_ii_exhaustive = r.cond_ii_exhaustive;
  if (r.cond_ii_witness) c.cond_ii_witness = dual_character_info(*r.cond_ii_witness);
  for (const auto& m : r.orbit_checks) c.modules.push_back({m.p, m.dim, m.primal, m.dual, m.sampled});
  c.dual_bridge = r.dual_bridge;
  c.cond_iii = r.cond_iii;
  c.cond_iii_method = r.cond_iii_method;
  if (r.cond_iii_witness) {
    const auto& w = *r.cond_iii_witness;
    MsRepInfo m;
    m.chi = dual_character_info(w.chi);
    for (const auto& f : w.rho) m.rho.push_back({f.component, f.row, f.degree});
    m.degree = w.degree;
    m.kernel_size = w.kernel.size();
    m.norm_deviation = round_significant(w.norm_deviation);
    m.core_trivial = w.core_trivial;
    m.scalars_in_ma = w.scalars_in_ma;
    c.cond_iii_witness = m;
  }
  c.cond_iv = r.cond_iv;
  if (r.cond_iv_witness) c.cond_iv_witness = WitnessElement{*r.cond_iv_witness, g.label(*r.cond_iv_witness)};
  c.cond_v = r.cond_v;
  if (r.cond_v_witness) c.cond_v_witness = WitnessElement{*r.cond_v_witness, g.label(*r.cond_v_witness)};
  c.verdict = r.verdict;
  c.agree = r.agree;
  return c;
}

RepresentationInfo representation_info(const FiniteGroup& g, std::size_t row, const IrrepMatrices& rep,
                                       const IrrepCheck& check) {
  RepresentationInfo out;
  out.row = row;
  out.degree = rep.degree;
  out.commutant_dimension = rep.commutant_dimension;
  out.split_attempts = rep.split_attempts;
  out.unitarity = round_significant(check.unitarity);
  out.multiplicativity = round_significant(check.multiplicativity);
  out.character_error = round_significant(check.character);
  // JSON has no infinity; the trivial group has no pairs to separate.
  out.min_pairwise_distance =
      std::isfinite(check.min_pairwise_distance) ? round_significant(check.min_pairwise_distance) : 0.0;
  out.faithful = g.order() == 1 || check.min_pairwise_distance > 1e-6;
  for (auto s : g.generators()) {
    const auto& m = rep.images[s];
    std::vector<std::complex<double>> flat;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        flat.emplace_back(round_significant(m(i, j).real()), round_significant(m(i, j).imag()));
    out.generator_images.push_back(std::move(flat));
  }
  return out;
}

GVariantInfo g_variant_info(const FiniteGroup& g, const GVariantReport& r) {
  GVariantInfo out;
  out.auto_order = r.auto_order;
  out.extra_count = r.extra_count;
  out.socle = socle_info(g, r.deco);
  out.conditions = criterion_info(g, r.conditions);
  out.cond_ii = r.cond_ii;
  out.cond_iii = r.cond_iii;
  out.oracle = r.oracle;
  out.oracle_row = r.oracle_row;
  out.verdict = r.verdict;
  out.agree = r.agree;
  out.ms_in_msg = r.ms_in_msg;
  out.msg_in_ms = r.msg_in_ms;
  return out;
}

std::string report_to_json(const AnalysisReport& r, int indent) {
  const nlohmann::json j = r;
  return j.dump(indent);
}

AnalysisReport report_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.at("schema").get<int>() != kReportSchema) {
      throw InputError("unsupported report schema " + j.at("schema").dump());
    }
    return j.get<AnalysisReport>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace irrep
