#include "irrep/g_variant.hpp"

namespace irrep {

std::vector<Subgroup> g_minimal_invariant_subgroups(const FiniteGroup& g, const AutoGroup& a) {
  return minimal_invariant_subgroups(g, a.generators());
}

GMinisocle g_minisocle(const FiniteGroup& g, const AutoGroup& a) { return decompose_minisocle(g, a.generators()); }

GVariantReport decide_g_faithful(const FiniteGroup& g, const AutoGroup& a, const MinisocleDecomposition& plain,
                                 const CharacterTable& table) {
  GVariantReport r;
  const auto& maps = a.generators();
  r.auto_order = a.order();
  r.extra_count = a.extra_count();
  r.deco = g_minisocle(g, a);
  r.conditions = evaluate_conditions(g, r.deco, maps);

  const CriterionReport on_plain = evaluate_conditions(g, plain, maps);
  r.cond_ii = on_plain.cond_ii;
  r.cond_ii_witness = on_plain.cond_ii_witness;
  r.cond_iii = on_plain.cond_iii;
  r.cond_iii_witness = on_plain.cond_iii_witness;

  r.oracle_row = has_faithful_irreducible(g, table, maps);
  r.oracle = r.oracle_row.has_value();
  r.verdict = r.conditions.verdict;
  const auto& c = r.conditions;
  r.agree = c.agree && c.cond_ii == r.cond_ii && r.cond_ii == r.cond_iii && r.cond_iii == r.oracle &&
            r.oracle == r.verdict;
  r.ms_in_msg = plain.ms.is_subset_of(r.deco.ms);
  r.msg_in_ms = r.deco.ms.is_subset_of(plain.ms);
  return r;
}

GVariantReport decide_g_faithful(const FiniteGroup& g, const AutoGroup& a) {
  return decide_g_faithful(g, a, minisocle_decomposition(g), character_table(g));
}

}  // namespace irrep
