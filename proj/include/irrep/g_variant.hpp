#pragma once

#include <optional>
#include <span>
#include <vector>

#include "irrep/automorphism.hpp"
#include "irrep/char_table.hpp"
#include "irrep/criterion.hpp"
#include "irrep/socle.hpp"

namespace irrep {

/// Same shape as the ordinary minisocle, with orbits of an automorphism group
/// in place of conjugacy classes.
using GMinisocle = MinisocleDecomposition;

std::vector<Subgroup> g_minimal_invariant_subgroups(const FiniteGroup& g, const AutoGroup& a);
GMinisocle g_minisocle(const FiniteGroup& g, const AutoGroup& a);

struct GVariantReport {
  std::size_t auto_order = 0;
  std::size_t extra_count = 0;
  GMinisocle deco;
  /// (ii'), (iii'), (iv) and the MS^G orbit condition, all on the G-minisocle.
  CriterionReport conditions;
  /// (ii) and (iii): the ordinary MA and MS with G-faithfulness.
  bool cond_ii = false;
  std::optional<DualCharacter> cond_ii_witness;
  bool cond_iii = false;
  std::optional<MsRepresentation> cond_iii_witness;
  bool oracle = false;  // (i)
  std::optional<std::size_t> oracle_row;
  bool verdict = false;
  bool agree = false;
  bool ms_in_msg = false;
  bool msg_in_ms = false;
};

/// `plain` is the ordinary minisocle and `table` the character table of g.
GVariantReport decide_g_faithful(const FiniteGroup& g, const AutoGroup& a, const MinisocleDecomposition& plain,
                                 const CharacterTable& table);
GVariantReport decide_g_faithful(const FiniteGroup& g, const AutoGroup& a);

}  // namespace irrep
