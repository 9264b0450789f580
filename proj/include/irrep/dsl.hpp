#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "irrep/fp_linalg.hpp"
#include "irrep/group.hpp"
#include "irrep/permutation.hpp"

namespace irrep {

struct GroupSpec;
using GroupSpecPtr = std::shared_ptr<const GroupSpec>;

/// cyclic n | dihedral n | quaternion n | symmetric n | alternating n | elemabelian p n
/// (dihedral and quaternion take the group order).
struct FamilySpec {
  std::string name;
  std::vector<std::uint64_t> args;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

struct PermSpec {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  friend bool operator==(const PermSpec&, const PermSpec&) = default;
};

struct ProductSpec {
  GroupSpecPtr left;
  GroupSpecPtr right;
};

struct SemidirectSpec {
  std::uint32_t p = 2;
  std::size_t n = 0;
  GroupSpecPtr acting;
  std::vector<FpMatrix> matrices;
};

struct GroupSpec {
  std::variant<FamilySpec, PermSpec, ProductSpec, SemidirectSpec> node;
};

bool operator==(const GroupSpec& a, const GroupSpec& b);
bool operator==(const ProductSpec& a, const ProductSpec& b);
bool operator==(const SemidirectSpec& a, const SemidirectSpec& b);

/// Parses the group description language. Throws ParseError (with line and
/// column) on syntax errors, unknown families, degree mismatches and
/// non-invertible semidirect matrices.
///
///   spec     := family | "perm" INT ":" cycles ("," cycles)*
///             | "product" "(" spec ")" "(" spec ")"
///             | "semidirect" INT INT "(" spec ")" matrices
///   family   := NAME INT INT?
///   cycles   := ("(" INT+ ")")+
///   matrices := "[" row (";" row)* "]" ("," "[" row (";" row)* "]")*
GroupSpec parse_group_spec(std::string_view text);

/// Canonical text form; parse_group_spec(to_string(s)) == s.
std::string to_string(const GroupSpec& spec);

/// Realizes a spec. Generator order: family-defined, listed order for perm,
/// left then right for product, acting generators then unit vectors for semidirect.
FiniteGroup build_group(const GroupSpec& spec, std::size_t max_order = kDefaultMaxOrder);

/// One automorphism given by the images of the group generators, as words
/// such as "g0 g1^-1 g2^2" or "e".
struct AutomorphismSpec {
  std::vector<std::pair<std::size_t, std::string>> images;  // generator index -> word text
};

/// Parses an "autos:" block: one automorphism per line (or per ';'), each a
/// comma-separated list of "g<i> -> word". The "autos:" header is optional.
std::vector<AutomorphismSpec> parse_autos_block(std::string_view text);

/// Evaluates a word in the generators of g.
Elem evaluate_word(const FiniteGroup& g, std::string_view word);

/// Splits "<spec> autos: <block>" into its two halves (block empty if absent).
std::pair<std::string, std::string> split_autos(std::string_view text);

}  // namespace irrep
