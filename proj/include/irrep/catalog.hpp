#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irrep/dsl.hpp"

namespace irrep {

/// One catalog line:
///
///   name := spec [autos: block] [expect true|false] [expect-g true|false] [# note]
///
/// Entries with an autos block also run the automorphism-group variant.
struct CatalogEntry {
  std::string name;
  std::string spec_text;
  GroupSpec spec;
  std::string autos_text;  // empty when there is no autos block
  std::vector<AutomorphismSpec> autos;
  std::optional<bool> expected;
  std::optional<bool> expected_g;
  std::string note;
};

/// Throws ParseError with the catalog line number on malformed lines or
/// duplicate names.
std::vector<CatalogEntry> parse_catalog(std::string_view text);

/// Text of the built-in corpus, in catalog syntax.
std::string_view builtin_catalog_text();
std::vector<CatalogEntry> build_catalog();

}  // namespace irrep
