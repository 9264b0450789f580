#include "irrep/catalog.hpp"

#include <cctype>
#include <set>

#include "irrep/errors.hpp"

namespace irrep {

namespace {

constexpr std::string_view kBuiltin = R"(# Cyclic groups: all irreducibly represented.
c1 := cyclic 1 expect true
c2 := cyclic 2 expect true
c3 := cyclic 3 expect true
c4 := cyclic 4 expect true
c5 := cyclic 5 expect true
c6 := cyclic 6 expect true
c7 := cyclic 7 expect true
c8 := cyclic 8 expect true
c9 := cyclic 9 expect true
c10 := cyclic 10 expect true
c11 := cyclic 11 expect true
c12 := cyclic 12 expect true
c16 := cyclic 16 expect true
c27 := cyclic 27 expect true

# Noncyclic abelian groups.
klein4 := elemabelian 2 2 expect false
ea2_3 := elemabelian 2 3 expect false
ea3_2 := elemabelian 3 2 expect false
z2xz4 := product (cyclic 2) (cyclic 4) expect false

d6 := dihedral 6 expect true
d8 := dihedral 8 expect true
d10 := dihedral 10 expect true
d12 := dihedral 12 expect true  # MA = Z/2 + Z/3
q8 := quaternion 8 expect true  # MA is the center

sym3 := symmetric 3 expect true
sym4 := symmetric 4 expect true  # socle V
sym5 := symmetric 5 expect true
sym6 := symmetric 6 expect true
alt4 := alternating 4 expect true  # unique foot V
alt5 := alternating 5 expect true
alt6 := alternating 6 expect true

z3xalt5 := product (cyclic 3) (alternating 5) expect true
alt5xalt5 := product (alternating 5) (alternating 5) expect true  # MA trivial
sym3_f2sq := semidirect 2 2 (symmetric 3) [0 1; 1 0], [0 1; 1 1] expect true  # socle U

# Automorphism-group variant.
klein4_gl22 := elemabelian 2 2 autos: g0 -> g1, g1 -> g0; g0 -> g1, g1 -> g0 g1 expect false expect-g true
ea2_3_sym3 := elemabelian 2 3 autos: g0 -> g1, g1 -> g0; g0 -> g1, g1 -> g2, g2 -> g0 expect false expect-g true
alt5xalt5_swap := product (alternating 5) (alternating 5) autos: g0 -> g2, g1 -> g3, g2 -> g0, g3 -> g1 expect true expect-g true
c4_inv := cyclic 4 autos: g0 -> g0^-1 expect true expect-g true
)";

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Strips a trailing "<keyword> true|false" if present.
std::optional<bool> take_suffix(std::string& body, std::string_view keyword) {
  for (std::string_view value : {"true", "false"}) {
    const std::string tail = std::string(keyword) + " " + std::string(value);
    if (body.size() < tail.size() || body.compare(body.size() - tail.size(), tail.size(), tail) != 0) continue;
    const std::size_t at = body.size() - tail.size();
    if (at > 0 && !std::isspace(static_cast<unsigned char>(body[at - 1]))) continue;
    body = trim(std::string_view(body).substr(0, at));
    return value == "true";
  }
  return std::nullopt;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::set<std::string> names;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    CatalogEntry e;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      e.note = trim(raw.substr(hash + 1));
      raw = raw.substr(0, hash);
    }
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto def = line.find(":=");
    if (def == std::string::npos) throw ParseError("expected 'name := spec'", line_no, 1);
    e.name = trim(std::string_view(line).substr(0, def));
    if (e.name.empty()) throw ParseError("missing entry name", line_no, 1);
    for (char c : e.name) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') {
        throw ParseError("invalid character in entry name '" + e.name + "'", line_no, 1);
      }
    }
    if (!names.insert(e.name).second) throw ParseError("duplicate entry name '" + e.name + "'", line_no, 1);
    std::string body = trim(std::string_view(line).substr(def + 2));
    e.expected_g = take_suffix(body, "expect-g");
    e.expected = take_suffix(body, "expect");
    if (!e.expected_g) e.expected_g = take_suffix(body, "expect-g");
    auto [spec, autos] = split_autos(body);
    e.spec_text = trim(spec);
    e.autos_text = trim(autos);
    try {
      e.spec = parse_group_spec(e.spec_text);
      if (!e.autos_text.empty()) e.autos = parse_autos_block(e.autos_text);
    } catch (const ParseError& err) {
      // Inner positions are relative to the spec text.
      throw ParseError("entry '" + e.name + "': " + err.what(), line_no, def + 3);
    }
    out.push_back(std::move(e));
    if (end == text.size()) break;
  }
  return out;
}

std::string_view builtin_catalog_text() { return kBuiltin; }

std::vector<CatalogEntry> build_catalog() { return parse_catalog(kBuiltin); }

}  // namespace irrep
