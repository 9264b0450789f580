#include "irrep/dsl.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "irrep/errors.hpp"

namespace irrep {

namespace {

enum class Tok { Ident, Int, LParen, RParen, Colon, Comma, Semicolon, LBracket, RBracket, End };

struct Token {
  Tok kind;
  std::string text;
  std::uint64_t value = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    Token t{Tok::End, std::string(1, c), 0, line, col};
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Tok::Int;
      t.text = std::string(text.substr(i, j - i));
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, t.value);
      if (ec != std::errc()) throw ParseError("integer out of range", line, col);
      col += j - i;
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      t.kind = Tok::Ident;
      t.text = std::string(text.substr(i, j - i));
      col += j - i;
      i = j;
    } else {
      switch (c) {
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case ':': t.kind = Tok::Colon; break;
        case ',': t.kind = Tok::Comma; break;
        case ';': t.kind = Tok::Semicolon; break;
        case '[': t.kind = Tok::LBracket; break;
        case ']': t.kind = Tok::RBracket; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      }
      ++col;
      ++i;
    }
    out.push_back(std::move(t));
  }
  out.push_back(Token{Tok::End, "<end>", 0, line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  GroupSpec parse_all() {
    auto spec = parse_spec();
    if (peek().kind != Tok::End) fail("unexpected trailing input '" + peek().text + "'");
    return spec;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, peek()); }
  [[noreturn]] static void fail_at(const std::string& what, const Token& t) {
    throw ParseError(what, t.line, t.column);
  }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what + ", found '" + peek().text + "'");
    return next();
  }

  std::uint64_t expect_int() { return expect(Tok::Int, "integer").value; }

  GroupSpec parse_spec() {
    const Token& head = expect(Tok::Ident, "group constructor");
    if (head.text == "perm") return parse_perm();
    if (head.text == "product") {
      ProductSpec prod;
      prod.left = parse_parenthesized();
      prod.right = parse_parenthesized();
      return GroupSpec{std::move(prod)};
    }
    if (head.text == "semidirect") return parse_semidirect(head);
    return parse_family(head);
  }

  GroupSpecPtr parse_parenthesized() {
    expect(Tok::LParen, "'('");
    auto inner = std::make_shared<GroupSpec>(parse_spec());
    expect(Tok::RParen, "')'");
    return inner;
  }

  GroupSpec parse_family(const Token& head) {
    static const std::vector<std::pair<std::string, std::size_t>> kFamilies = {
        {"cyclic", 1}, {"dihedral", 1}, {"quaternion", 1}, {"symmetric", 1}, {"alternating", 1}, {"elemabelian", 2}};
    std::size_t arity = 0;
    for (const auto& [name, a] : kFamilies)
      if (name == head.text) arity = a;
    if (arity == 0) fail_at("unknown group family '" + head.text + "'", head);
    FamilySpec f{head.text, {}};
    for (std::size_t i = 0; i < arity; ++i) f.args.push_back(expect_int());
    const auto n = f.args.back();
    if (f.name == "cyclic" || f.name == "symmetric" || f.name == "alternating") {
      if (n < 1) fail_at(f.name + " needs a positive argument", head);
    } else if (f.name == "dihedral") {
      if (n < 4 || n % 2 != 0) fail_at("dihedral takes an even group order >= 4", head);
    } else if (f.name == "quaternion") {
      if (n < 8 || n % 4 != 0) fail_at("quaternion takes a group order divisible by 4 and >= 8", head);
    } else if (f.name == "elemabelian") {
      if (!is_prime(f.args[0])) fail_at("elemabelian needs a prime, got " + std::to_string(f.args[0]), head);
      if (n < 1) fail_at("elemabelian needs a positive rank", head);
    }
    return GroupSpec{std::move(f)};
  }

  GroupSpec parse_perm() {
    PermSpec spec;
    const Token& deg = expect(Tok::Int, "degree");
    spec.degree = deg.value;
    if (spec.degree == 0) fail_at("degree must be positive", deg);
    expect(Tok::Colon, "':'");
    do {
      const Token& start = peek();
      std::vector<std::vector<std::uint32_t>> cycles;
      if (peek().kind != Tok::LParen) fail("expected '(' starting a cycle");
      while (peek().kind == Tok::LParen) {
        next();
        std::vector<std::uint32_t> cycle;
        while (peek().kind == Tok::Int) {
          const Token& t = next();
          if (t.value >= spec.degree) {
            fail_at("point " + t.text + " exceeds degree " + std::to_string(spec.degree), t);
          }
          cycle.push_back(static_cast<std::uint32_t>(t.value));
        }
        if (cycle.empty()) fail("empty cycle");
        expect(Tok::RParen, "')'");
        cycles.push_back(std::move(cycle));
      }
      try {
        spec.generators.push_back(Permutation::from_cycles(spec.degree, cycles));
      } catch (const InputError& e) {
        fail_at(e.what(), start);
      }
    } while (peek().kind == Tok::Comma && (next(), true));
    return GroupSpec{std::move(spec)};
  }

  GroupSpec parse_semidirect(const Token& head) {
    SemidirectSpec s;
    const Token& pt = expect(Tok::Int, "prime");
    if (!is_prime(pt.value)) fail_at("semidirect needs a prime, got " + pt.text, pt);
    s.p = static_cast<std::uint32_t>(pt.value);
    const Token& nt = expect(Tok::Int, "dimension");
    if (nt.value == 0) fail_at("semidirect dimension must be positive", nt);
    s.n = nt.value;
    s.acting = parse_parenthesized();
    do {
      const Token& open = expect(Tok::LBracket, "'['");
      std::vector<std::uint32_t> entries;
      std::size_t rows = 0;
      while (true) {
        std::size_t in_row = 0;
        while (peek().kind == Tok::Int) {
          entries.push_back(static_cast<std::uint32_t>(next().value % s.p));
          ++in_row;
        }
        if (in_row != s.n) fail("matrix row must have " + std::to_string(s.n) + " entries");
        ++rows;
        if (peek().kind == Tok::Semicolon) {
          next();
          continue;
        }
        expect(Tok::RBracket, "']'");
        break;
      }
      if (rows != s.n) fail_at("matrix must have " + std::to_string(s.n) + " rows", open);
      FpMatrix m(s.p, s.n, s.n, std::move(entries));
      if (!m.is_invertible()) fail_at("matrix is not invertible mod " + std::to_string(s.p), open);
      s.matrices.push_back(std::move(m));
    } while (peek().kind == Tok::Comma && (next(), true));
    (void)head;
    return GroupSpec{std::move(s)};
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string perm_text(const Permutation& p) {
  return p.is_identity() ? "(0)" : p.to_cycle_string();
}

std::vector<std::uint32_t> range_cycle(std::uint32_t from, std::uint32_t to) {
  std::vector<std::uint32_t> c;
  for (auto i = from; i < to; ++i) c.push_back(i);
  return c;
}

FiniteGroup build_family(const FamilySpec& f, std::size_t max_order) {
  const auto n = static_cast<std::uint32_t>(f.args.back());
  std::vector<Permutation> gens;
  std::size_t degree = 1;
  if (f.name == "cyclic") {
    degree = n;
    gens.push_back(Permutation::from_cycles(degree, {range_cycle(0, n)}));
  } else if (f.name == "symmetric" || f.name == "alternating") {
    degree = n;
    const bool sym = f.name == "symmetric";
    if (sym && n >= 2) gens.push_back(Permutation::from_cycles(degree, {{0, 1}}));
    if (sym && n >= 3) gens.push_back(Permutation::from_cycles(degree, {range_cycle(0, n)}));
    if (!sym && n >= 3) {
      gens.push_back(Permutation::from_cycles(degree, {{0, 1, 2}}));
      if (n >= 4) {
        gens.push_back(Permutation::from_cycles(degree, {n % 2 ? range_cycle(0, n) : range_cycle(1, n)}));
      }
    }
    if (gens.empty()) gens.push_back(Permutation::identity(degree));
  } else if (f.name == "dihedral") {
    const std::uint32_t m = n / 2;
    if (m == 2) {
      degree = 4;
      gens.push_back(Permutation::from_cycles(4, {{0, 1}, {2, 3}}));
      gens.push_back(Permutation::from_cycles(4, {{0, 2}, {1, 3}}));
    } else {
      degree = m;
      gens.push_back(Permutation::from_cycles(m, {range_cycle(0, m)}));
      std::vector<std::uint32_t> refl(m);
      for (std::uint32_t i = 0; i < m; ++i) refl[i] = (m - i) % m;
      gens.push_back(Permutation(refl));
    }
  } else if (f.name == "quaternion") {
    // Dicyclic group <a, b | a^(2m) = 1, b^2 = a^m, b a b^-1 = a^-1> in its
    // left regular action on the normal forms a^i b^j.
    const std::uint32_t two_m = n / 2;
    const std::uint32_t m = two_m / 2;
    degree = n;
    auto idx = [&](std::uint32_t i, std::uint32_t j) { return (i % two_m) + two_m * j; };
    std::vector<std::uint32_t> a(n), b(n);
    for (std::uint32_t i = 0; i < two_m; ++i) {
      a[idx(i, 0)] = idx(i + 1, 0);
      a[idx(i, 1)] = idx(i + 1, 1);
      b[idx(i, 0)] = idx(two_m - i, 1);
      b[idx(i, 1)] = idx(two_m - i + m, 0);
    }
    gens.emplace_back(a);
    gens.emplace_back(b);
  } else if (f.name == "elemabelian") {
    const auto p = static_cast<std::uint32_t>(f.args[0]);
    degree = static_cast<std::size_t>(p) * n;
    for (std::uint32_t i = 0; i < n; ++i) {
      gens.push_back(Permutation::from_cycles(degree, {range_cycle(i * p, (i + 1) * p)}));
    }
  } else {
    throw InputError("unknown group family '" + f.name + "'");
  }
  return group_from_permutations(degree, gens, max_order);
}

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

bool operator==(const ProductSpec& a, const ProductSpec& b) {
  return *a.left == *b.left && *a.right == *b.right;
}

bool operator==(const SemidirectSpec& a, const SemidirectSpec& b) {
  return a.p == b.p && a.n == b.n && *a.acting == *b.acting && a.matrices == b.matrices;
}

bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.node == b.node; }

GroupSpec parse_group_spec(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

std::string to_string(const GroupSpec& spec) {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        std::ostringstream os;
        if constexpr (std::is_same_v<T, FamilySpec>) {
          os << node.name;
          for (auto a : node.args) os << ' ' << a;
        } else if constexpr (std::is_same_v<T, PermSpec>) {
          os << "perm " << node.degree << ":";
          for (std::size_t i = 0; i < node.generators.size(); ++i) {
            os << (i ? ", " : " ") << perm_text(node.generators[i]);
          }
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          os << "product (" << to_string(*node.left) << ") (" << to_string(*node.right) << ")";
        } else {
          os << "semidirect " << node.p << ' ' << node.n << " (" << to_string(*node.acting) << ")";
          for (std::size_t k = 0; k < node.matrices.size(); ++k) {
            const auto& m = node.matrices[k];
            os << (k ? ", [" : " [");
            for (std::size_t r = 0; r < m.rows(); ++r) {
              if (r) os << "; ";
              for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
            }
            os << "]";
          }
        }
        return os.str();
      },
      spec.node);
}

FiniteGroup build_group(const GroupSpec& spec, std::size_t max_order) {
  if (max_order < 1) throw InputError("max_order must be positive");
  return std::visit(
      [&](const auto& node) -> FiniteGroup {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, FamilySpec>) {
          return build_family(node, max_order);
        } else if constexpr (std::is_same_v<T, PermSpec>) {
          return group_from_permutations(node.degree, node.generators, max_order);
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          auto a = build_group(*node.left, max_order);
          auto b = build_group(*node.right, max_order);
          return direct_product(a, b, max_order);
        } else {
          auto h = build_group(*node.acting, max_order);
          return semidirect_product(node.p, node.n, h, node.matrices, max_order);
        }
      },
      spec.node);
}

std::pair<std::string, std::string> split_autos(std::string_view text) {
  const auto pos = text.find("autos:");
  if (pos == std::string_view::npos) return {trim(text), ""};
  return {trim(text.substr(0, pos)), trim(text.substr(pos + 6))};
}

std::vector<AutomorphismSpec> parse_autos_block(std::string_view text) {
  std::string body(text);
  if (auto pos = body.find("autos:"); pos != std::string::npos) body = body.substr(pos + 6);
  std::vector<AutomorphismSpec> out;
  std::size_t line_no = 0;
  std::string line;
  std::string unit;
  std::istringstream lines(body);
  while (std::getline(lines, line)) {
    ++line_no;
    std::istringstream units(line);
    while (std::getline(units, unit, ';')) {
      auto u = trim(unit);
      if (u.empty() || u.front() == '#') continue;
      AutomorphismSpec a;
      std::istringstream parts(u);
      std::string part;
      while (std::getline(parts, part, ',')) {
        auto arrow = part.find("->");
        if (arrow == std::string::npos) throw ParseError("expected 'g<i> -> word'", line_no, 1);
        auto lhs = trim(std::string_view(part).substr(0, arrow));
        auto rhs = trim(std::string_view(part).substr(arrow + 2));
        if (lhs.size() < 2 || lhs[0] != 'g') throw ParseError("left side must be a generator g<i>", line_no, 1);
        std::size_t gi = 0;
        auto [p, ec] = std::from_chars(lhs.data() + 1, lhs.data() + lhs.size(), gi);
        if (ec != std::errc() || p != lhs.data() + lhs.size()) {
          throw ParseError("bad generator name '" + lhs + "'", line_no, 1);
        }
        if (rhs.empty()) throw ParseError("empty image word", line_no, 1);
        a.images.emplace_back(gi, rhs);
      }
      out.push_back(std::move(a));
    }
  }
  return out;
}

Elem evaluate_word(const FiniteGroup& g, std::string_view word) {
  std::istringstream in{std::string(word)};
  std::string tok;
  Elem acc = g.identity();
  while (in >> tok) {
    if (tok == "e") continue;
    if (tok.size() < 2 || tok[0] != 'g') throw InputError("bad word token '" + tok + "'");
    const auto caret = tok.find('^');
    const std::string idx_text = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    std::size_t gi = 0;
    auto [p, ec] = std::from_chars(idx_text.data(), idx_text.data() + idx_text.size(), gi);
    if (ec != std::errc() || p != idx_text.data() + idx_text.size()) throw InputError("bad word token '" + tok + "'");
    if (gi >= g.generators().size()) {
      throw InputError("generator g" + std::to_string(gi) + " does not exist (group has " +
                       std::to_string(g.generators().size()) + ")");
    }
    long long power = 1;
    if (caret != std::string::npos) {
      const std::string e = tok.substr(caret + 1);
      auto [q, ec2] = std::from_chars(e.data(), e.data() + e.size(), power);
      if (ec2 != std::errc() || q != e.data() + e.size()) throw InputError("bad exponent in '" + tok + "'");
    }
    Elem base = g.generators()[gi];
    if (power < 0) {
      base = g.inv(base);
      power = -power;
    }
    const auto ord = static_cast<long long>(g.element_order(base));
    power %= ord;
    for (long long i = 0; i < power; ++i) acc = g.mul(acc, base);
  }
  return acc;
}

}  // namespace irrep
