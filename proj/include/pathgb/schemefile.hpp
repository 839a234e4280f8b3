#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pathgb/scheme.hpp"

namespace pathgb {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

/// Parsed form of the line-oriented input language:
///
///   # comment
///   vertices: v1 v2 ...
///   arrow a: v1 -> v2
///   order: a b c ...          (optional; strictly decreasing precedence)
///   tips: a.b, c.d, ...       (optional; empty T when absent)
///   set t1.t2 -> n1.n2 = p/q  (optional point / specialization entries)
///
/// Sections appear in that order and identifiers are declared before use.
struct SchemeFile {
  struct ArrowDecl {
    std::string name, src, tgt;
  };
  struct SetEntry {
    std::pair<std::string, std::string> tip;
    std::pair<std::string, std::string> nontip;
    Rational value;
    std::size_t line = 0;
  };

  std::vector<std::string> vertices;
  std::vector<ArrowDecl> arrows;
  std::vector<std::string> order;  // empty: declaration order
  std::vector<std::pair<std::string, std::string>> tips;
  std::vector<SetEntry> sets;

  friend bool operator==(const SchemeFile& a, const SchemeFile& b) {
    auto arrows_eq = [](const ArrowDecl& x, const ArrowDecl& y) {
      return x.name == y.name && x.src == y.src && x.tgt == y.tgt;
    };
    if (a.vertices != b.vertices || a.order != b.order || a.tips != b.tips) return false;
    if (a.arrows.size() != b.arrows.size() || a.sets.size() != b.sets.size()) return false;
    for (std::size_t i = 0; i < a.arrows.size(); ++i)
      if (!arrows_eq(a.arrows[i], b.arrows[i])) return false;
    for (std::size_t i = 0; i < a.sets.size(); ++i)
      if (a.sets[i].tip != b.sets[i].tip || a.sets[i].nontip != b.sets[i].nontip ||
          a.sets[i].value != b.sets[i].value)
        return false;
    return true;
  }
};

namespace detail {

constexpr std::string_view kReserved = ".,:->#=|[]";

inline bool is_token_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && kReserved.find(c) == std::string_view::npos;
}

struct Lexer {
  std::string_view text;
  std::size_t line;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_space();
    return pos >= text.size();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line, pos + 1, message);
  }

  /// Next token: an identifier, "->", or a single punctuation char.
  std::string next() {
    skip_space();
    if (pos >= text.size()) fail("unexpected end of line");
    char c = text[pos];
    if (c == '-' && pos + 1 < text.size() && text[pos + 1] == '>') {
      pos += 2;
      return "->";
    }
    if (kReserved.find(c) != std::string_view::npos) {
      ++pos;
      return std::string(1, c);
    }
    std::size_t start = pos;
    while (pos < text.size() && is_token_char(text[pos])) ++pos;
    return std::string(text.substr(start, pos - start));
  }

  std::string expect_identifier(const std::string& what) {
    skip_space();
    std::size_t at = pos;
    std::string t = next();
    if (t.empty() || t == "->" || (t.size() == 1 && kReserved.find(t[0]) != std::string_view::npos)) {
      pos = at;
      fail("expected " + what);
    }
    return t;
  }

  void expect(const std::string& token) {
    skip_space();
    std::size_t at = pos;
    if (next() != token) {
      pos = at;
      fail("expected '" + token + "'");
    }
  }

  std::pair<std::string, std::string> expect_length2_path() {
    auto a = expect_identifier("an arrow name");
    expect(".");
    auto b = expect_identifier("an arrow name");
    return {a, b};
  }
};

}  // namespace detail

inline SchemeFile parse_scheme_file(std::string_view text) {
  SchemeFile file;
  enum Section { None, Vertices, Arrows, Order, Tips, Sets };
  Section last = None;
  std::map<std::string, char> declared_vertices;
  std::map<std::string, char> declared_arrows;

  auto advance_to = [&](detail::Lexer& lx, Section s, const char* directive) {
    if (last > s) lx.fail(std::string("'") + directive + "' must come earlier in the file");
    if (last == s && (s == Vertices || s == Order || s == Tips))
      lx.fail(std::string("duplicate '") + directive + "' directive");
    last = s;
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    detail::Lexer lx{raw, line_no};
    if (lx.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    std::string head = lx.next();

    if (head == "vertices") {
      lx.expect(":");
      advance_to(lx, Vertices, "vertices:");
      while (!lx.at_end()) {
        auto v = lx.expect_identifier("a vertex name");
        if (!declared_vertices.emplace(v, 0).second) lx.fail("duplicate vertex '" + v + "'");
        file.vertices.push_back(v);
      }
      if (file.vertices.empty()) lx.fail("'vertices:' lists no vertices");
    } else if (head == "arrow") {
      advance_to(lx, Arrows, "arrow");
      auto name = lx.expect_identifier("an arrow name");
      lx.expect(":");
      auto src = lx.expect_identifier("a vertex name");
      lx.expect("->");
      auto tgt = lx.expect_identifier("a vertex name");
      if (!lx.at_end()) lx.fail("trailing input after arrow declaration");
      if (!declared_vertices.count(src)) lx.fail("unknown vertex '" + src + "'");
      if (!declared_vertices.count(tgt)) lx.fail("unknown vertex '" + tgt + "'");
      if (!declared_arrows.emplace(name, 0).second) lx.fail("duplicate arrow '" + name + "'");
      file.arrows.push_back({name, src, tgt});
    } else if (head == "order") {
      lx.expect(":");
      advance_to(lx, Order, "order:");
      while (!lx.at_end()) {
        auto a = lx.expect_identifier("an arrow name");
        if (!declared_arrows.count(a)) lx.fail("unknown arrow '" + a + "'");
        file.order.push_back(a);
      }
    } else if (head == "tips") {
      lx.expect(":");
      advance_to(lx, Tips, "tips:");
      bool first = true;
      while (!lx.at_end()) {
        if (!first) lx.expect(",");
        first = false;
        auto t = lx.expect_length2_path();
        if (!declared_arrows.count(t.first)) lx.fail("unknown arrow '" + t.first + "'");
        if (!declared_arrows.count(t.second)) lx.fail("unknown arrow '" + t.second + "'");
        file.tips.push_back(t);
      }
    } else if (head == "set") {
      advance_to(lx, Sets, "set");
      SchemeFile::SetEntry entry;
      entry.line = line_no;
      entry.tip = lx.expect_length2_path();
      lx.expect("->");
      entry.nontip = lx.expect_length2_path();
      lx.expect("=");
      auto value_token = lx.next();
      if (value_token == "-") value_token += lx.next();  // allow "- 1/2" split
      auto r = parse_rational(value_token);
      if (!r) lx.fail("malformed rational '" + value_token + "'");
      entry.value = *r;
      if (!lx.at_end()) lx.fail("trailing input after set entry");
      for (const auto* name : {&entry.tip.first, &entry.tip.second, &entry.nontip.first,
                               &entry.nontip.second})
        if (!declared_arrows.count(*name)) lx.fail("unknown arrow '" + *name + "'");
      file.sets.push_back(std::move(entry));
    } else {
      lx.fail("unknown directive '" + head + "'");
    }
    if (end == text.size()) break;
  }

  if (file.vertices.empty()) throw ParseError(line_no, 1, "missing 'vertices:' directive");
  if (!file.order.empty()) {
    std::map<std::string, char> seen;
    for (const auto& a : file.order)
      if (!seen.emplace(a, 0).second)
        throw ParseError(line_no, 1, "order lists arrow '" + a + "' twice");
    if (file.order.size() != file.arrows.size())
      throw ParseError(line_no, 1, "order must list every arrow exactly once");
  }
  return file;
}

/// One coordinate assignment in the `set` grammar, e.g. "z.y->y.z=1" or
/// "y.x -> x.y = -1/2"; the CLI's --set flag is parsed with this.
inline SchemeFile::SetEntry parse_set_entry(std::string_view text) {
  detail::Lexer lx{text, 0};
  SchemeFile::SetEntry e;
  e.tip = lx.expect_length2_path();
  lx.expect("->");
  e.nontip = lx.expect_length2_path();
  lx.expect("=");
  auto token = lx.next();
  if (token == "-") token += lx.next();
  auto r = parse_rational(token);
  if (!r) lx.fail("malformed rational '" + token + "'");
  e.value = *r;
  if (!lx.at_end()) lx.fail("trailing input after set entry");
  return e;
}

/// Canonical rendering; parse(render(f)) == f.
inline std::string render_scheme_file(const SchemeFile& file) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& v : file.vertices) out << ' ' << v;
  out << '\n';
  for (const auto& a : file.arrows)
    out << "arrow " << a.name << ": " << a.src << " -> " << a.tgt << '\n';
  if (!file.order.empty()) {
    out << "order:";
    for (const auto& a : file.order) out << ' ' << a;
    out << '\n';
  }
  if (!file.tips.empty()) {
    out << "tips:";
    for (std::size_t i = 0; i < file.tips.size(); ++i)
      out << (i ? ", " : " ") << file.tips[i].first << '.' << file.tips[i].second;
    out << '\n';
  }
  for (const auto& s : file.sets)
    out << "set " << s.tip.first << '.' << s.tip.second << " -> " << s.nontip.first << '.'
        << s.nontip.second << " = " << s.value << '\n';
  return out.str();
}

/// The inverse of realize for schemes whose order the grammar can express:
/// length-left-lex with an explicit precedence, which includes every tensor
/// scheme. Optional point coordinates become `set` lines.
inline SchemeFile scheme_to_file(const QuadraticScheme& s, const Point* point = nullptr) {
  if (!dynamic_cast<const LengthLeftLexOrder*>(s.order.get()))
    throw SchemeError("this scheme's order cannot be written in the file grammar");
  SchemeFile f;
  const auto& q = s.quiver;
  f.vertices = q.vertex_names();
  for (const auto& a : q.arrows()) f.arrows.push_back({a.name, q.vertex_name(a.src), q.vertex_name(a.tgt)});
  std::vector<ArrowId> by_order(q.arrow_count());
  for (std::size_t i = 0; i < by_order.size(); ++i) by_order[i] = static_cast<ArrowId>(i);
  std::sort(by_order.begin(), by_order.end(), [&](ArrowId a, ArrowId b) {
    return s.order->greater(Path::from_arrows({a}), Path::from_arrows({b}));
  });
  for (ArrowId a : by_order) f.order.push_back(q.arrow(a).name);
  for (const auto& t : s.tips)
    f.tips.emplace_back(q.arrow(t.arrow(0)).name, q.arrow(t.arrow(1)).name);
  if (point) {
    for (std::size_t id = 0; id < s.dimension(); ++id) {
      if ((*point)[id] == 0) continue;
      SchemeFile::SetEntry e;
      const auto& var = s.vars.var(id);
      e.tip = {q.arrow(var.tip.arrow(0)).name, q.arrow(var.tip.arrow(1)).name};
      e.nontip = {q.arrow(var.nontip.arrow(0)).name, q.arrow(var.nontip.arrow(1)).name};
      e.value = (*point)[id];
      f.sets.push_back(std::move(e));
    }
  }
  return f;
}

/// A scheme file realized against the library types: the scheme plus the
/// validated `set` entries keyed by scheme-canonical variable id.
struct RealizedScheme {
  QuadraticScheme scheme;
  Specialization sets;
};

inline RealizedScheme realize(const SchemeFile& file) {
  std::vector<Quiver::ArrowDecl> arrows;
  for (const auto& a : file.arrows) arrows.push_back({a.name, a.src, a.tgt});
  Quiver quiver = Quiver::make(file.vertices, arrows);

  std::vector<ArrowId> precedence;
  if (file.order.empty()) {
    for (ArrowId a = 0; a < static_cast<ArrowId>(quiver.arrow_count()); ++a)
      precedence.push_back(a);
  } else {
    for (const auto& name : file.order) precedence.push_back(*quiver.arrow_id(name));
  }
  auto order = LengthLeftLexOrder::make(quiver, std::move(precedence));

  std::vector<Path> tips;
  for (const auto& [a, b] : file.tips) {
    auto p = quiver.path({*quiver.arrow_id(a), *quiver.arrow_id(b)});
    if (!p) throw SchemeError("tip " + a + "." + b + " is not a composable path");
    tips.push_back(*p);
  }

  RealizedScheme out{build_scheme(std::move(quiver), std::move(order), std::move(tips)), {}};
  const auto& s = out.scheme;
  for (const auto& e : file.sets) {
    auto tip = s.quiver.path(
        {*s.quiver.arrow_id(e.tip.first), *s.quiver.arrow_id(e.tip.second)});
    auto nontip = s.quiver.path(
        {*s.quiver.arrow_id(e.nontip.first), *s.quiver.arrow_id(e.nontip.second)});
    auto describe = [&] {
      return e.tip.first + "." + e.tip.second + " -> " + e.nontip.first + "." + e.nontip.second;
    };
    if (!tip || !nontip)
      throw SchemeError("set " + describe() + ": not a composable path (line " +
                        std::to_string(e.line) + ")");
    auto id = s.var_id(*tip, *nontip);
    if (!id)
      throw SchemeError("set " + describe() + ": not a coordinate of the scheme (line " +
                        std::to_string(e.line) + ")");
    if (out.sets.count(*id))
      throw SchemeError("set " + describe() + ": coordinate assigned twice (line " +
                        std::to_string(e.line) + ")");
    out.sets.emplace(*id, e.value);
  }
  return out;
}

}  // namespace pathgb
