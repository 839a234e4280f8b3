#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pathgb {

using VertexId = std::int32_t;
using ArrowId = std::int32_t;

class QuiverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A path in a quiver: either the trivial path at a vertex or a nonempty,
/// composable arrow sequence. Immutable value object with structural equality;
/// arrow ids are scoped to the quiver the path was built against.
class Path {
 public:
  Path() = default;

  static Path trivial(VertexId v) {
    Path p;
    p.trivial_vertex_ = v;
    return p;
  }

  static Path from_arrows(std::vector<ArrowId> arrows) {
    Path p;
    p.arrows_ = std::move(arrows);
    return p;
  }

  bool is_trivial() const { return arrows_.empty(); }
  std::size_t length() const { return arrows_.size(); }
  const std::vector<ArrowId>& arrows() const { return arrows_; }
  VertexId trivial_vertex() const { return trivial_vertex_; }

  ArrowId arrow(std::size_t i) const { return arrows_[i]; }

  /// Subrange [begin, end) as a path; an empty range needs the vertex it
  /// would sit at, supplied by the caller.
  Path slice(std::size_t begin, std::size_t end, VertexId at_if_empty) const {
    if (begin >= end) return trivial(at_if_empty);
    return from_arrows(std::vector<ArrowId>(arrows_.begin() + begin, arrows_.begin() + end));
  }

  Path reversed() const {
    if (is_trivial()) return *this;
    std::vector<ArrowId> rev(arrows_.rbegin(), arrows_.rend());
    return from_arrows(std::move(rev));
  }

  friend bool operator==(const Path& a, const Path& b) {
    return a.trivial_vertex_ == b.trivial_vertex_ && a.arrows_ == b.arrows_;
  }
  friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }

 private:
  VertexId trivial_vertex_ = -1;  // meaningful only when arrows_ is empty
  std::vector<ArrowId> arrows_;
};

/// Structural key order on paths (length, trivial vertex, arrow sequence).
/// Unrelated to any admissible order; used only to key containers.
struct PathKeyLess {
  bool operator()(const Path& a, const Path& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.is_trivial()) return a.trivial_vertex() < b.trivial_vertex();
    return a.arrows() < b.arrows();
  }
};

struct Arrow {
  std::string name;
  VertexId src = -1;
  VertexId tgt = -1;
};

/// A finite quiver: ordered vertices and arrows (a directed multigraph).
/// Paths are validated against it and all endpoint queries go through it.
class Quiver {
 public:
  struct ArrowDecl {
    std::string name;
    std::string src;
    std::string tgt;
  };

  /// Identifiers are arbitrary nonempty tokens without whitespace or the
  /// punctuation the input language reserves.
  static bool is_valid_identifier(std::string_view name) {
    if (name.empty()) return false;
    constexpr std::string_view reserved = ".,:->#=|[]";
    for (char c : name)
      if (std::isspace(static_cast<unsigned char>(c)) ||
          reserved.find(c) != std::string_view::npos)
        return false;
    return true;
  }

  static Quiver make(const std::vector<std::string>& vertices,
                     const std::vector<ArrowDecl>& arrows) {
    Quiver q;
    for (const auto& v : vertices) {
      if (!is_valid_identifier(v)) throw QuiverError("invalid vertex identifier '" + v + "'");
      if (q.vertex_ids_.count(v)) throw QuiverError("duplicate vertex '" + v + "'");
      q.vertex_ids_.emplace(v, static_cast<VertexId>(q.vertex_names_.size()));
      q.vertex_names_.push_back(v);
    }
    for (const auto& a : arrows) {
      if (!is_valid_identifier(a.name))
        throw QuiverError("invalid arrow identifier '" + a.name + "'");
      if (q.arrow_ids_.count(a.name)) throw QuiverError("duplicate arrow '" + a.name + "'");
      auto s = q.vertex_ids_.find(a.src);
      auto t = q.vertex_ids_.find(a.tgt);
      if (s == q.vertex_ids_.end())
        throw QuiverError("arrow '" + a.name + "': unknown source vertex '" + a.src + "'");
      if (t == q.vertex_ids_.end())
        throw QuiverError("arrow '" + a.name + "': unknown target vertex '" + a.tgt + "'");
      q.arrow_ids_.emplace(a.name, static_cast<ArrowId>(q.arrows_.size()));
      q.arrows_.push_back(Arrow{a.name, s->second, t->second});
    }
    return q;
  }

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(ArrowId a) const { return arrows_[static_cast<std::size_t>(a)]; }
  const std::string& vertex_name(VertexId v) const {
    return vertex_names_[static_cast<std::size_t>(v)];
  }

  std::optional<VertexId> vertex_id(std::string_view name) const {
    auto it = vertex_ids_.find(std::string(name));
    return it == vertex_ids_.end() ? std::nullopt : std::optional<VertexId>(it->second);
  }
  std::optional<ArrowId> arrow_id(std::string_view name) const {
    auto it = arrow_ids_.find(std::string(name));
    return it == arrow_ids_.end() ? std::nullopt : std::optional<ArrowId>(it->second);
  }

  VertexId source(const Path& p) const {
    return p.is_trivial() ? p.trivial_vertex() : arrow(p.arrows().front()).src;
  }
  VertexId target(const Path& p) const {
    return p.is_trivial() ? p.trivial_vertex() : arrow(p.arrows().back()).tgt;
  }

  bool is_valid_path(const Path& p) const {
    if (p.is_trivial())
      return p.trivial_vertex() >= 0 &&
             p.trivial_vertex() < static_cast<VertexId>(vertex_count());
    const auto& as = p.arrows();
    for (std::size_t i = 0; i < as.size(); ++i) {
      if (as[i] < 0 || as[i] >= static_cast<ArrowId>(arrow_count())) return false;
      if (i + 1 < as.size() && arrow(as[i]).tgt != arrow(as[i + 1]).src) return false;
    }
    return true;
  }

  /// Builds a path from arrow ids, checking composability.
  std::optional<Path> path(std::span<const ArrowId> ids) const {
    Path p = Path::from_arrows(std::vector<ArrowId>(ids.begin(), ids.end()));
    if (p.is_trivial() || !is_valid_path(p)) return std::nullopt;
    return p;
  }
  std::optional<Path> path(std::initializer_list<ArrowId> ids) const {
    return path(std::span<const ArrowId>(ids.begin(), ids.size()));
  }

  /// Path from dot-free arrow names, e.g. {"a","e"}.
  std::optional<Path> path_by_names(const std::vector<std::string>& names) const {
    std::vector<ArrowId> ids;
    ids.reserve(names.size());
    for (const auto& n : names) {
      auto id = arrow_id(n);
      if (!id) return std::nullopt;
      ids.push_back(*id);
    }
    return path(ids);
  }

  /// Concatenation pq when target(p) = source(q); absent otherwise.
  /// Trivial paths act as one-sided identities at their vertex.
  std::optional<Path> compose(const Path& p, const Path& q) const {
    if (target(p) != source(q)) return std::nullopt;
    if (p.is_trivial()) return q;
    if (q.is_trivial()) return p;
    std::vector<ArrowId> ids = p.arrows();
    ids.insert(ids.end(), q.arrows().begin(), q.arrows().end());
    return Path::from_arrows(std::move(ids));
  }

  /// True iff p and q share both endpoints (v p w = p and v q w = q).
  bool is_parallel(const Path& p, const Path& q) const {
    return source(p) == source(q) && target(p) == target(q);
  }

  /// Renders a path: dot-joined arrow names, or the vertex name when trivial.
  std::string path_name(const Path& p) const {
    if (p.is_trivial()) return vertex_name(p.trivial_vertex());
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
      if (i) out += '.';
      out += arrow(p.arrow(i)).name;
    }
    return out;
  }

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, VertexId> vertex_ids_;
  std::unordered_map<std::string, ArrowId> arrow_ids_;
};

struct SubpathOccurrence {
  Path prefix;
  Path suffix;
  std::size_t position = 0;  // start index of t within p
};

/// All factorizations p = prefix . t . suffix, listed left to right by start
/// index. Occurrences may overlap. Requires length(t) >= 1.
inline std::vector<SubpathOccurrence> find_subpath_occurrences(const Quiver& quiver,
                                                               const Path& p,
                                                               const Path& t) {
  if (t.is_trivial()) throw QuiverError("subpath search requires a nontrivial subpath");
  std::vector<SubpathOccurrence> out;
  if (p.length() < t.length()) return out;
  for (std::size_t i = 0; i + t.length() <= p.length(); ++i) {
    if (std::equal(t.arrows().begin(), t.arrows().end(), p.arrows().begin() + i)) {
      SubpathOccurrence occ;
      occ.position = i;
      occ.prefix = p.slice(0, i, quiver.source(p));
      occ.suffix = p.slice(i + t.length(), p.length(), quiver.target(p));
      out.push_back(std::move(occ));
    }
  }
  return out;
}

}  // namespace pathgb
