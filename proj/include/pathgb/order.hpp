#pragma once

#include <compare>
#include <memory>
#include <stdexcept>
#include <vector>

#include "pathgb/quiver.hpp"

namespace pathgb {

class OrderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A length-admissible well-order on the paths of one quiver. Implementations
/// must satisfy the admissibility axioms (stability under left/right
/// composition, subpath dominance) plus "longer is greater"; the property
/// suite checks them on random paths.
class PathOrder {
 public:
  virtual ~PathOrder() = default;

  virtual std::strong_ordering compare(const Path& p, const Path& q) const = 0;

  bool greater(const Path& p, const Path& q) const { return compare(p, q) > 0; }
  bool less(const Path& p, const Path& q) const { return compare(p, q) < 0; }
  bool equal(const Path& p, const Path& q) const { return compare(p, q) == 0; }
};

using PathOrderPtr = std::shared_ptr<const PathOrder>;

/// Length-left-lexicographic order: longer paths are greater; equal lengths
/// compare left to right by arrow precedence; trivial paths compare by vertex
/// precedence. Every vertex sits below every arrow (forced by length).
class LengthLeftLexOrder final : public PathOrder {
 public:
  /// arrow_precedence lists all arrows, greatest first. vertex_precedence
  /// likewise for vertices; defaults to declaration order.
  static PathOrderPtr make(const Quiver& quiver, std::vector<ArrowId> arrow_precedence,
                           std::vector<VertexId> vertex_precedence = {}) {
    auto ord = std::make_shared<LengthLeftLexOrder>();
    ord->arrow_rank_.assign(quiver.arrow_count(), -1);
    if (arrow_precedence.size() != quiver.arrow_count())
      throw OrderError("arrow precedence must list every arrow exactly once");
    for (std::size_t i = 0; i < arrow_precedence.size(); ++i) {
      ArrowId a = arrow_precedence[i];
      if (a < 0 || a >= static_cast<ArrowId>(quiver.arrow_count()) ||
          ord->arrow_rank_[static_cast<std::size_t>(a)] != -1)
        throw OrderError("arrow precedence must list every arrow exactly once");
      ord->arrow_rank_[static_cast<std::size_t>(a)] = static_cast<int>(i);
    }
    if (vertex_precedence.empty()) {
      ord->vertex_rank_.resize(quiver.vertex_count());
      for (std::size_t i = 0; i < quiver.vertex_count(); ++i)
        ord->vertex_rank_[i] = static_cast<int>(i);
    } else {
      ord->vertex_rank_.assign(quiver.vertex_count(), -1);
      if (vertex_precedence.size() != quiver.vertex_count())
        throw OrderError("vertex precedence must list every vertex exactly once");
      for (std::size_t i = 0; i < vertex_precedence.size(); ++i) {
        VertexId v = vertex_precedence[i];
        if (v < 0 || v >= static_cast<VertexId>(quiver.vertex_count()) ||
            ord->vertex_rank_[static_cast<std::size_t>(v)] != -1)
          throw OrderError("vertex precedence must list every vertex exactly once");
        ord->vertex_rank_[static_cast<std::size_t>(v)] = static_cast<int>(i);
      }
    }
    return ord;
  }

  /// Precedence taken from declaration order of arrows and vertices.
  static PathOrderPtr declaration_order(const Quiver& quiver) {
    std::vector<ArrowId> arrows(quiver.arrow_count());
    for (std::size_t i = 0; i < arrows.size(); ++i) arrows[i] = static_cast<ArrowId>(i);
    return make(quiver, std::move(arrows));
  }

  std::strong_ordering compare(const Path& p, const Path& q) const override {
    if (p.length() != q.length()) return p.length() <=> q.length();
    if (p.is_trivial()) {
      // rank 0 is greatest, so flip
      return vertex_rank_[static_cast<std::size_t>(q.trivial_vertex())] <=>
             vertex_rank_[static_cast<std::size_t>(p.trivial_vertex())];
    }
    for (std::size_t i = 0; i < p.length(); ++i) {
      int rp = arrow_rank_[static_cast<std::size_t>(p.arrow(i))];
      int rq = arrow_rank_[static_cast<std::size_t>(q.arrow(i))];
      if (rp != rq) return rq <=> rp;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::vector<int> arrow_rank_;   // rank 0 = greatest
  std::vector<int> vertex_rank_;
};

/// The opposite order: p >op q iff rev(p) > rev(q) under the base order.
/// Assumes arrow and vertex ids are shared with the base quiver, which the
/// opposite-quiver construction guarantees. For length-left-lex bases this is
/// the length-right-lex order, which is not itself left-lex in general.
class ReversedOrder final : public PathOrder {
 public:
  explicit ReversedOrder(PathOrderPtr base) : base_(std::move(base)) {}

  static PathOrderPtr make(PathOrderPtr base) {
    return std::make_shared<ReversedOrder>(std::move(base));
  }

  std::strong_ordering compare(const Path& p, const Path& q) const override {
    return base_->compare(p.reversed(), q.reversed());
  }

 private:
  PathOrderPtr base_;
};

}  // namespace pathgb
