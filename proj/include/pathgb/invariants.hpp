#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "pathgb/rational.hpp"
#include "pathgb/scheme.hpp"

namespace pathgb {

namespace detail {

/// Arrow-transition automaton: states are arrows, with an edge a -> b when
/// the length-2 path ab exists and `edge(a, b)` holds.
inline std::vector<std::vector<ArrowId>> arrow_automaton(
    const Quiver& quiver, const std::function<bool(ArrowId, ArrowId)>& edge) {
  std::vector<std::vector<ArrowId>> adj(quiver.arrow_count());
  for (ArrowId a = 0; a < static_cast<ArrowId>(quiver.arrow_count()); ++a)
    for (ArrowId b = 0; b < static_cast<ArrowId>(quiver.arrow_count()); ++b)
      if (quiver.arrow(a).tgt == quiver.arrow(b).src && edge(a, b))
        adj[static_cast<std::size_t>(a)].push_back(b);
  return adj;
}

inline bool has_cycle(const std::vector<std::vector<ArrowId>>& adj) {
  enum { White, Gray, Black };
  std::vector<int> color(adj.size(), White);
  std::vector<std::pair<ArrowId, std::size_t>> stack;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (color[s] != White) continue;
    stack.clear();
    stack.emplace_back(static_cast<ArrowId>(s), 0);
    color[s] = Gray;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < adj[static_cast<std::size_t>(v)].size()) {
        ArrowId w = adj[static_cast<std::size_t>(v)][next++];
        if (color[static_cast<std::size_t>(w)] == Gray) return true;
        if (color[static_cast<std::size_t>(w)] == White) {
          color[static_cast<std::size_t>(w)] = Gray;
          stack.emplace_back(w, 0);
        }
      } else {
        color[static_cast<std::size_t>(v)] = Black;
        stack.pop_back();
      }
    }
  }
  return false;
}

inline bool tip_member(const std::vector<Path>& tips, ArrowId a, ArrowId b) {
  for (const auto& t : tips)
    if (t.arrow(0) == a && t.arrow(1) == b) return true;
  return false;
}

}  // namespace detail

/// The nontip basis N of every algebra in the variety, graded by path length.
/// N_0 is the trivial paths, N_1 the arrows; longer nontips are the walks of
/// the transition automaton (a -> b allowed iff ab is a length-2 nontip).
struct NontipBasis {
  std::vector<std::vector<Path>> by_length;
  bool finite = false;
  std::optional<std::size_t> total;  // set when finite

  std::size_t listed() const {
    std::size_t n = 0;
    for (const auto& l : by_length) n += l.size();
    return n;
  }
};

/// Finiteness is decided by cycle detection; when N is finite the whole basis
/// is returned regardless of max_length.
inline NontipBasis enumerate_nontips(const Quiver& quiver, const std::vector<Path>& tips,
                                     std::size_t max_length = 12) {
  auto adj = detail::arrow_automaton(
      quiver, [&](ArrowId a, ArrowId b) { return !detail::tip_member(tips, a, b); });
  NontipBasis basis;
  basis.finite = !detail::has_cycle(adj);

  std::vector<Path> level;
  for (VertexId v = 0; v < static_cast<VertexId>(quiver.vertex_count()); ++v)
    level.push_back(Path::trivial(v));
  basis.by_length.push_back(level);

  level.clear();
  for (ArrowId a = 0; a < static_cast<ArrowId>(quiver.arrow_count()); ++a)
    level.push_back(Path::from_arrows({a}));
  if (!level.empty()) basis.by_length.push_back(level);

  while (!basis.by_length.back().empty() &&
         (basis.finite || basis.by_length.size() <= max_length)) {
    std::vector<Path> next;
    for (const auto& p : basis.by_length.back()) {
      if (p.is_trivial()) continue;
      for (ArrowId b : adj[static_cast<std::size_t>(p.arrows().back())]) {
        std::vector<ArrowId> ids = p.arrows();
        ids.push_back(b);
        next.push_back(Path::from_arrows(std::move(ids)));
      }
    }
    if (next.empty()) break;
    basis.by_length.push_back(std::move(next));
  }
  if (!basis.finite)
    while (basis.by_length.size() > max_length + 1) basis.by_length.pop_back();
  if (basis.finite) basis.total = basis.listed();
  return basis;
}

/// |Q0| x |Q0| matrix counting nontip paths between vertex pairs; this is the
/// Cartan matrix of every algebra in the variety. Requires N finite.
inline std::vector<std::vector<BigInt>> cartan_matrix(const Quiver& quiver,
                                                      const std::vector<Path>& tips) {
  auto basis = enumerate_nontips(quiver, tips);
  if (!basis.finite) throw SchemeError("infinite-dimensional algebra");
  std::vector<std::vector<BigInt>> c(quiver.vertex_count(),
                                     std::vector<BigInt>(quiver.vertex_count(), 0));
  for (const auto& level : basis.by_length)
    for (const auto& p : level)
      c[static_cast<std::size_t>(quiver.source(p))][static_cast<std::size_t>(quiver.target(p))] += 1;
  return c;
}

/// Fraction-free determinant (Bareiss).
inline BigInt determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// T^n: arrow sequences a_1...a_n with every consecutive pair in T. These are
/// the tips of the n-th term in the minimal projective resolution of the
/// simples, shared by every algebra in the variety. T^0 is the trivial paths
/// and T^1 the arrows.
inline std::vector<Path> resolution_tips(const Quiver& quiver, const std::vector<Path>& tips,
                                         std::size_t n) {
  std::vector<Path> out;
  if (n == 0) {
    for (VertexId v = 0; v < static_cast<VertexId>(quiver.vertex_count()); ++v)
      out.push_back(Path::trivial(v));
    return out;
  }
  if (n == 1) {
    for (ArrowId a = 0; a < static_cast<ArrowId>(quiver.arrow_count()); ++a)
      out.push_back(Path::from_arrows({a}));
    return out;
  }
  out = tips;
  for (std::size_t k = 2; k < n; ++k) {
    std::vector<Path> next;
    for (const auto& p : out)
      for (ArrowId b = 0; b < static_cast<ArrowId>(quiver.arrow_count()); ++b)
        if (detail::tip_member(tips, p.arrows().back(), b)) {
          std::vector<ArrowId> ids = p.arrows();
          ids.push_back(b);
          next.push_back(Path::from_arrows(std::move(ids)));
        }
    out = std::move(next);
    if (out.empty()) break;
  }
  return out;
}

/// dim Ext^n(S_v, S_w) = |{p in T^n : p starts at v, ends at w}|.
inline std::size_t betti(const Quiver& quiver, const std::vector<Path>& tips, VertexId v,
                         VertexId w, std::size_t n) {
  std::size_t count = 0;
  for (const auto& p : resolution_tips(quiver, tips, n))
    if (quiver.source(p) == v && quiver.target(p) == w) ++count;
  return count;
}

namespace detail {

/// Longest walk (counted in states) starting from the given seed states;
/// absent when a cycle is reachable from them. States are arrows, edges the
/// given adjacency. A walk of k states is a tip-chain of length k.
inline std::optional<std::size_t> longest_reachable_walk(
    const std::vector<std::vector<ArrowId>>& adj, const std::vector<ArrowId>& seeds) {
  std::vector<char> seen(adj.size(), 0);
  std::vector<ArrowId> stack = seeds;
  for (ArrowId a : seeds) seen[static_cast<std::size_t>(a)] = 1;
  while (!stack.empty()) {
    ArrowId a = stack.back();
    stack.pop_back();
    for (ArrowId b : adj[static_cast<std::size_t>(a)])
      if (!seen[static_cast<std::size_t>(b)]) {
        seen[static_cast<std::size_t>(b)] = 1;
        stack.push_back(b);
      }
  }
  std::vector<std::vector<ArrowId>> sub(adj.size());
  for (std::size_t a = 0; a < adj.size(); ++a)
    if (seen[a])
      for (ArrowId b : adj[a])
        if (seen[static_cast<std::size_t>(b)]) sub[a].push_back(b);
  if (has_cycle(sub)) return std::nullopt;
  std::vector<long long> best(adj.size(), -1);
  std::function<long long(ArrowId)> longest = [&](ArrowId a) -> long long {
    auto& memo = best[static_cast<std::size_t>(a)];
    if (memo >= 0) return memo;
    long long len = 1;
    for (ArrowId b : sub[static_cast<std::size_t>(a)]) len = std::max(len, 1 + longest(b));
    memo = len;
    return len;
  };
  long long out = 0;
  for (ArrowId a : seeds) out = std::max(out, longest(a));
  return static_cast<std::size_t>(out);
}

}  // namespace detail

/// pd(S_v): the largest n with v . T^n nonempty; absent when infinite.
inline std::optional<std::size_t> projective_dimension(const Quiver& quiver,
                                                       const std::vector<Path>& tips, VertexId v) {
  auto adj = detail::arrow_automaton(
      quiver, [&](ArrowId a, ArrowId b) { return detail::tip_member(tips, a, b); });
  std::vector<ArrowId> seeds;
  for (ArrowId a = 0; a < static_cast<ArrowId>(quiver.arrow_count()); ++a)
    if (quiver.arrow(a).src == v) seeds.push_back(a);
  return detail::longest_reachable_walk(adj, seeds);
}

/// id(S_v), computed as the largest n with T^n . v nonempty; this equals
/// pd of the simple at v over the opposite scheme.
inline std::optional<std::size_t> injective_dimension(const Quiver& quiver,
                                                      const std::vector<Path>& tips, VertexId v) {
  // chains walked right to left: edge a -> b iff ba in T
  std::vector<std::vector<ArrowId>> adj(quiver.arrow_count());
  for (ArrowId a = 0; a < static_cast<ArrowId>(quiver.arrow_count()); ++a)
    for (ArrowId b = 0; b < static_cast<ArrowId>(quiver.arrow_count()); ++b)
      if (detail::tip_member(tips, b, a)) adj[static_cast<std::size_t>(a)].push_back(b);
  std::vector<ArrowId> seeds;
  for (ArrowId a = 0; a < static_cast<ArrowId>(quiver.arrow_count()); ++a)
    if (quiver.arrow(a).tgt == v) seeds.push_back(a);
  return detail::longest_reachable_walk(adj, seeds);
}

/// The homological fingerprint shared by every algebra in the variety:
/// Betti counts per degree and vertex pair, pd and id per simple, and the
/// global dimension. Degrees are listed until T^n empties or max_n is hit.
struct ResolutionShape {
  struct Degree {
    std::size_t n = 0;
    std::size_t total = 0;
    // nonzero beta^n_{v,w} only
    std::vector<std::tuple<VertexId, VertexId, std::size_t>> ext_dims;
  };
  std::vector<Degree> degrees;
  bool truncated = false;  // stopped at max_n with chains remaining
  std::vector<std::optional<std::size_t>> pd_by_vertex;
  std::vector<std::optional<std::size_t>> id_by_vertex;
  std::optional<std::size_t> gldim;  // absent when infinite
  bool gldim_defined = false;        // false when N is infinite
};

inline ResolutionShape resolution_shape(const Quiver& quiver, const std::vector<Path>& tips,
                                        std::size_t max_n) {
  ResolutionShape shape;
  for (std::size_t n = 0; n <= max_n; ++n) {
    auto tn = resolution_tips(quiver, tips, n);
    ResolutionShape::Degree d;
    d.n = n;
    d.total = tn.size();
    for (VertexId v = 0; v < static_cast<VertexId>(quiver.vertex_count()); ++v)
      for (VertexId w = 0; w < static_cast<VertexId>(quiver.vertex_count()); ++w) {
        std::size_t count = 0;
        for (const auto& p : tn)
          if (quiver.source(p) == v && quiver.target(p) == w) ++count;
        if (count) d.ext_dims.emplace_back(v, w, count);
      }
    shape.degrees.push_back(std::move(d));
    if (tn.empty()) break;
    if (n == max_n) shape.truncated = true;
  }
  for (VertexId v = 0; v < static_cast<VertexId>(quiver.vertex_count()); ++v) {
    shape.pd_by_vertex.push_back(projective_dimension(quiver, tips, v));
    shape.id_by_vertex.push_back(injective_dimension(quiver, tips, v));
  }
  auto basis_adj = detail::arrow_automaton(
      quiver, [&](ArrowId a, ArrowId b) { return !detail::tip_member(tips, a, b); });
  if (!detail::has_cycle(basis_adj)) {
    shape.gldim_defined = true;
    std::size_t g = 0;
    bool infinite = false;
    for (const auto& pd : shape.pd_by_vertex) {
      if (!pd) infinite = true;
      else g = std::max(g, *pd);
    }
    if (!infinite) shape.gldim = g;
  }
  return shape;
}

/// gldim = max over vertices of pd(S_v); infinite iff the tip-chain automaton
/// (edge a -> b iff ab in T) has a cycle. Requires N finite.
inline std::optional<std::size_t> global_dimension(const Quiver& quiver,
                                                   const std::vector<Path>& tips) {
  auto basis_adj = detail::arrow_automaton(
      quiver, [&](ArrowId a, ArrowId b) { return !detail::tip_member(tips, a, b); });
  if (detail::has_cycle(basis_adj)) throw SchemeError("infinite-dimensional algebra");
  auto chain_adj = detail::arrow_automaton(
      quiver, [&](ArrowId a, ArrowId b) { return detail::tip_member(tips, a, b); });
  if (detail::has_cycle(chain_adj)) return std::nullopt;
  std::size_t g = 0;
  for (VertexId v = 0; v < static_cast<VertexId>(quiver.vertex_count()); ++v) {
    auto pd = projective_dimension(quiver, tips, v);
    g = std::max(g, *pd);
  }
  return g;
}

}  // namespace pathgb
