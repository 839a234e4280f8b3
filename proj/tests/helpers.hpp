#pragma once

#include <random>
#include <vector>

#include "pathgb/pathgb.hpp"

namespace testutil {

using namespace pathgb;

// ---- the worked fixtures, built in code so unit tests stay hermetic ----

/// Seven vertices in three layers over a sink; tips {af, ae, bg, bh, ek, gk, ik}.
inline QuadraticScheme layered_scheme() {
  Quiver q = Quiver::make({"v1", "v2", "v3", "v4", "v5", "v6", "v7"},
                          {{"a", "v1", "v2"},
                           {"b", "v1", "v3"},
                           {"c", "v1", "v4"},
                           {"e", "v2", "v5"},
                           {"f", "v2", "v6"},
                           {"g", "v3", "v5"},
                           {"h", "v3", "v6"},
                           {"i", "v4", "v5"},
                           {"j", "v4", "v6"},
                           {"k", "v5", "v7"},
                           {"l", "v6", "v7"}});
  auto order = LengthLeftLexOrder::declaration_order(q);
  auto tip = [&](const char* x, const char* y) { return *q.path_by_names({x, y}); };
  std::vector<Path> tips = {tip("a", "f"), tip("a", "e"), tip("b", "g"), tip("b", "h"),
                            tip("e", "k"), tip("g", "k"), tip("i", "k")};
  return build_scheme(std::move(q), std::move(order), std::move(tips));
}

/// One vertex, loops y > x, single tip yx (the quantum-plane family).
inline QuadraticScheme two_loop_scheme() {
  Quiver q = Quiver::make({"v"}, {{"y", "v", "v"}, {"x", "v", "v"}});
  auto order = LengthLeftLexOrder::declaration_order(q);
  std::vector<Path> tips = {*q.path_by_names({"y", "x"})};
  return build_scheme(std::move(q), std::move(order), std::move(tips));
}

/// One vertex, loops y > x, tips {x2, y2, yx} (four-dimensional algebras).
inline QuadraticScheme truncated_scheme() {
  Quiver q = Quiver::make({"v"}, {{"y", "v", "v"}, {"x", "v", "v"}});
  auto order = LengthLeftLexOrder::declaration_order(q);
  std::vector<Path> tips = {*q.path_by_names({"x", "x"}), *q.path_by_names({"y", "y"}),
                            *q.path_by_names({"y", "x"})};
  return build_scheme(std::move(q), std::move(order), std::move(tips));
}

/// One vertex, loops z > y > x, tips {zy, zx, yx} (polynomial-ring shape).
inline QuadraticScheme three_loop_scheme() {
  Quiver q = Quiver::make({"v"}, {{"z", "v", "v"}, {"y", "v", "v"}, {"x", "v", "v"}});
  auto order = LengthLeftLexOrder::declaration_order(q);
  std::vector<Path> tips = {*q.path_by_names({"z", "y"}), *q.path_by_names({"z", "x"}),
                            *q.path_by_names({"y", "x"})};
  return build_scheme(std::move(q), std::move(order), std::move(tips));
}

/// The ten frozen coordinates of the subvariety example on three_loop_scheme.
inline Specialization subvariety_psi(const QuadraticScheme& s) {
  auto p = [&](const char* a, const char* b) { return *s.quiver.path_by_names({a, b}); };
  Specialization psi;
  auto set = [&](const char* t1, const char* t2, const char* n1, const char* n2, int v) {
    psi.emplace(*s.var_id(p(t1, t2), p(n1, n2)), Rational(v));
  };
  set("z", "y", "y", "z", 1);
  set("z", "y", "y", "y", 0);
  set("z", "y", "x", "z", 0);
  set("z", "y", "x", "x", 0);
  set("z", "x", "y", "z", 0);
  set("z", "x", "y", "y", 0);
  set("z", "x", "x", "z", 1);
  set("z", "x", "x", "x", 0);
  set("y", "x", "x", "z", 0);
  set("y", "x", "x", "y", 1);
  return psi;
}

// ---- random generation ----

struct RandomScheme {
  QuadraticScheme scheme;
};

/// A connected-ish random quiver with every vertex usable as an endpoint.
inline Quiver random_quiver(std::mt19937_64& rng, int max_vertices, int max_arrows) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  int vcount = nv(rng);
  std::uniform_int_distribution<int> na(1, max_arrows);
  int acount = na(rng);
  std::vector<std::string> vertices;
  for (int i = 0; i < vcount; ++i) vertices.push_back("u" + std::to_string(i));
  std::vector<Quiver::ArrowDecl> arrows;
  std::uniform_int_distribution<int> pick(0, vcount - 1);
  for (int i = 0; i < acount; ++i)
    arrows.push_back({"r" + std::to_string(i), vertices[static_cast<std::size_t>(pick(rng))],
                      vertices[static_cast<std::size_t>(pick(rng))]});
  return Quiver::make(vertices, arrows);
}

inline QuadraticScheme random_scheme(std::mt19937_64& rng, int max_vertices = 4,
                                     int max_arrows = 6) {
  while (true) {
    Quiver q = random_quiver(rng, max_vertices, max_arrows);
    std::vector<Path> len2;
    for (ArrowId a = 0; a < static_cast<ArrowId>(q.arrow_count()); ++a)
      for (ArrowId b = 0; b < static_cast<ArrowId>(q.arrow_count()); ++b)
        if (q.arrow(a).tgt == q.arrow(b).src) len2.push_back(Path::from_arrows({a, b}));
    if (len2.empty()) continue;
    std::vector<Path> tips;
    std::uniform_int_distribution<int> coin(0, 2);
    for (const auto& p : len2)
      if (coin(rng) == 0) tips.push_back(p);
    if (tips.empty()) tips.push_back(len2[static_cast<std::size_t>(
        std::uniform_int_distribution<std::size_t>(0, len2.size() - 1)(rng))]);
    auto order = LengthLeftLexOrder::declaration_order(q);
    return build_scheme(std::move(q), std::move(order), std::move(tips));
  }
}

inline Point random_point(std::mt19937_64& rng, const QuadraticScheme& s, int lo = -2,
                          int hi = 2) {
  Point x = Point::zero(s);
  std::uniform_int_distribution<int> pick(lo, hi);
  for (std::size_t i = 0; i < s.dimension(); ++i) x[i] = Rational(pick(rng));
  return x;
}

/// Random path of length in [min_len, max_len] by a random walk; absent when
/// the walk dead-ends and cannot reach min_len.
inline std::optional<Path> random_path(std::mt19937_64& rng, const Quiver& q, int min_len,
                                       int max_len) {
  std::uniform_int_distribution<int> len_dist(min_len, max_len);
  int want = len_dist(rng);
  if (want == 0)
    return Path::trivial(std::uniform_int_distribution<VertexId>(
        0, static_cast<VertexId>(q.vertex_count()) - 1)(rng));
  std::uniform_int_distribution<std::size_t> first(0, q.arrow_count() - 1);
  std::vector<ArrowId> ids;
  ids.push_back(static_cast<ArrowId>(first(rng)));
  while (static_cast<int>(ids.size()) < want) {
    std::vector<ArrowId> next;
    for (ArrowId b = 0; b < static_cast<ArrowId>(q.arrow_count()); ++b)
      if (q.arrow(ids.back()).tgt == q.arrow(b).src) next.push_back(b);
    if (next.empty()) break;
    ids.push_back(next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)]);
  }
  if (static_cast<int>(ids.size()) < min_len) return std::nullopt;
  return Path::from_arrows(std::move(ids));
}

}  // namespace testutil
