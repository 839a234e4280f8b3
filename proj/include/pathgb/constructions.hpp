#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "pathgb/variety.hpp"

namespace pathgb {

/// The opposite quiver: same vertex and arrow names and ids, every arrow
/// reversed. Sharing ids is what lets ReversedOrder compare opposite paths by
/// un-reversing them into the original quiver.
inline Quiver opposite_quiver(const Quiver& q) {
  std::vector<Quiver::ArrowDecl> arrows;
  for (const auto& a : q.arrows())
    arrows.push_back({a.name, q.vertex_name(a.tgt), q.vertex_name(a.src)});
  return Quiver::make(q.vertex_names(), arrows);
}

inline Path opposite_path(const Path& p) { return p.reversed(); }

/// Reverses all arrows and every tip and equips the result with the opposite
/// order (p^op > q^op iff p > q); the schemes' points correspond along the
/// coordinate bijection (t, n) -> (t^op, n^op).
inline QuadraticScheme opposite_scheme(const QuadraticScheme& s) {
  Quiver op = opposite_quiver(s.quiver);
  std::vector<Path> tips;
  tips.reserve(s.tips.size());
  for (const auto& t : s.tips) tips.push_back(opposite_path(t));
  return build_scheme(std::move(op), ReversedOrder::make(s.order), std::move(tips));
}

/// Transports a point along (t, n) -> (t^op, n^op).
inline Point opposite_point(const QuadraticScheme& s, const QuadraticScheme& s_op,
                            const Point& x) {
  Point out = Point::zero(s_op);
  for (std::size_t id = 0; id < s.dimension(); ++id) {
    const auto& var = s.vars.var(id);
    auto op_id = s_op.var_id(opposite_path(var.tip), opposite_path(var.nontip));
    if (!op_id) throw SchemeError("opposite scheme is missing a reversed coordinate");
    out[*op_id] = x[id];
  }
  return out;
}

/// The tensor-quiver construction: everything needed to treat the tensor of
/// two algebras (given as schemes with concrete points) as a scheme of its
/// own, with its combined rule system realized as the point `point`.
struct TensorScheme {
  QuadraticScheme scheme;
  Point point;
  // factor bookkeeping, in declaration order of the tensor quiver
  std::vector<std::pair<VertexId, VertexId>> vertex_pairs;
  std::size_t left_arrow_count = 0;  // arrows (a, w') precede arrows (v, b')
};

namespace detail {

inline std::string fresh_name(std::unordered_set<std::string>& used, std::string candidate) {
  while (used.count(candidate)) candidate += '\'';
  used.insert(candidate);
  return candidate;
}

}  // namespace detail

/// Builds Q*, the order on it, the combined tips and the combined rule
/// system G* = {(g, w')} u {(v, g')} u C for two schemes at concrete points.
///
/// Arrows of Q* are (a, w') for a in Q1 x w' in Q0' and (v, b') for v in Q0 x
/// b' in Q1'. The order is length-left-lex under the derived precedence: all
/// (v, b') above all (a, w'); among (v, b') by (b' desc, v desc); among
/// (a, w') by (a desc, w' desc). Vertices (u, w') rank by (w' desc, u desc).
/// The commutativity relations (u,b')(a,x') - (a,w')(v,b') have the mixed
/// path with the Q'-arrow first as tip.
inline TensorScheme tensor_scheme(const QuadraticScheme& sa, const Point& xa,
                                  const QuadraticScheme& sb, const Point& xb) {
  const Quiver& qa = sa.quiver;
  const Quiver& qb = sb.quiver;
  TensorScheme out;

  std::unordered_set<std::string> used;
  std::vector<std::string> vertex_names;
  std::vector<std::vector<VertexId>> vpair_id(qa.vertex_count(),
                                              std::vector<VertexId>(qb.vertex_count()));
  for (VertexId u = 0; u < static_cast<VertexId>(qa.vertex_count()); ++u)
    for (VertexId w = 0; w < static_cast<VertexId>(qb.vertex_count()); ++w) {
      vpair_id[u][w] = static_cast<VertexId>(vertex_names.size());
      out.vertex_pairs.emplace_back(u, w);
      vertex_names.push_back(
          detail::fresh_name(used, qa.vertex_name(u) + "_" + qb.vertex_name(w)));
    }

  std::unordered_set<std::string> used_arrows;
  std::vector<Quiver::ArrowDecl> arrows;
  // (a, w'): (u, w') -> (v, w')
  std::vector<std::vector<ArrowId>> left_id(qa.arrow_count(),
                                            std::vector<ArrowId>(qb.vertex_count()));
  for (ArrowId a = 0; a < static_cast<ArrowId>(qa.arrow_count()); ++a)
    for (VertexId w = 0; w < static_cast<VertexId>(qb.vertex_count()); ++w) {
      left_id[a][w] = static_cast<ArrowId>(arrows.size());
      arrows.push_back({detail::fresh_name(used_arrows, qa.arrow(a).name + "_" + qb.vertex_name(w)),
                        vertex_names[vpair_id[qa.arrow(a).src][w]],
                        vertex_names[vpair_id[qa.arrow(a).tgt][w]]});
    }
  // (v, b'): (v, w') -> (v, x')
  std::vector<std::vector<ArrowId>> right_id(qa.vertex_count(),
                                             std::vector<ArrowId>(qb.arrow_count()));
  for (VertexId v = 0; v < static_cast<VertexId>(qa.vertex_count()); ++v)
    for (ArrowId b = 0; b < static_cast<ArrowId>(qb.arrow_count()); ++b) {
      right_id[v][b] = static_cast<ArrowId>(arrows.size());
      arrows.push_back({detail::fresh_name(used_arrows, qa.vertex_name(v) + "_" + qb.arrow(b).name),
                        vertex_names[vpair_id[v][qb.arrow(b).src]],
                        vertex_names[vpair_id[v][qb.arrow(b).tgt]]});
    }
  out.left_arrow_count = qa.arrow_count() * qb.vertex_count();
  Quiver tq = Quiver::make(vertex_names, arrows);

  // Derived precedence. Sorting single-arrow and trivial paths through the
  // factor orders keeps this valid for reversed (opposite) factor orders too.
  auto arrow_less_a = [&](ArrowId x, ArrowId y) {
    return sa.order->less(Path::from_arrows({x}), Path::from_arrows({y}));
  };
  auto arrow_less_b = [&](ArrowId x, ArrowId y) {
    return sb.order->less(Path::from_arrows({x}), Path::from_arrows({y}));
  };
  auto vertex_less_a = [&](VertexId x, VertexId y) {
    return sa.order->less(Path::trivial(x), Path::trivial(y));
  };
  auto vertex_less_b = [&](VertexId x, VertexId y) {
    return sb.order->less(Path::trivial(x), Path::trivial(y));
  };

  std::vector<ArrowId> precedence;  // greatest first
  {
    std::vector<std::pair<ArrowId, VertexId>> rights;  // (b', v)
    for (VertexId v = 0; v < static_cast<VertexId>(qa.vertex_count()); ++v)
      for (ArrowId b = 0; b < static_cast<ArrowId>(qb.arrow_count()); ++b)
        rights.emplace_back(b, v);
    std::sort(rights.begin(), rights.end(), [&](const auto& p, const auto& q) {
      if (p.first != q.first) return arrow_less_b(q.first, p.first);
      return vertex_less_a(q.second, p.second);
    });
    for (const auto& [b, v] : rights) precedence.push_back(right_id[v][b]);

    std::vector<std::pair<ArrowId, VertexId>> lefts;  // (a, w')
    for (ArrowId a = 0; a < static_cast<ArrowId>(qa.arrow_count()); ++a)
      for (VertexId w = 0; w < static_cast<VertexId>(qb.vertex_count()); ++w)
        lefts.emplace_back(a, w);
    std::sort(lefts.begin(), lefts.end(), [&](const auto& p, const auto& q) {
      if (p.first != q.first) return arrow_less_a(q.first, p.first);
      return vertex_less_b(q.second, p.second);
    });
    for (const auto& [a, w] : lefts) precedence.push_back(left_id[a][w]);
  }

  std::vector<VertexId> vertex_precedence;
  {
    std::vector<std::pair<VertexId, VertexId>> vs;  // (u, w')
    for (VertexId u = 0; u < static_cast<VertexId>(qa.vertex_count()); ++u)
      for (VertexId w = 0; w < static_cast<VertexId>(qb.vertex_count()); ++w)
        vs.emplace_back(u, w);
    std::sort(vs.begin(), vs.end(), [&](const auto& p, const auto& q) {
      if (p.second != q.second) return vertex_less_b(q.second, p.second);
      return vertex_less_a(q.first, p.first);
    });
    for (const auto& [u, w] : vs) vertex_precedence.push_back(vpair_id[u][w]);
  }
  auto order = LengthLeftLexOrder::make(tq, std::move(precedence), std::move(vertex_precedence));

  // Combined tips and the coordinates realizing G* as a point.
  auto lift_left = [&](const Path& p, VertexId w) {
    std::vector<ArrowId> ids;
    for (ArrowId a : p.arrows()) ids.push_back(left_id[a][w]);
    return Path::from_arrows(std::move(ids));
  };
  auto lift_right = [&](VertexId v, const Path& p) {
    std::vector<ArrowId> ids;
    for (ArrowId b : p.arrows()) ids.push_back(right_id[v][b]);
    return Path::from_arrows(std::move(ids));
  };

  // The members of G* as elements. For length-left-lex factor orders each one
  // is already tip-monic at the lifted tip; a reversed factor order (the
  // enveloping case) can move the tip elsewhere in the support, so every
  // member is oriented at its actual tip under the combined order.
  std::vector<Element<Rational>> members;
  for (std::size_t i = 0; i < sa.tips.size(); ++i)
    for (VertexId w = 0; w < static_cast<VertexId>(qb.vertex_count()); ++w) {
      Element<Rational> e = Element<Rational>::term(lift_left(sa.tips[i], w), Rational(1));
      for (const auto& n : sa.n2_of[i])
        e.add_term(lift_left(n, w), -xa[*sa.var_id(sa.tips[i], n)]);
      members.push_back(std::move(e));
    }
  for (VertexId v = 0; v < static_cast<VertexId>(qa.vertex_count()); ++v)
    for (std::size_t i = 0; i < sb.tips.size(); ++i) {
      Element<Rational> e = Element<Rational>::term(lift_right(v, sb.tips[i]), Rational(1));
      for (const auto& n : sb.n2_of[i])
        e.add_term(lift_right(v, n), -xb[*sb.var_id(sb.tips[i], n)]);
      members.push_back(std::move(e));
    }
  for (ArrowId a = 0; a < static_cast<ArrowId>(qa.arrow_count()); ++a)
    for (ArrowId b = 0; b < static_cast<ArrowId>(qb.arrow_count()); ++b) {
      VertexId u = qa.arrow(a).src, v = qa.arrow(a).tgt;
      VertexId w = qb.arrow(b).src, x = qb.arrow(b).tgt;
      Element<Rational> e =
          Element<Rational>::term(Path::from_arrows({right_id[u][b], left_id[a][x]}), Rational(1));
      e.add_term(Path::from_arrows({left_id[a][w], right_id[v][b]}), Rational(-1));
      members.push_back(std::move(e));
    }

  std::vector<Path> tips;
  std::vector<std::pair<std::pair<Path, Path>, Rational>> coords;  // ((tip, nontip), value)
  for (const auto& e : members) {
    const Path& t = tip(e, *order);
    const Rational head = *e.coefficient(t);
    for (const auto& [p, c] : e.terms())
      if (!(p == t)) coords.push_back({{t, p}, Rational(-c / head)});
    tips.push_back(t);
  }
  for (std::size_t i = 0; i < tips.size(); ++i)
    for (std::size_t j = i + 1; j < tips.size(); ++j)
      if (tips[i] == tips[j])
        throw SchemeError("tensor basis members share a tip under the combined order");

  out.scheme = build_scheme(std::move(tq), order, std::move(tips));
  out.point = Point::zero(out.scheme);
  for (const auto& [key, value] : coords) {
    auto id = out.scheme.var_id(key.first, key.second);
    if (!id) throw SchemeError("tensor rule coordinate fell outside N2 of its tip");
    out.point[*id] = value;
  }
  return out;
}

/// Lambda tensor Lambda^op for a scheme at a point that passes the
/// Buchberger check.
inline TensorScheme enveloping_scheme(const QuadraticScheme& s, const Point& x) {
  if (!buchberger_check(s, x))
    throw SchemeError("enveloping construction requires a Groebner point");
  QuadraticScheme op = opposite_scheme(s);
  Point xop = opposite_point(s, op, x);
  return tensor_scheme(s, x, op, xop);
}

}  // namespace pathgb
