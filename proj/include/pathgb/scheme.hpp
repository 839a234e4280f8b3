#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pathgb/element.hpp"
#include "pathgb/order.hpp"
#include "pathgb/poly.hpp"
#include "pathgb/quiver.hpp"

namespace pathgb {

class SchemeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// True iff no tip occurs as a subpath of p. Tips have length 2, so only the
/// two-arrow windows of p can match; vertices and arrows are always nontips.
inline bool is_nontip(const Path& p, const std::vector<Path>& tips) {
  if (p.length() < 2) return true;
  for (std::size_t i = 0; i + 1 < p.length(); ++i)
    for (const auto& t : tips)
      if (t.arrow(0) == p.arrow(i) && t.arrow(1) == p.arrow(i + 1)) return false;
  return true;
}

/// A quiver with a length-admissible order and a tip set T of length-2 paths,
/// together with the derived data of the variety GrAlg(T): the length-2
/// nontips, each N2(t), and the coordinate universe {y_{t,n}} of dimension D.
class QuadraticScheme {
 public:
  Quiver quiver;
  PathOrderPtr order;
  std::vector<Path> tips;                  // declaration order
  std::vector<Path> nontips2;              // all length-2 nontips
  std::vector<std::vector<Path>> n2_of;    // per tip, descending in the order
  VarTable vars;                           // scheme-canonical variable universe

  std::size_t dimension() const { return vars.size(); }

  int tip_index(const Path& t) const {
    for (std::size_t i = 0; i < tips.size(); ++i)
      if (tips[i] == t) return static_cast<int>(i);
    return -1;
  }

  /// Variable id for the coordinate (t, n); absent if n is not in N2(t).
  std::optional<std::size_t> var_id(const Path& t, const Path& n) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars.var(i).tip == t && vars.var(i).nontip == n) return i;
    return std::nullopt;
  }
};

/// Derives N2, each N2(t) and the variable universe from (quiver, order, T).
/// Variables are ordered by tip declaration order, then nontips descending.
inline QuadraticScheme build_scheme(Quiver quiver, PathOrderPtr order, std::vector<Path> tips) {
  QuadraticScheme s;
  for (const auto& t : tips) {
    if (t.length() != 2) throw SchemeError("tips must be paths of length 2");
    if (!quiver.is_valid_path(t)) throw SchemeError("tip is not a path of the quiver");
  }
  for (std::size_t i = 0; i < tips.size(); ++i)
    for (std::size_t j = i + 1; j < tips.size(); ++j)
      if (tips[i] == tips[j]) throw SchemeError("duplicate tip");

  // all length-2 paths, in arrow-id order for determinism
  std::vector<Path> len2;
  for (ArrowId a = 0; a < static_cast<ArrowId>(quiver.arrow_count()); ++a)
    for (ArrowId b = 0; b < static_cast<ArrowId>(quiver.arrow_count()); ++b)
      if (quiver.arrow(a).tgt == quiver.arrow(b).src)
        len2.push_back(Path::from_arrows({a, b}));

  for (const auto& p : len2)
    if (is_nontip(p, tips)) s.nontips2.push_back(p);

  std::vector<std::pair<Path, Path>> var_pairs;
  for (const auto& t : tips) {
    std::vector<Path> n2t;
    for (const auto& n : s.nontips2)
      if (quiver.is_parallel(t, n) && order->greater(t, n)) n2t.push_back(n);
    std::sort(n2t.begin(), n2t.end(),
              [&](const Path& a, const Path& b) { return order->greater(a, b); });
    for (const auto& n : n2t) var_pairs.emplace_back(t, n);
    s.n2_of.push_back(std::move(n2t));
  }
  s.vars = VarTable::make(quiver, std::move(var_pairs));
  s.quiver = std::move(quiver);
  s.order = std::move(order);
  s.tips = std::move(tips);
  return s;
}

/// A total assignment CoeffVar -> Rational, indexed by scheme-canonical
/// variable id; the reduction machinery consumes it re-indexed by name rank.
class Point {
 public:
  Point() = default;

  static Point zero(const QuadraticScheme& s) {
    Point x;
    x.by_id_.assign(s.dimension(), Rational(0));
    return x;
  }

  static Point from_map(const QuadraticScheme& s, const std::map<std::size_t, Rational>& values) {
    Point x = zero(s);
    for (const auto& [id, v] : values) {
      if (id >= s.dimension()) throw SchemeError("point coordinate outside the variable universe");
      x.by_id_[id] = v;
    }
    return x;
  }

  std::size_t size() const { return by_id_.size(); }
  const Rational& operator[](std::size_t id) const { return by_id_[id]; }
  Rational& operator[](std::size_t id) { return by_id_[id]; }

  std::vector<Rational> by_rank(const QuadraticScheme& s) const {
    if (by_id_.size() != s.dimension())
      throw SchemeError("point does not match the scheme's variable universe");
    std::vector<Rational> out(by_id_.size());
    for (std::size_t id = 0; id < by_id_.size(); ++id)
      out[static_cast<std::size_t>(s.vars.rank_of(id))] = by_id_[id];
    return out;
  }

 private:
  std::vector<Rational> by_id_;
};

/// A partial assignment psi on a subset of the coordinates.
using Specialization = std::map<std::size_t, Rational>;

/// The symbolic rule system H = {h_t = t - sum y_{t,n} n} over K[y].
inline RewriteSystem<Poly> symbolic_rules(const QuadraticScheme& s) {
  std::vector<RewriteSystem<Poly>::Rule> rules;
  for (std::size_t i = 0; i < s.tips.size(); ++i) {
    RewriteSystem<Poly>::Rule r;
    r.tip = s.tips[i];
    for (const auto& n : s.n2_of[i]) {
      auto id = s.var_id(s.tips[i], n);
      r.rhs.add_term(n, Poly::variable(s.vars.rank_of(*id)));
    }
    rules.push_back(std::move(r));
  }
  return RewriteSystem<Poly>::make(s.quiver, *s.order, std::move(rules));
}

/// H with the coordinates in psi frozen to constants; variables elsewhere.
inline RewriteSystem<Poly> specialized_rules(const QuadraticScheme& s, const Specialization& psi) {
  for (const auto& [id, v] : psi)
    if (id >= s.dimension()) throw SchemeError("specialization outside the variable universe");
  std::vector<RewriteSystem<Poly>::Rule> rules;
  for (std::size_t i = 0; i < s.tips.size(); ++i) {
    RewriteSystem<Poly>::Rule r;
    r.tip = s.tips[i];
    for (const auto& n : s.n2_of[i]) {
      auto id = s.var_id(s.tips[i], n);
      auto it = psi.find(*id);
      if (it == psi.end())
        r.rhs.add_term(n, Poly::variable(s.vars.rank_of(*id)));
      else
        r.rhs.add_term(n, Poly::constant(it->second));
    }
    rules.push_back(std::move(r));
  }
  return RewriteSystem<Poly>::make(s.quiver, *s.order, std::move(rules));
}

/// The concrete system G(X) = {t - sum x_{t,n} n}.
inline RewriteSystem<Rational> concrete_rules(const QuadraticScheme& s, const Point& x) {
  if (x.size() != s.dimension())
    throw SchemeError("point does not match the scheme's variable universe");
  std::vector<RewriteSystem<Rational>::Rule> rules;
  for (std::size_t i = 0; i < s.tips.size(); ++i) {
    RewriteSystem<Rational>::Rule r;
    r.tip = s.tips[i];
    for (const auto& n : s.n2_of[i]) {
      auto id = s.var_id(s.tips[i], n);
      r.rhs.add_term(n, x[*id]);
    }
    rules.push_back(std::move(r));
  }
  return RewriteSystem<Rational>::make(s.quiver, *s.order, std::move(rules));
}

}  // namespace pathgb
