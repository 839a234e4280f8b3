#pragma once

#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "pathgb/scheme.hpp"

namespace pathgb {

namespace detail {

/// Runs fn(i) for i in [0, count) on up to `threads` workers and keeps the
/// results indexed, so the merged output is identical for any thread count.
inline void indexed_parallel_for(std::size_t count, unsigned threads,
                                 const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(count));
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (unsigned w = 0; w < n; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += n) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace detail

/// An overlap Ov(t, t') = h_t c - a h_{t'} for tips t = ab, t' = bc sharing
/// the middle arrow. Both ordered pairs are generated when both patterns
/// match, and t = t' = a^2 is allowed.
struct OverlapPair {
  std::size_t t_index = 0;
  std::size_t t2_index = 0;
};

inline std::vector<OverlapPair> overlaps(const QuadraticScheme& s) {
  std::vector<OverlapPair> out;
  for (std::size_t i = 0; i < s.tips.size(); ++i)
    for (std::size_t j = 0; j < s.tips.size(); ++j)
      if (s.tips[i].arrow(1) == s.tips[j].arrow(0)) out.push_back({i, j});
  return out;
}

/// Ov(t,t') as an element over R, built from the rule system: h_t . c - a . h_{t'}.
/// The two copies of the length-3 word abc cancel, leaving rhs terms only.
template <class R>
Element<R> overlap_element(const QuadraticScheme& s, const RewriteSystem<R>& rules,
                           const OverlapPair& ov) {
  const auto& rule_t = rules.rules()[ov.t_index];
  const auto& rule_t2 = rules.rules()[ov.t2_index];
  const Path a = s.tips[ov.t_index].slice(0, 1, 0);
  const Path c = s.tips[ov.t2_index].slice(1, 2, 0);
  Element<R> out;
  out.add_term(*s.quiver.compose(rule_t.tip, c), coeff::one<R>());
  for (const auto& [n, k] : rule_t.rhs.terms())
    out.add_term(*s.quiver.compose(n, c), coeff::neg(k));
  out.add_term(*s.quiver.compose(a, rule_t2.tip), coeff::neg(coeff::one<R>()));
  for (const auto& [n, k] : rule_t2.rhs.terms())
    out.add_term(*s.quiver.compose(a, n), k);
  return out;
}

/// The defining data of the variety ideal: for each overlap, the coefficient
/// polynomials of the length-3 nontips in its complete reduction (raw, as the
/// fixed strategy produces them), plus the normalized deduplicated generator
/// list. No commutative Groebner post-processing is done.
struct VarietyIdeal {
  struct Entry {
    std::size_t t_index = 0;
    std::size_t t2_index = 0;
    Path nhat;        // length-3 nontip
    Poly coefficient; // raw reduced coefficient, nonzero
  };
  std::vector<Entry> entries;
  std::vector<Poly> generators;         // normalized, deduplicated
  std::vector<std::size_t> generator_entry;  // index of the witnessing entry
};

namespace detail {

inline VarietyIdeal collect_ideal(const QuadraticScheme& s, const RewriteSystem<Poly>& rules,
                                  unsigned threads) {
  auto ovs = overlaps(s);
  std::vector<Element<Poly>> reduced(ovs.size());
  indexed_parallel_for(ovs.size(), threads, [&](std::size_t i) {
    auto f = overlap_element(s, rules, ovs[i]);
    reduced[i] = complete_reduce(s.quiver, std::move(f), rules, *s.order);
  });

  VarietyIdeal ideal;
  for (std::size_t i = 0; i < ovs.size(); ++i) {
    // deterministic entry order: (t, t') pair order, then nhat descending
    std::vector<const Path*> support;
    for (const auto& [p, f] : reduced[i].terms()) {
      if (p.length() != 3 || !is_nontip(p, s.tips))
        throw SchemeError("complete reduction left a reducible or non-cubic path");
      support.push_back(&p);
    }
    std::sort(support.begin(), support.end(),
              [&](const Path* a, const Path* b) { return s.order->greater(*a, *b); });
    for (const Path* p : support) {
      VarietyIdeal::Entry e;
      e.t_index = ovs[i].t_index;
      e.t2_index = ovs[i].t2_index;
      e.nhat = *p;
      e.coefficient = *reduced[i].coefficient(*p);
      ideal.entries.push_back(std::move(e));
    }
  }
  for (std::size_t i = 0; i < ideal.entries.size(); ++i) {
    Poly g = normalize(ideal.entries[i].coefficient);
    bool seen = false;
    for (const auto& prev : ideal.generators)
      if (prev == g) {
        seen = true;
        break;
      }
    if (!seen) {
      ideal.generators.push_back(std::move(g));
      ideal.generator_entry.push_back(i);
    }
  }
  return ideal;
}

}  // namespace detail

/// Completely reduces every overlap by the symbolic system H and collects the
/// nonzero coefficient polynomials of the length-3 nontips.
inline VarietyIdeal variety_ideal(const QuadraticScheme& s, unsigned threads = 1) {
  return detail::collect_ideal(s, symbolic_rules(s), threads);
}

/// True iff every generator vanishes at X.
inline bool is_member(const QuadraticScheme& s, const VarietyIdeal& ideal, const Point& x) {
  auto values = x.by_rank(s);
  for (const auto& g : ideal.generators)
    if (g.evaluate(values) != 0) return false;
  return true;
}

struct BuchbergerResult {
  bool groebner = false;
  // first failing overlap and its nonzero residual, when not a Groebner basis
  std::optional<OverlapPair> failed_overlap;
  std::optional<Element<Rational>> certificate;

  explicit operator bool() const { return groebner; }
};

/// The quadratic Buchberger criterion at a point: instantiates G(X) and
/// completely reduces every concrete overlap. All residuals vanish iff G(X)
/// is a Groebner basis, iff X lies on GrAlg(T).
inline BuchbergerResult buchberger_check(const QuadraticScheme& s, const Point& x) {
  auto rules = concrete_rules(s, x);
  BuchbergerResult res;
  for (const auto& ov : overlaps(s)) {
    auto f = overlap_element(s, rules, ov);
    auto residual = complete_reduce(s.quiver, std::move(f), rules, *s.order);
    if (!residual.is_zero()) {
      res.groebner = false;
      res.failed_overlap = ov;
      res.certificate = std::move(residual);
      return res;
    }
  }
  res.groebner = true;
  return res;
}

/// Structural reducedness: no rule's tip occurs as a subpath of another
/// rule's support (tips or right-hand sides).
inline bool is_reduced_system(const Quiver& quiver, const RewriteSystem<Rational>& rules) {
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Path& t = rules.rules()[i].tip;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const auto& r = rules.rules()[j];
      if (i != j && !find_subpath_occurrences(quiver, r.tip, t).empty()) return false;
      for (const auto& [n, c] : r.rhs.terms())
        if (!find_subpath_occurrences(quiver, n, t).empty()) return false;
    }
  }
  return true;
}

/// The result of freezing a subset of coordinates to constants: the ideal of
/// the subvariety in the remaining free variables, plus the distinguished
/// algebra's generators g*_t = t - sum over the explicitly nonzero psi entries.
struct SpecializeResult {
  VarietyIdeal ideal;
  std::vector<std::size_t> free_vars;  // scheme-canonical ids, ascending
  std::vector<Element<Rational>> distinguished;  // g*_t per tip, declaration order
};

inline SpecializeResult specialize(const QuadraticScheme& s, const Specialization& psi,
                                   unsigned threads = 1) {
  SpecializeResult out;
  out.ideal = detail::collect_ideal(s, specialized_rules(s, psi), threads);
  for (std::size_t id = 0; id < s.dimension(); ++id)
    if (!psi.count(id)) out.free_vars.push_back(id);
  for (std::size_t i = 0; i < s.tips.size(); ++i) {
    Element<Rational> g = Element<Rational>::term(s.tips[i], Rational(1));
    for (const auto& n : s.n2_of[i]) {
      auto it = psi.find(*s.var_id(s.tips[i], n));
      if (it != psi.end() && it->second != 0) g.add_term(n, -it->second);
    }
    out.distinguished.push_back(std::move(g));
  }
  return out;
}

}  // namespace pathgb
