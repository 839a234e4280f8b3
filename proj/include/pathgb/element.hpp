#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "pathgb/order.hpp"
#include "pathgb/poly.hpp"
#include "pathgb/quiver.hpp"
#include "pathgb/rational.hpp"

namespace pathgb {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace coeff {
inline bool is_zero(const Rational& c) { return c == 0; }
inline bool is_zero(const Poly& c) { return c.is_zero(); }
inline Rational mul(const Rational& a, const Rational& b) { return a * b; }
inline Poly mul(const Poly& a, const Poly& b) { return a * b; }
inline Rational neg(const Rational& a) { return -a; }
inline Poly neg(const Poly& a) { return -a; }

template <class R>
R one();
template <>
inline Rational one<Rational>() {
  return Rational(1);
}
template <>
inline Poly one<Poly>() {
  return Poly::constant(Rational(1));
}
}  // namespace coeff

/// A finite formal R-linear combination of paths of one quiver. Zero
/// coefficients are never stored. Term iteration follows the structural key
/// order, which is stable and independent of any admissible order.
template <class R>
class Element {
 public:
  using TermMap = std::map<Path, R, PathKeyLess>;

  Element() = default;

  static Element zero() { return Element(); }

  static Element term(Path p, R c) {
    Element e;
    e.add_term(std::move(p), std::move(c));
    return e;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(Path p, R c) {
    if (coeff::is_zero(c)) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
      terms_.emplace(std::move(p), std::move(c));
    } else {
      if constexpr (std::is_same_v<R, Rational>)
        it->second += c;
      else
        it->second = it->second + c;
      if (coeff::is_zero(it->second)) terms_.erase(it);
    }
  }

  void add(const Element& other) {
    for (const auto& [p, c] : other.terms_) add_term(p, c);
  }

  const R* coefficient(const Path& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? nullptr : &it->second;
  }

  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

/// The order-greatest support path of a nonzero element.
template <class R>
const Path& tip(const Element<R>& x, const PathOrder& order) {
  if (x.is_zero()) throw AlgebraError("tip of the zero element");
  const Path* best = nullptr;
  for (const auto& [p, c] : x.terms())
    if (!best || order.greater(p, *best)) best = &p;
  return *best;
}

/// True iff all support paths are pairwise parallel (x = vxw for vertices v, w).
template <class R>
bool is_uniform(const Quiver& quiver, const Element<R>& x) {
  if (x.is_zero()) throw AlgebraError("uniformity of the zero element");
  const Path& first = x.terms().begin()->first;
  for (const auto& [p, c] : x.terms())
    if (!quiver.is_parallel(first, p)) return false;
  return true;
}

/// Quadratic rewrite rules g_t = t - rhs_t, keyed by their length-2 tips.
/// Every rhs support path is parallel to and order-smaller than the tip, so
/// rewriting strictly descends in the well-order and always terminates.
template <class R>
class RewriteSystem {
 public:
  struct Rule {
    Path tip;
    Element<R> rhs;
  };

  static RewriteSystem make(const Quiver& quiver, const PathOrder& order,
                            std::vector<Rule> rules) {
    RewriteSystem h;
    for (auto& r : rules) {
      if (r.tip.length() != 2) throw AlgebraError("rewrite tips must have length 2");
      if (!quiver.is_valid_path(r.tip)) throw AlgebraError("rewrite tip is not a path");
      for (const auto& [n, c] : r.rhs.terms()) {
        if (!quiver.is_parallel(r.tip, n))
          throw AlgebraError("rule rhs path not parallel to its tip");
        if (!order.greater(r.tip, n))
          throw AlgebraError("rule rhs path not smaller than its tip");
      }
      auto key = tip_key(r.tip.arrow(0), r.tip.arrow(1));
      if (!h.by_tip_.emplace(key, h.rules_.size()).second)
        throw AlgebraError("duplicate rewrite tip");
      h.rules_.push_back(std::move(r));
    }
    return h;
  }

  std::size_t size() const { return rules_.size(); }
  const std::vector<Rule>& rules() const { return rules_; }

  const Rule* rule_for(ArrowId a, ArrowId b) const {
    auto it = by_tip_.find(tip_key(a, b));
    return it == by_tip_.end() ? nullptr : &rules_[it->second];
  }

  /// Leftmost tip occurrence inside p, or -1 when p contains no tip.
  /// Tips have length 2, so scanning two-arrow windows suffices.
  int first_occurrence(const Path& p) const {
    if (p.length() < 2) return -1;
    for (std::size_t i = 0; i + 1 < p.length(); ++i)
      if (rule_for(p.arrow(i), p.arrow(i + 1))) return static_cast<int>(i);
    return -1;
  }

 private:
  static std::uint64_t tip_key(ArrowId a, ArrowId b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }

  std::vector<Rule> rules_;
  std::unordered_map<std::uint64_t, std::size_t> by_tip_;
};

struct TraceStep {
  Path before;        // the support path that was rewritten
  std::size_t position = 0;  // start of the tip occurrence inside it
  Path rule_tip;
};

using Trace = std::vector<TraceStep>;

namespace detail {

/// Picks the deterministic next reduction site: the order-greatest support
/// path containing a tip, and within it the leftmost occurrence. At a fixed
/// position the window determines the tip, so no further tie-break is needed.
template <class R>
std::optional<std::pair<Path, int>> pick_site(const Element<R>& f, const RewriteSystem<R>& h,
                                              const PathOrder& order) {
  const Path* best = nullptr;
  int best_pos = -1;
  for (const auto& [p, c] : f.terms()) {
    int pos = h.first_occurrence(p);
    if (pos < 0) continue;
    if (!best || order.greater(p, *best)) {
      best = &p;
      best_pos = pos;
    }
  }
  if (!best) return std::nullopt;
  return std::make_pair(*best, best_pos);
}

template <class R>
void apply_site(const Quiver& quiver, Element<R>& f, const RewriteSystem<R>& h, const Path& p,
                int pos) {
  const auto* rule = h.rule_for(p.arrow(static_cast<std::size_t>(pos)),
                                p.arrow(static_cast<std::size_t>(pos) + 1));
  R coeff = *f.coefficient(p);
  f.add_term(p, coeff::neg(coeff));  // remove the term entirely
  Path prefix = p.slice(0, static_cast<std::size_t>(pos), quiver.source(p));
  Path suffix = p.slice(static_cast<std::size_t>(pos) + 2, p.length(), quiver.target(p));
  for (const auto& [n, c] : rule->rhs.terms()) {
    Path mid = *quiver.compose(prefix, n);
    Path np = *quiver.compose(mid, suffix);
    f.add_term(std::move(np), coeff::mul(coeff, c));
  }
}

}  // namespace detail

/// One simple reduction of F by H under the fixed strategy; absent when no
/// support path contains a tip.
template <class R>
std::optional<std::pair<Element<R>, TraceStep>> simple_reduce(const Quiver& quiver,
                                                              const Element<R>& f,
                                                              const RewriteSystem<R>& h,
                                                              const PathOrder& order) {
  auto site = detail::pick_site(f, h, order);
  if (!site) return std::nullopt;
  Element<R> out = f;
  detail::apply_site(quiver, out, h, site->first, site->second);
  TraceStep step;
  step.before = site->first;
  step.position = static_cast<std::size_t>(site->second);
  step.rule_tip = site->first.slice(static_cast<std::size_t>(site->second),
                                    static_cast<std::size_t>(site->second) + 2, 0);
  return std::make_pair(std::move(out), std::move(step));
}

/// Iterates simple reductions until no support path contains a tip. Each step
/// replaces a path by strictly smaller parallel paths, so the well-order
/// guarantees termination. The optional trace records every step.
template <class R>
Element<R> complete_reduce(const Quiver& quiver, Element<R> f, const RewriteSystem<R>& h,
                           const PathOrder& order, Trace* trace = nullptr) {
  while (true) {
    auto site = detail::pick_site(f, h, order);
    if (!site) return f;
    if (trace) {
      TraceStep step;
      step.before = site->first;
      step.position = static_cast<std::size_t>(site->second);
      step.rule_tip = site->first.slice(step.position, step.position + 2, 0);
      trace->push_back(std::move(step));
    }
    detail::apply_site(quiver, f, h, site->first, site->second);
  }
}

/// The unique nontip component of x modulo a rule system that passed the
/// Buchberger check. For arbitrary systems this returns the fixed strategy's
/// normal form, which need not be linear in x.
inline Element<Rational> normal_form(const Quiver& quiver, const Element<Rational>& x,
                                     const RewriteSystem<Rational>& g, const PathOrder& order) {
  return complete_reduce(quiver, x, g, order);
}

}  // namespace pathgb
