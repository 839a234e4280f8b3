#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pathgb/quiver.hpp"
#include "pathgb/rational.hpp"

namespace pathgb {

class PolyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Variables are indexed two ways: by scheme-canonical id (tip declaration
/// order, then nontips descending in the path order) and by name rank (the
/// position of the canonical name `y[t|n]` in ascending string order). Poly
/// stores name ranks so its canonical monomial order needs no table.
using VarRank = std::int32_t;

struct CoeffVar {
  Path tip;      // length 2, in T
  Path nontip;   // length 2, in N2(tip)
  std::string name;
};

class VarTable {
 public:
  VarTable() = default;

  static VarTable make(const Quiver& quiver, std::vector<std::pair<Path, Path>> pairs) {
    VarTable t;
    for (auto& [tip, nontip] : pairs) {
      CoeffVar v;
      v.name = "y[" + quiver.path_name(tip) + "|" + quiver.path_name(nontip) + "]";
      v.tip = std::move(tip);
      v.nontip = std::move(nontip);
      t.vars_.push_back(std::move(v));
    }
    std::vector<std::size_t> by_name(t.vars_.size());
    for (std::size_t i = 0; i < by_name.size(); ++i) by_name[i] = i;
    std::sort(by_name.begin(), by_name.end(), [&](std::size_t a, std::size_t b) {
      return t.vars_[a].name < t.vars_[b].name;
    });
    t.rank_to_id_.resize(t.vars_.size());
    t.id_to_rank_.resize(t.vars_.size());
    for (std::size_t r = 0; r < by_name.size(); ++r) {
      t.rank_to_id_[r] = static_cast<int>(by_name[r]);
      t.id_to_rank_[by_name[r]] = static_cast<VarRank>(r);
    }
    for (std::size_t i = 0; i < t.vars_.size(); ++i) t.name_to_id_.emplace(t.vars_[i].name, i);
    return t;
  }

  std::size_t size() const { return vars_.size(); }
  const CoeffVar& var(std::size_t id) const { return vars_[id]; }
  VarRank rank_of(std::size_t id) const { return id_to_rank_[id]; }
  std::size_t id_of(VarRank rank) const {
    return static_cast<std::size_t>(rank_to_id_[static_cast<std::size_t>(rank)]);
  }
  const std::string& name_of_rank(VarRank rank) const { return vars_[id_of(rank)].name; }

 private:
  std::vector<CoeffVar> vars_;
  std::vector<int> rank_to_id_;
  std::vector<VarRank> id_to_rank_;
  std::unordered_map<std::string, std::size_t> name_to_id_;
};

/// A monomial is the multiset of its variables, kept sorted ascending by
/// name rank. The canonical monomial order is graded, then lexicographic on
/// that sequence (greater name at the first difference wins).
using Monomial = std::vector<VarRank>;

inline std::strong_ordering mono_compare(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return mono_compare(a, b) < 0; }
};

/// Sparse multivariate polynomial over the rationals. Terms are kept sorted
/// with the canonically greatest monomial first and never store zero
/// coefficients.
class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;

  static Poly zero() { return Poly(); }

  static Poly constant(Rational c) {
    Poly f;
    if (c != 0) f.terms_.emplace_back(Monomial{}, std::move(c));
    return f;
  }

  static Poly variable(VarRank rank) {
    Poly f;
    f.terms_.emplace_back(Monomial{rank}, Rational(1));
    return f;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.empty());
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.front().first.size());
  }

  const Term& head() const {
    if (terms_.empty()) throw PolyError("zero polynomial has no head term");
    return terms_.front();
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly out;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && mono_compare(ia->first, ib->first) > 0)) {
        out.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || mono_compare(ia->first, ib->first) < 0) {
        out.terms_.push_back(*ib++);
      } else {
        Rational c = ia->second + ib->second;
        if (c != 0) out.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    return out;
  }

  friend Poly operator-(const Poly& a) {
    Poly out = a;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    std::map<Monomial, Rational, MonoLess> acc;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m;
        m.reserve(ma.size() + mb.size());
        std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
        auto [it, inserted] = acc.emplace(std::move(m), ca * cb);
        if (!inserted) {
          it->second += ca * cb;
          if (it->second == 0) acc.erase(it);
        }
      }
    }
    Poly out;
    out.terms_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
      out.terms_.emplace_back(it->first, it->second);
    return out;
  }

  Poly scaled(const Rational& c) const {
    if (c == 0) return Poly();
    Poly out = *this;
    for (auto& [m, k] : out.terms_) k *= c;
    return out;
  }

  /// Evaluation at a total point, indexed by name rank.
  /// Every variable appearing in the polynomial must be assigned.
  Rational evaluate(std::span<const Rational> values_by_rank) const {
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (VarRank r : m) {
        if (static_cast<std::size_t>(r) >= values_by_rank.size())
          throw PolyError("unbound variable");
        t *= values_by_rank[static_cast<std::size_t>(r)];
      }
      sum += t;
    }
    return sum;
  }

  /// Partial substitution: ranks with assigned.count(rank) become constants.
  Poly substituted(const std::unordered_map<VarRank, Rational>& assigned) const {
    Poly out;
    std::map<Monomial, Rational, MonoLess> acc;
    for (const auto& [m, c] : terms_) {
      Rational coeff = c;
      Monomial rest;
      for (VarRank r : m) {
        auto it = assigned.find(r);
        if (it == assigned.end())
          rest.push_back(r);
        else
          coeff *= it->second;
      }
      if (coeff == 0) continue;
      auto it = acc.find(rest);
      if (it == acc.end()) {
        acc.emplace(std::move(rest), std::move(coeff));
      } else {
        it->second += coeff;
        if (it->second == 0) acc.erase(it);
      }
    }
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
      out.terms_.emplace_back(it->first, it->second);
    return out;
  }

 private:
  std::vector<Term> terms_;  // descending canonical order, no zero coefficients
};

/// Divides f by the content of its coefficients and fixes the sign so the
/// canonically greatest monomial has positive coefficient. Rejects zero.
inline Poly normalize(const Poly& f) {
  if (f.is_zero()) throw PolyError("cannot normalize the zero polynomial");
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (const auto& [m, c] : f.terms()) {
    num_gcd = gcd(num_gcd, BigInt(abs(numerator(c))));
    den_lcm = lcm(den_lcm, BigInt(denominator(c)));
  }
  Rational content(num_gcd, den_lcm);
  if (f.head().second < 0) content = -content;
  return f.scaled(Rational(1) / content);
}

}  // namespace pathgb
