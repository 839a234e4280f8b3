#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pathgb/element.hpp"
#include "pathgb/invariants.hpp"
#include "pathgb/variety.hpp"

namespace pathgb {

using Json = nlohmann::ordered_json;

/// Display names for the coordinate variables: the canonical `y[t|n]` names,
/// or short names substituted in scheme-canonical order (the --rename flag).
class VarNames {
 public:
  explicit VarNames(const QuadraticScheme& scheme) : scheme_(&scheme) {}

  static VarNames renamed(const QuadraticScheme& scheme, std::vector<std::string> names) {
    if (names.size() != scheme.dimension())
      throw SchemeError("rename list must name all " + std::to_string(scheme.dimension()) +
                        " variables");
    VarNames v(scheme);
    v.renamed_ = std::move(names);
    return v;
  }

  const std::string& by_id(std::size_t id) const {
    return renamed_.empty() ? scheme_->vars.var(id).name : renamed_[id];
  }
  const std::string& by_rank(VarRank r) const { return by_id(scheme_->vars.id_of(r)); }

 private:
  const QuadraticScheme* scheme_;
  std::vector<std::string> renamed_;
};

inline std::string render_rational(const Rational& c) { return c.str(); }

/// `c1*m1 + c2*m2 + ...`, canonically greatest monomial first, unit
/// coefficients omitted, powers grouped (`B*C^2 - A*C`).
inline std::string render_poly(const Poly& f, const VarNames& names) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rational a = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += '-';
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    // factors grouped into powers and ordered by display name; the term
    // order itself stays canonical
    std::vector<std::string> factor_names;
    for (VarRank r : m) factor_names.push_back(names.by_rank(r));
    std::sort(factor_names.begin(), factor_names.end());
    std::string mono;
    for (std::size_t i = 0; i < factor_names.size();) {
      std::size_t j = i;
      while (j < factor_names.size() && factor_names[j] == factor_names[i]) ++j;
      if (!mono.empty()) mono += '*';
      mono += factor_names[i];
      if (j - i > 1) mono += '^' + std::to_string(j - i);
      i = j;
    }
    if (mono.empty()) {
      out += render_rational(a);
    } else {
      if (a != 1) out += render_rational(a) + '*';
      out += mono;
    }
  }
  return out;
}

/// Elements render as `c1*p1 + c2*p2` with paths dot-joined, greatest support
/// path first under the scheme's order.
inline std::string render_element(const Quiver& quiver, const Element<Rational>& x,
                                  const PathOrder& order) {
  if (x.is_zero()) return "0";
  std::vector<const Path*> support;
  for (const auto& [p, c] : x.terms()) support.push_back(&p);
  std::sort(support.begin(), support.end(),
            [&](const Path* a, const Path* b) { return order.greater(*a, *b); });
  std::string out;
  bool first = true;
  for (const Path* p : support) {
    const Rational& c = *x.coefficient(*p);
    Rational a = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += '-';
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (a != 1) out += render_rational(a) + '*';
    out += quiver.path_name(*p);
  }
  return out;
}

inline Json poly_to_json(const Poly& f, const VarNames& names) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json term;
    term["coeff"] = render_rational(c);
    std::vector<std::string> factor_names;
    for (VarRank r : m) factor_names.push_back(names.by_rank(r));
    std::sort(factor_names.begin(), factor_names.end());
    Json vars = Json::array();
    for (const auto& n : factor_names) vars.push_back(n);
    term["vars"] = std::move(vars);
    terms.push_back(std::move(term));
  }
  return terms;
}

inline Json ideal_to_json(const QuadraticScheme& s, const VarietyIdeal& ideal,
                          const VarNames& names, const std::string& scheme_name) {
  Json j;
  j["scheme"] = scheme_name;
  Json vars = Json::array();
  for (std::size_t id = 0; id < s.dimension(); ++id) vars.push_back(names.by_id(id));
  j["variables"] = std::move(vars);
  Json gens = Json::array();
  for (std::size_t g = 0; g < ideal.generators.size(); ++g) {
    const auto& e = ideal.entries[ideal.generator_entry[g]];
    Json item;
    item["t"] = s.quiver.path_name(s.tips[e.t_index]);
    item["t2"] = s.quiver.path_name(s.tips[e.t2_index]);
    item["nhat"] = s.quiver.path_name(e.nhat);
    item["poly"] = poly_to_json(ideal.generators[g], names);
    gens.push_back(std::move(item));
  }
  j["generators"] = std::move(gens);
  return j;
}

}  // namespace pathgb
