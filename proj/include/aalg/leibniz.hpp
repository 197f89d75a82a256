#pragma once

// Filters of a logic on a finite algebra and the Leibniz congruence, both as
// the largest compatible congruence and through equivalence formulas.

#include "aalg/logic.hpp"

namespace aalg {

using Filter = std::set<Element>;

/// F is closed under every axiom and rule of l, at every assignment.
inline bool is_l_filter(const FiniteAlgebra& a, const Filter& f, const LogicPresentation& l) {
  require_same_symbols(a.signature(), l.signature(), "is_l_filter");
  for (Element e : f) {
    if (e >= a.size()) throw Error("filter element " + std::to_string(e) + " outside the carrier of " + a.name());
  }
  return validates(l, Matrix(a, f));
}

/// No block of c meets both F and its complement.
inline bool compatible(const Congruence& c, const Filter& f) {
  for (Element e = 0; e < c.size(); ++e) {
    if (f.contains(e) != f.contains(c.rep(e))) return false;
  }
  return true;
}

/// The largest congruence of A compatible with F.
inline Congruence leibniz(const FiniteAlgebra& a, const Filter& f, Element bound = kDefaultCongruenceBound) {
  Congruence out = Congruence::diagonal(a.size());
  for (const auto& c : all_congruences(a, bound)) {
    if (compatible(c, f)) out = join(a, out, c);
  }
  if (!compatible(out, f)) throw Error("leibniz: join of compatible congruences is not compatible");
  return out;
}

/// rel[x][y] holds when every member of delta at (x, y) lands in F.
using Relation = std::vector<std::vector<bool>>;

inline Relation leibniz_delta(const FiniteAlgebra& a, const Filter& f, std::span<const Formula> delta) {
  Relation rel(a.size(), std::vector<bool>(a.size(), true));
  std::vector<Element> stack;
  for (const auto& d : delta) {
    for (auto v : vars(d)) {
      if (v > 1) throw Error("leibniz_delta: " + to_string(d) + " uses a variable beyond x1");
    }
    CompiledTerm t(a.signature(), d);
    for (Element x = 0; x < a.size(); ++x) {
      for (Element y = 0; y < a.size(); ++y) {
        Element env[] = {x, y};
        if (!f.contains(t.eval(a, env, stack))) rel[x][y] = false;
      }
    }
  }
  return rel;
}

inline Relation to_relation(const Congruence& c) {
  Relation rel(c.size(), std::vector<bool>(c.size(), false));
  for (Element x = 0; x < c.size(); ++x) {
    for (Element y = 0; y < c.size(); ++y) rel[x][y] = c.related(x, y);
  }
  return rel;
}

}  // namespace aalg
