#pragma once

// Algebraizing pairs: the five-condition battery, the quasivariety
// axiomatizer, preservation of pairs by morphisms, Lindenbaum
// algebraizability, density and the approximation relation between
// morphisms.

#include "aalg/consequence.hpp"

namespace aalg {

/// Equivalence formulas delta(x0, x1) and defining equations tau(x0).
struct AlgebraizingPair {
  std::string name;
  std::vector<Formula> delta;
  std::vector<Equation> tau;

  friend bool operator==(const AlgebraizingPair& a, const AlgebraizingPair& b) {
    return a.delta == b.delta && a.tau == b.tau;
  }
};

inline void validate_pair(const Signature& sig, const AlgebraizingPair& p) {
  if (p.delta.empty() || p.tau.empty()) throw Error("pair " + p.name + ": delta and tau must be nonempty");
  for (const auto& d : p.delta) {
    require_over(sig, d);
    for (auto v : vars(d)) {
      if (v > 1) throw Error("pair " + p.name + ": delta member " + to_string(d) + " uses a variable beyond x1");
    }
  }
  for (const auto& e : p.tau) {
    require_over(sig, e.lhs);
    require_over(sig, e.rhs);
    std::set<VarIndex> vs = vars(e.lhs);
    collect_vars(e.rhs, vs);
    for (auto v : vs) {
      if (v > 0) throw Error("pair " + p.name + ": tau member " + to_string(e) + " uses a variable beyond x0");
    }
  }
}

/// A presentation with its pair, oracle matrices and known finite members of
/// the equivalent quasivariety.
struct AlgebraizableLogic {
  LogicPresentation logic;
  AlgebraizingPair pair;
  OracleSet oracles;
  std::vector<FiniteAlgebra> members;

  AlgebraizableLogic() = default;
  AlgebraizableLogic(LogicPresentation l, AlgebraizingPair p, OracleSet o = {}, std::vector<FiniteAlgebra> m = {})
      : logic(std::move(l)), pair(std::move(p)), oracles(std::move(o)), members(std::move(m)) {
    validate_pair(logic.signature(), pair);
    require_valid_oracles(logic, oracles);
    for (const auto& a : members) require_same_symbols(logic.signature(), a.signature(), "quasivariety member");
  }

  const std::string& name() const { return pair.name; }
  const Signature& signature() const { return logic.signature(); }
  const OracleSet* oracle_ptr() const { return oracles.empty() ? nullptr : &oracles; }
};

/// delta(phi, psi), one formula per member.
inline std::vector<Formula> delta_of(const AlgebraizingPair& p, const Formula& phi, const Formula& psi) {
  std::vector<Formula> out;
  Substitution s{{0, phi}, {1, psi}};
  for (const auto& d : p.delta) out.push_back(subst(d, s));
  return out;
}

/// tau(phi), one equation per member.
inline std::vector<Equation> tau_of(const AlgebraizingPair& p, const Formula& phi) {
  std::vector<Equation> out;
  Substitution s{{0, phi}};
  for (const auto& e : p.tau) out.push_back({subst(e.lhs, s), subst(e.rhs, s)});
  return out;
}

/// tau applied to every member of gamma.
inline std::vector<Equation> tau_of(const AlgebraizingPair& p, std::span<const Formula> gamma) {
  std::vector<Equation> out;
  for (const auto& g : gamma) {
    auto t = tau_of(p, g);
    out.insert(out.end(), t.begin(), t.end());
  }
  return out;
}

namespace detail {

/// gamma |- every member of goals
inline Verdict derive_all(const std::string& claim, const LogicPresentation& l, std::span<const Formula> gamma,
                          std::span<const Formula> goals, const Budget& b, const OracleSet* o) {
  std::vector<Verdict> parts;
  for (const auto& g : goals) parts.push_back(derive(l, gamma, g, b, o));
  return all_of(claim, std::move(parts));
}

}  // namespace detail

/// The five conditions characterizing an algebraizing pair, each checked on
/// fresh variables: (a) reflexivity, (b) symmetry, (c) transitivity,
/// (d) compatibility with every connective, (e) x0 -||- delta(tau(x0)).
inline Verdict check_pair(const LogicPresentation& l, const AlgebraizingPair& p, const Budget& b,
                          const OracleSet* o = nullptr) {
  validate_pair(l.signature(), p);
  const Formula x0 = Formula::var(0), x1 = Formula::var(1), x2 = Formula::var(2);
  std::vector<Verdict> conds;

  conds.push_back(detail::derive_all("(a) |- x0 D x0", l, {}, delta_of(p, x0, x0), b, o));

  auto d01 = delta_of(p, x0, x1);
  conds.push_back(detail::derive_all("(b) x0 D x1 |- x1 D x0", l, d01, delta_of(p, x1, x0), b, o));

  auto trans = d01;
  for (const auto& f : delta_of(p, x1, x2)) trans.push_back(f);
  conds.push_back(detail::derive_all("(c) x0 D x1, x1 D x2 |- x0 D x2", l, trans, delta_of(p, x0, x2), b, o));

  std::vector<Verdict> per_connective;
  for (const auto& c : l.signature().symbols()) {
    std::vector<Formula> prem, left, right;
    for (unsigned i = 0; i < c.arity; ++i) {
      for (const auto& f : delta_of(p, Formula::var(i), Formula::var(c.arity + i))) prem.push_back(f);
      left.push_back(Formula::var(i));
      right.push_back(Formula::var(c.arity + i));
    }
    auto goals = delta_of(p, Formula::app(c.name, left), Formula::app(c.name, right));
    per_connective.push_back(detail::derive_all("compatibility with " + c.name, l, prem, goals, b, o));
  }
  conds.push_back(all_of("(d) D is compatible with every connective", std::move(per_connective)));

  std::vector<Formula> back;
  for (const auto& e : p.tau) {
    for (const auto& f : delta_of(p, e.lhs, e.rhs)) back.push_back(f);
  }
  std::vector<Verdict> e_parts;
  std::vector<Formula> just_x0{x0};
  e_parts.push_back(detail::derive_all("x0 |- D(tau(x0))", l, just_x0, back, b, o));
  e_parts.push_back(derive(l, back, x0, b, o));
  conds.push_back(all_of("(e) x0 -||- D(tau(x0))", std::move(e_parts)));

  return all_of(p.name + " algebraizes " + l.name(), std::move(conds));
}

/// Quasi-identities with the role of each one.
struct AxiomSet {
  std::string name;
  Signature signature;
  std::vector<QuasiIdentity> laws;
  std::vector<std::string> origins;
};

/// Quasi-identities axiomatizing the equivalent quasivariety: tau applied to
/// delta(x0, x0), the implication from tau(delta(x0, x1)) to x0 = x1, and
/// the translation of each axiom and rule of the presentation.
inline AxiomSet axiomatize(const LogicPresentation& l, const AlgebraizingPair& p) {
  validate_pair(l.signature(), p);
  const Formula x0 = Formula::var(0), x1 = Formula::var(1);
  AxiomSet out{"QV(" + p.name + ")", l.signature(), {}, {}};
  for (const auto& d : delta_of(p, x0, x0)) {
    for (const auto& e : tau_of(p, d)) {
      out.laws.push_back({{}, e});
      out.origins.push_back("reflexivity");
    }
  }
  std::vector<Equation> prem;
  for (const auto& d : delta_of(p, x0, x1)) {
    for (const auto& e : tau_of(p, d)) prem.push_back(e);
  }
  out.laws.push_back({prem, {x0, x1}});
  out.origins.push_back("equivalence");
  for (std::size_t i = 0; i < l.axioms().size(); ++i) {
    for (const auto& e : tau_of(p, l.axioms()[i])) {
      out.laws.push_back({{}, e});
      out.origins.push_back("axiom " + std::to_string(i + 1));
    }
  }
  for (std::size_t i = 0; i < l.rules().size(); ++i) {
    const auto& r = l.rules()[i];
    auto pe = tau_of(p, r.premises);
    for (const auto& e : tau_of(p, r.conclusion)) {
      out.laws.push_back({pe, e});
      out.origins.push_back("rule " + std::to_string(i + 1));
    }
  }
  return out;
}

inline AxiomSet axiomatize(const AlgebraizableLogic& a) { return axiomatize(a.logic, a.pair); }

/// First law of K that fails in A, with its failing assignment.
inline std::optional<std::pair<std::size_t, Assignment>> first_failure(const FiniteAlgebra& a, const AxiomSet& k) {
  require_same_symbols(a.signature(), k.signature, "quasivariety membership");
  for (std::size_t i = 0; i < k.laws.size(); ++i) {
    if (auto w = find_violation(a, k.laws[i])) return std::make_pair(i, *w);
  }
  return std::nullopt;
}

inline bool in_quasivariety(const FiniteAlgebra& a, const AxiomSet& k) { return !first_failure(a, k); }

namespace detail {

inline Verdict equational_equivalence(const std::string& claim, std::span<const FiniteAlgebra> k,
                                      const std::vector<Equation>& lhs, const std::vector<Equation>& rhs) {
  if (k.empty()) return Verdict::make(Status::unknown, claim, "no quasivariety members to check against");
  auto entail = [&](const std::vector<Equation>& from, const std::vector<Equation>& to) -> std::optional<Verdict> {
    for (const auto& e : to) {
      if (auto w = eq_counterexample(k, from, e)) {
        AlgebraWitness ev{"equation fails in a quasivariety member", {k[w->algebra]}, {}, QuasiIdentity{from, e},
                          w->assignment};
        return Verdict::make(Status::refuted, claim, to_string(e) + " fails in " + k[w->algebra].name(), std::move(ev));
      }
    }
    return std::nullopt;
  };
  if (auto v = entail(lhs, rhs)) return *v;
  if (auto v = entail(rhs, lhs)) return *v;
  return Verdict::make(Status::proved, claim,
                       "equivalent in all " + std::to_string(k.size()) + " listed quasivariety members");
}

}  // namespace detail

/// h maps the pair of `a` onto the pair of `a2`, up to interderivability of
/// the equivalence formulas and equational equivalence of the defining
/// equations.
inline Verdict preserves_pair(const FlexibleMorphism& h, const AlgebraizableLogic& a, const AlgebraizableLogic& a2,
                              const Budget& b) {
  require_same_symbols(h.source(), a.signature(), "preserves_pair source");
  require_same_symbols(h.target(), a2.signature(), "preserves_pair target");
  const Formula x0 = Formula::var(0), x1 = Formula::var(1);
  std::vector<Formula> hd;
  for (const auto& d : a.pair.delta) hd.push_back(flex_extend(h, d));
  auto d2 = delta_of(a2.pair, x0, x1);
  std::vector<Verdict> parts;
  parts.push_back(detail::derive_all("h(D) |- D'", a2.logic, hd, d2, b, a2.oracle_ptr()));
  parts.push_back(detail::derive_all("D' |- h(D)", a2.logic, d2, hd, b, a2.oracle_ptr()));
  std::vector<Equation> ht;
  for (const auto& e : a.pair.tau) ht.push_back({flex_extend(h, e.lhs), flex_extend(h, e.rhs)});
  parts.push_back(detail::equational_equivalence("h(tau) =||= tau'", a2.members, ht, a2.pair.tau));
  return all_of(h.name() + " preserves " + a.name() + " into " + a2.name(), std::move(parts));
}

/// Algebraizable with interderivability a congruence.
inline Verdict is_lindenbaum(const AlgebraizableLogic& a, const Budget& b) {
  std::vector<Verdict> parts;
  parts.push_back(check_pair(a.logic, a.pair, b, a.oracle_ptr()));
  parts.push_back(is_congruential(a.logic, b, a.oracle_ptr()));
  return all_of(a.name() + " is Lindenbaum algebraizable", std::move(parts));
}

namespace detail {

/// Classes of the relation {(a, b) : every member of D at (a, b) is
/// designated} on each oracle matrix, when it is an equivalence.
struct DeltaClasses {
  std::vector<std::vector<Element>> cls;  // per matrix: element -> least related element
  bool valid = false;
};

inline DeltaClasses delta_classes(const AlgebraizableLogic& a2) {
  DeltaClasses out;
  if (!a2.oracles.complete || a2.oracles.empty()) return out;
  for (const auto& m : a2.oracles.matrices) {
    const Element k = m.algebra.size();
    std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, true));
    for (const auto& d : a2.pair.delta) {
      for (Element x = 0; x < k; ++x) {
        for (Element y = 0; y < k; ++y) {
          Element env[] = {x, y};
          rel[x][y] = rel[x][y] && m.designates(eval(m.algebra, d, std::span<const Element>(env)));
        }
      }
    }
    std::vector<Element> c(k);
    for (Element x = 0; x < k; ++x) {
      if (!rel[x][x]) return out;
      for (Element y = 0; y < k; ++y) {
        if (rel[x][y] != rel[y][x]) return out;
        for (Element z = 0; z < k; ++z) {
          if (rel[x][y] && rel[y][z] && !rel[x][z]) return out;
        }
      }
      c[x] = x;
      for (Element y = 0; y < x; ++y) {
        if (rel[x][y]) {
          c[x] = c[y];
          break;
        }
      }
    }
    out.cls.push_back(std::move(c));
  }
  out.valid = true;
  return out;
}

/// Class labels of phi's values under every assignment of x0..x_{n-1} in
/// every oracle matrix.
inline std::vector<Element> semantic_key(const AlgebraizableLogic& a2, const DeltaClasses& dc, const Formula& phi,
                                         unsigned n) {
  std::vector<Element> key;
  std::set<VarIndex> vs;
  for (VarIndex v = 0; v < n; ++v) vs.insert(v);
  std::vector<Element> stack;
  for (std::size_t i = 0; i < a2.oracles.matrices.size(); ++i) {
    const auto& m = a2.oracles.matrices[i];
    CompiledTerm t(m.algebra.signature(), phi);
    for_each_assignment(m.algebra.size(), vs, [&](std::span<const Element> env) {
      key.push_back(dc.cls[i][t.eval(m.algebra, env, stack)]);
      return true;
    });
  }
  return key;
}

struct KeyHash {
  std::size_t operator()(const std::vector<Element>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Element e : v) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

}  // namespace detail

struct DensityResult {
  Verdict verdict;
  /// (target formula, source witness) in target enumeration order
  std::vector<std::pair<Formula, Formula>> witnesses;
};

/// Finds source witnesses among `sources` for each of `targets`.
class DensitySearch {
public:
  DensitySearch(const FlexibleMorphism& h, const AlgebraizableLogic& a2, unsigned arity, const Budget& b,
                std::vector<Formula> sources)
      : h_(h), a2_(a2), arity_(arity), b_(b), sources_(std::move(sources)), dc_(detail::delta_classes(a2)) {
    require_same_symbols(h.target(), a2.signature(), "density target");
    images_.reserve(sources_.size());
    for (const auto& s : sources_) images_.push_back(flex_extend(h_, s));
    if (dc_.valid) {
      for (std::size_t i = 0; i < sources_.size(); ++i) {
        by_key_[detail::semantic_key(a2_, dc_, images_[i], arity_)].push_back(i);
      }
    }
  }

  bool keyed() const { return dc_.valid; }

  /// Proved with the witness in `found`, Refuted when the oracle is complete
  /// and no source matches, Unknown otherwise.
  Status find(const Formula& target, std::optional<Formula>& found, std::size_t max_attempts = 64) {
    const Formula x0 = Formula::var(0);
    auto try_source = [&](std::size_t i) {
      auto goals = delta_of(a2_.pair, images_[i], target);
      for (const auto& g : goals) {
        if (!derive(a2_.logic, {}, g, b_, a2_.oracle_ptr()).proved()) return false;
      }
      found = sources_[i];
      return true;
    };
    if (dc_.valid) {
      auto it = by_key_.find(detail::semantic_key(a2_, dc_, target, arity_));
      if (it == by_key_.end()) return Status::refuted;
      for (auto i : it->second) {
        if (try_source(i)) return Status::proved;
      }
      return Status::refuted;
    }
    std::size_t attempts = 0;
    for (std::size_t i = 0; i < sources_.size() && attempts < max_attempts; ++i, ++attempts) {
      if (try_source(i)) return Status::proved;
    }
    return Status::unknown;
  }

private:
  const FlexibleMorphism& h_;
  const AlgebraizableLogic& a2_;
  unsigned arity_;
  Budget b_;
  std::vector<Formula> sources_;
  std::vector<Formula> images_;
  detail::DeltaClasses dc_;
  std::unordered_map<std::vector<Element>, std::vector<std::size_t>, detail::KeyHash> by_key_;
};

inline constexpr std::size_t kDensityFormulaLimit = 200000;

/// Every target formula over x0..x_{arity-1} up to the budget depth is
/// D'-equivalent to the translation of some source formula.
inline DensityResult delta_dense(const FlexibleMorphism& h, const AlgebraizableLogic& a2, unsigned arity,
                                 const Budget& b) {
  const std::string claim = h.name() + " is D-dense into " + a2.name() + " at arity " + std::to_string(arity) +
                            ", depth " + std::to_string(b.max_depth);
  DensityResult out;
  std::vector<Formula> sources, targets;
  try {
    sources = enumerate_formulas(h.source(), arity, b.max_depth, kDensityFormulaLimit);
    targets = enumerate_formulas(h.target(), arity, b.max_depth, kDensityFormulaLimit);
  } catch (const Error& e) {
    out.verdict = Verdict::make(Status::unknown, claim, e.what());
    return out;
  }
  DensitySearch search(h, a2, arity, b, std::move(sources));
  for (const auto& t : targets) {
    std::optional<Formula> w;
    Status s = search.find(t, w);
    if (s == Status::proved) {
      out.witnesses.emplace_back(t, *w);
      continue;
    }
    if (s == Status::refuted) {
      out.verdict = Verdict::make(Status::refuted, claim,
                                  "no source formula up to depth " + std::to_string(b.max_depth) +
                                      " is D-equivalent to " + to_string(t) + " under the complete oracle",
                                  FormulaWitness{t, std::nullopt, std::nullopt});
    } else {
      out.verdict = Verdict::make(Status::unknown, claim, "no witness found for " + to_string(t));
    }
    return out;
  }
  out.verdict = Verdict::make(Status::proved, claim, std::to_string(out.witnesses.size()) + " targets witnessed");
  return out;
}

/// For each target connective c of arity n, a source formula phi over
/// x0..x_{n-1} with |- h(phi) D' c(x0, ..., x_{n-1}). Sources are searched by
/// increasing depth up to the budget depth.
inline std::optional<std::map<std::string, Formula>> connective_witnesses(const FlexibleMorphism& h,
                                                                          const AlgebraizableLogic& a2,
                                                                          const Budget& b) {
  std::map<std::string, Formula> out;
  std::map<std::pair<unsigned, unsigned>, std::unique_ptr<DensitySearch>> searches;
  for (const auto& c : h.target().symbols()) {
    std::vector<Formula> args;
    for (unsigned i = 0; i < c.arity; ++i) args.push_back(Formula::var(i));
    const Formula target = Formula::app(c.name, std::move(args));
    std::optional<Formula> w;
    for (unsigned d = 0; d <= b.max_depth && !w; ++d) {
      auto& s = searches[{c.arity, d}];
      if (!s) {
        std::vector<Formula> sources;
        try {
          sources = enumerate_formulas(h.source(), c.arity, d, kDensityFormulaLimit);
        } catch (const Error&) {
          break;
        }
        s = std::make_unique<DensitySearch>(h, a2, c.arity, b, std::move(sources));
      }
      s->find(target, w);
    }
    if (!w) return std::nullopt;
    out.emplace(c.name, *w);
  }
  return out;
}

/// g0 and g1 agree up to D' on every source connective.
inline Verdict approx_equiv(const FlexibleMorphism& g0, const FlexibleMorphism& g1, const AlgebraizableLogic& a2,
                            const Budget& b) {
  require_same_symbols(g0.source(), g1.source(), "approx_equiv sources");
  require_same_symbols(g0.target(), g1.target(), "approx_equiv targets");
  require_same_symbols(g0.target(), a2.signature(), "approx_equiv logic");
  std::vector<Verdict> parts;
  for (const auto& c : g0.source().symbols()) {
    parts.push_back(detail::derive_all("on " + c.name, a2.logic, {}, delta_of(a2.pair, g0.image(c.name), g1.image(c.name)),
                                       b, a2.oracle_ptr()));
  }
  return all_of(g0.name() + " ~ " + g1.name() + " in " + a2.name(), std::move(parts));
}

}  // namespace aalg
