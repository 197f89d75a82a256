#pragma once

// Built-in logics, pairs, morphisms and algebras: classical and intuitionistic
// propositional logic (full signature and two fragments), the logic of groups,
// their algebraizing pairs, the equipollence morphisms between the fragments,
// the inclusion of intuitionistic into classical logic, and small Boolean,
// Heyting, Lukasiewicz and group tables.

#include "aalg/algebraize.hpp"

namespace aalg {

namespace corpus_detail {

inline Formula imp(Formula a, Formula b) { return op("imp", std::move(a), std::move(b)); }
inline Formula neg(Formula a) { return op("not", std::move(a)); }
inline Formula conj(Formula a, Formula b) { return op("and", std::move(a), std::move(b)); }
inline Formula disj(Formula a, Formula b) { return op("or", std::move(a), std::move(b)); }
inline Formula iff(Formula a, Formula b) { return op("iff", std::move(a), std::move(b)); }
inline Formula mul(Formula a, Formula b) { return op("mul", std::move(a), std::move(b)); }
inline Formula inv(Formula a) { return op("inv", std::move(a)); }
inline Formula e() { return op("e"); }
inline Formula top() { return op("top"); }

inline Signature prop_sig() {
  return Signature("Prop", {{"top", 0}, {"not", 1}, {"and", 2}, {"or", 2}, {"imp", 2}, {"iff", 2}});
}
inline Signature imp_neg_sig() { return Signature("PropImpNeg", {{"not", 1}, {"imp", 2}}); }
inline Signature or_neg_sig() { return Signature("PropOrNeg", {{"not", 1}, {"or", 2}}); }
inline Signature neg_sig() { return Signature("Neg", {{"not", 1}}); }
inline Signature group_sig() { return Signature("Grp", {{"e", 0}, {"inv", 1}, {"mul", 2}}); }

inline Rule modus_ponens() { return {{x(0), imp(x(0), x(1))}, x(1)}; }

inline std::vector<Formula> intuitionistic_axioms() {
  const Formula p = x(0), q = x(1), r = x(2);
  return {
      imp(p, imp(q, p)),
      imp(imp(p, imp(q, r)), imp(imp(p, q), imp(p, r))),
      imp(conj(p, q), p),
      imp(conj(p, q), q),
      imp(p, imp(q, conj(p, q))),
      imp(p, disj(p, q)),
      imp(q, disj(p, q)),
      imp(imp(p, r), imp(imp(q, r), imp(disj(p, q), r))),
      imp(neg(p), imp(p, q)),
      imp(imp(p, q), imp(imp(p, neg(q)), neg(p))),
      imp(iff(p, q), imp(p, q)),
      imp(iff(p, q), imp(q, p)),
      imp(imp(p, q), imp(imp(q, p), iff(p, q))),
      top(),
  };
}

inline LogicPresentation ipc() { return LogicPresentation("IPC", prop_sig(), intuitionistic_axioms(), {modus_ponens()}); }

inline LogicPresentation cpc() {
  auto ax = intuitionistic_axioms();
  ax.push_back(imp(neg(neg(x(0))), x(0)));
  return LogicPresentation("CPC", prop_sig(), std::move(ax), {modus_ponens()});
}

inline LogicPresentation cpc_imp_neg() {
  const Formula p = x(0), q = x(1), r = x(2);
  return LogicPresentation("CPC_imp_neg", imp_neg_sig(),
                           {imp(p, imp(q, p)), imp(imp(p, imp(q, r)), imp(imp(p, q), imp(p, r))),
                            imp(imp(neg(p), neg(q)), imp(q, p))},
                           {modus_ponens()});
}

inline LogicPresentation cpc_or_neg() {
  const Formula p = x(0), q = x(1), r = x(2);
  // p -> q abbreviates not(p) or q
  auto to = [](Formula a, Formula b) { return disj(neg(std::move(a)), std::move(b)); };
  return LogicPresentation("CPC_or_neg", or_neg_sig(),
                           {to(disj(p, p), p), to(p, disj(p, q)), to(disj(p, q), disj(q, p)),
                            to(to(p, q), to(disj(r, p), disj(r, q)))},
                           {{{p, to(p, q)}, q}});
}

inline LogicPresentation cpc_neg() {
  return LogicPresentation("CPC_neg", neg_sig(), {}, {{{x(0)}, neg(neg(x(0)))}, {{neg(neg(x(0)))}, x(0)}});
}

inline LogicPresentation groups() {
  const Formula p = x(0), q = x(1), r = x(2), s = x(3);
  auto d = [](Formula a, Formula b) { return mul(std::move(a), inv(std::move(b))); };
  return LogicPresentation("GRP", group_sig(),
                           {d(mul(mul(p, q), r), mul(p, mul(q, r))), d(mul(p, e()), p), d(mul(e(), p), p), d(p, p),
                            mul(inv(p), p)},
                           {{{d(p, q)}, d(q, p)},
                            {{d(p, q)}, d(inv(p), inv(q))},
                            {{d(p, q), d(q, r)}, d(p, r)},
                            {{d(p, q), d(r, s)}, d(mul(p, r), mul(q, s))},
                            {{p}, d(p, e())},
                            {{d(p, e())}, p}});
}

/// Boolean, Heyting or Lukasiewicz operations given by lattice order on
/// integer codes; `imp_fn` and `not_fn` fill the rest.
template <class Imp, class Not, class Meet, class Join>
FiniteAlgebra prop_algebra(const std::string& name, Element k, Element top_el, Imp imp_fn, Not not_fn, Meet meet,
                           Join join) {
  return FiniteAlgebra::from_function(name, prop_sig(), k, [&](const Symbol& s, std::span<const Element> a) -> Element {
    if (s.name == "top") return top_el;
    if (s.name == "not") return not_fn(a[0]);
    if (s.name == "and") return meet(a[0], a[1]);
    if (s.name == "or") return join(a[0], a[1]);
    if (s.name == "imp") return imp_fn(a[0], a[1]);
    return meet(imp_fn(a[0], a[1]), imp_fn(a[1], a[0]));
  });
}

/// Boolean algebra of subsets of an n-bit set; elements are bit masks, so
/// for n = 2 the codes are 0, a, not a, 1.
inline FiniteAlgebra boolean(const std::string& name, unsigned bits) {
  const Element full = (1u << bits) - 1;
  return prop_algebra(
      name, full + 1, full, [=](Element a, Element b) { return (full & ~a) | b; }, [=](Element a) { return full & ~a; },
      [](Element a, Element b) { return a & b; }, [](Element a, Element b) { return a | b; });
}

/// Heyting chain 0 < 1 < ... < n-1.
inline FiniteAlgebra heyting_chain(const std::string& name, Element n) {
  const Element top_el = n - 1;
  auto hi = [=](Element a, Element b) { return a <= b ? top_el : b; };
  return prop_algebra(
      name, n, top_el, hi, [=](Element a) { return a == 0 ? top_el : 0; },
      [](Element a, Element b) { return std::min(a, b); }, [](Element a, Element b) { return std::max(a, b); });
}

/// Three-element Lukasiewicz chain 0 < 1 < 2.
inline FiniteAlgebra lukasiewicz3() {
  return prop_algebra(
      "L3", 3, 2, [](Element a, Element b) { return std::min<Element>(2, 2 - a + b); },
      [](Element a) { return 2 - a; }, [](Element a, Element b) { return std::min(a, b); },
      [](Element a, Element b) { return std::max(a, b); });
}

/// Restricts a Prop-algebra to a subsignature with the same symbol names.
inline FiniteAlgebra restrict_to(const FiniteAlgebra& a, const Signature& sig, const std::string& name) {
  std::vector<std::vector<Element>> tables;
  for (const auto& s : sig.symbols()) tables.push_back(a.table(s.name));
  return FiniteAlgebra(name, sig, a.size(), std::move(tables));
}

/// Boolean algebra of bit masks over the {not, or} signature.
inline FiniteAlgebra boolean_or(const std::string& name, unsigned bits) {
  return restrict_to(boolean(name, bits), or_neg_sig(), name);
}

inline FiniteAlgebra boolean_in(const std::string& name, unsigned bits) {
  return restrict_to(boolean(name, bits), imp_neg_sig(), name);
}

template <class Mul, class Inv>
FiniteAlgebra group_algebra(const std::string& name, Element k, Element unit, Mul m, Inv i) {
  return FiniteAlgebra::from_function(name, group_sig(), k, [&](const Symbol& s, std::span<const Element> a) -> Element {
    if (s.name == "e") return unit;
    if (s.name == "inv") return i(a[0]);
    return m(a[0], a[1]);
  });
}

inline FiniteAlgebra cyclic(Element n) {
  return group_algebra(
      "Z" + std::to_string(n), n, 0, [=](Element a, Element b) { return (a + b) % n; },
      [=](Element a) { return (n - a) % n; });
}

/// Designated set {a : delta(a) = eps(a) for every (delta, eps) in tau}.
inline std::set<Element> tau_filter(const FiniteAlgebra& a, const AlgebraizingPair& p) {
  std::set<Element> d;
  for (Element v = 0; v < a.size(); ++v) {
    Element env[] = {v};
    bool all = true;
    for (const auto& e : p.tau) {
      all = all && eval(a, e.lhs, std::span<const Element>(env)) == eval(a, e.rhs, std::span<const Element>(env));
    }
    if (all) d.insert(v);
  }
  return d;
}

}  // namespace corpus_detail

/// Designated set carved out of an algebra by the defining equations of a pair.
inline Matrix tau_matrix(const FiniteAlgebra& a, const AlgebraizingPair& p) {
  return Matrix(a, corpus_detail::tau_filter(a, p));
}

enum class EntryKind { signature, logic, pair, morphism, algebra, axiomset };

inline const char* to_string(EntryKind k) {
  switch (k) {
    case EntryKind::signature: return "signature";
    case EntryKind::logic: return "logic";
    case EntryKind::pair: return "pair";
    case EntryKind::morphism: return "morphism";
    case EntryKind::algebra: return "algebra";
    default: return "axiomset";
  }
}

struct CorpusEntry {
  std::string name;
  EntryKind kind;
  std::variant<Signature, LogicPresentation, AlgebraizableLogic, FlexibleMorphism, FiniteAlgebra, AxiomSet> payload;
};

class Corpus {
public:
  Corpus() {
    using namespace corpus_detail;
    for (const auto& s : {prop_sig(), imp_neg_sig(), or_neg_sig(), neg_sig(), group_sig()}) add(s.name(), EntryKind::signature, s);

    const auto l_cpc = cpc();
    const auto l_ipc = ipc();
    const auto l_in = cpc_imp_neg();
    const auto l_or = cpc_or_neg();
    const auto l_grp = groups();
    for (const auto& l : {l_cpc, l_ipc, l_in, l_or, cpc_neg(), l_grp}) add(l.name(), EntryKind::logic, l);

    auto b1 = boolean("B1", 0);
    auto b2 = boolean("B2", 1);
    auto b4 = boolean("B4", 2);
    auto h3 = heyting_chain("H3", 3);
    auto h4 = heyting_chain("H4", 4);
    auto h5 = heyting_chain("H5", 5);
    auto l3 = lukasiewicz3();
    auto b2in = boolean_in("B2in", 1);
    auto b4in = boolean_in("B4in", 2);
    auto b2or = boolean_or("B2or", 1);
    auto b4or = boolean_or("B4or", 2);
    auto z2 = cyclic(2), z3 = cyclic(3), z4 = cyclic(4);
    auto klein = group_algebra(
        "Klein4", 4, 0, [](Element a, Element b) { return a ^ b; }, [](Element a) { return a; });
    auto left_zero = group_algebra(
        "LeftZero", 2, 0, [](Element a, Element) { return a; }, [](Element a) { return a; });
    for (const auto& a : {b1, b2, b4, h3, h4, h5, l3, b2in, b4in, b2or, b4or, z2, z3, z4, klein, left_zero}) {
      add(a.name(), EntryKind::algebra, a);
    }

    AlgebraizingPair p_cpc{"CPC_pair", {iff(x(0), x(1))}, {{top(), x(0)}}};
    AlgebraizingPair p_ipc{"IPC_pair", {iff(x(0), x(1))}, {{top(), x(0)}}};
    AlgebraizingPair p_in{"CPC_imp_neg_pair", {imp(x(0), x(1)), imp(x(1), x(0))}, {{imp(x(0), x(0)), x(0)}}};
    AlgebraizingPair p_or{"CPC_or_neg_pair",
                          {disj(neg(x(0)), x(1)), disj(neg(x(1)), x(0))},
                          {{disj(neg(x(0)), x(0)), x(0)}}};
    AlgebraizingPair p_grp{"GRP_pair", {mul(x(0), inv(x(1)))}, {{x(0), e()}}};

    auto complete = [](std::vector<Matrix> ms) { return OracleSet{std::move(ms), true}; };
    auto sound = [](std::vector<Matrix> ms) { return OracleSet{std::move(ms), false}; };
    add("CPC_pair", EntryKind::pair,
        AlgebraizableLogic(l_cpc, p_cpc, complete({tau_matrix(b2, p_cpc)}), {b1, b2, b4}));
    add("IPC_pair", EntryKind::pair,
        AlgebraizableLogic(l_ipc, p_ipc,
                           sound({tau_matrix(b2, p_ipc), tau_matrix(h3, p_ipc), tau_matrix(h4, p_ipc)}),
                           {b1, b2, b4, h3, h4, h5}));
    add("CPC_imp_neg_pair", EntryKind::pair,
        AlgebraizableLogic(l_in, p_in, complete({tau_matrix(b2in, p_in)}), {b2in, b4in}));
    add("CPC_or_neg_pair", EntryKind::pair,
        AlgebraizableLogic(l_or, p_or, complete({tau_matrix(b2or, p_or)}), {b2or, b4or}));
    add("GRP_pair", EntryKind::pair,
        AlgebraizableLogic(l_grp, p_grp, sound({tau_matrix(z2, p_grp), tau_matrix(z3, p_grp)}), {z2, z3, z4, klein}));

    add("t", EntryKind::morphism,
        FlexibleMorphism("t", imp_neg_sig(), or_neg_sig(), {{"imp", disj(neg(x(0)), x(1))}, {"not", neg(x(0))}}));
    add("t_prime", EntryKind::morphism,
        FlexibleMorphism("t_prime", or_neg_sig(), imp_neg_sig(), {{"or", imp(neg(x(0)), x(1))}, {"not", neg(x(0))}}));
    auto incl = flex_identity(prop_sig());
    add("godel", EntryKind::morphism, FlexibleMorphism("godel", prop_sig(), prop_sig(), incl.images()));
    add("neg_into_cpc", EntryKind::morphism, FlexibleMorphism("neg_into_cpc", neg_sig(), prop_sig(), {{"not", neg(x(0))}}));

    for (const char* p : {"CPC_pair", "IPC_pair", "CPC_imp_neg_pair", "CPC_or_neg_pair", "GRP_pair"}) {
      auto ax = axiomatize(pair(p));
      add(ax.name, EntryKind::axiomset, ax);
    }
  }

  const CorpusEntry& lookup(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw Error("unknown corpus entry '" + name + "'");
    return it->second;
  }

  bool contains(const std::string& name) const { return entries_.contains(name); }

  template <class T>
  const T& get(const std::string& name, EntryKind kind) const {
    const auto& e = lookup(name);
    if (e.kind != kind) throw Error("corpus entry '" + name + "' is a " + to_string(e.kind) + ", not a " + to_string(kind));
    return std::get<T>(e.payload);
  }

  const Signature& signature(const std::string& n) const { return get<Signature>(n, EntryKind::signature); }
  const LogicPresentation& logic(const std::string& n) const { return get<LogicPresentation>(n, EntryKind::logic); }
  const AlgebraizableLogic& pair(const std::string& n) const { return get<AlgebraizableLogic>(n, EntryKind::pair); }
  const FlexibleMorphism& morphism(const std::string& n) const { return get<FlexibleMorphism>(n, EntryKind::morphism); }
  const FiniteAlgebra& algebra(const std::string& n) const { return get<FiniteAlgebra>(n, EntryKind::algebra); }
  const AxiomSet& axiomset(const std::string& n) const { return get<AxiomSet>(n, EntryKind::axiomset); }

  /// Entry names in insertion order.
  const std::vector<std::string>& names() const { return order_; }

  std::vector<std::string> names(EntryKind kind) const {
    std::vector<std::string> out;
    for (const auto& n : order_) {
      if (entries_.at(n).kind == kind) out.push_back(n);
    }
    return out;
  }

private:
  template <class T>
  void add(const std::string& name, EntryKind kind, T payload) {
    if (entries_.contains(name)) throw Error("duplicate corpus entry '" + name + "'");
    entries_.emplace(name, CorpusEntry{name, kind, std::move(payload)});
    order_.push_back(name);
  }

  std::map<std::string, CorpusEntry> entries_;
  std::vector<std::string> order_;
};

inline const Corpus& corpus() {
  static const Corpus c;
  return c;
}

inline const CorpusEntry& lookup(const std::string& name) { return corpus().lookup(name); }

}  // namespace aalg
