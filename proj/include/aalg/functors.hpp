#pragma once

// The reduct functor induced by a flexible morphism, its restriction to
// quasivarieties, least-congruence reflections, Lindenbaum algebras, the
// unit check on term structures, the induced left adjoint in the dense case,
// and the full/faithful/injective/hereditary battery.

#include <functional>

#include "aalg/algebraize.hpp"
#include "aalg/random.hpp"

namespace aalg {

/// h*(A2): the carrier of A2 with each source symbol c read as h(c).
inline FiniteAlgebra reduct(const FlexibleMorphism& h, const FiniteAlgebra& a2) {
  require_same_symbols(h.target(), a2.signature(), "reduct");
  std::vector<std::vector<Element>> tables;
  std::vector<Element> stack;
  for (const auto& s : h.source().symbols()) {
    CompiledTerm t(a2.signature(), h.image(s.name));
    std::vector<Element> table;
    table.reserve(ipow(a2.size(), s.arity));
    for_each_tuple(a2.size(), s.arity, [&](std::span<const Element> args) { table.push_back(t.eval(a2, args, stack)); });
    tables.push_back(std::move(table));
  }
  return FiniteAlgebra(h.name() + "*" + a2.name(), h.source(), a2.size(), std::move(tables));
}

/// h*(g) for g: A2 -> B2; the same function, rechecked on the reducts.
inline std::vector<Element> reduct_hom(const FlexibleMorphism& h, const FiniteAlgebra& a2, const FiniteAlgebra& b2,
                                       std::span<const Element> g) {
  if (!is_hom(a2, b2, g)) throw Error("reduct_hom: map is not a homomorphism " + a2.name() + " -> " + b2.name());
  if (!is_hom(reduct(h, a2), reduct(h, b2), g)) {
    throw Error("reduct_hom: map is not a homomorphism between the reducts");
  }
  return {g.begin(), g.end()};
}

/// Every reduct of a member of QV(a2) lands in QV(a).
inline Verdict restriction_check(const FlexibleMorphism& h, const AlgebraizableLogic& a, const AlgebraizableLogic& a2,
                                 std::span<const FiniteAlgebra> corpus) {
  require_same_symbols(h.source(), a.signature(), "restriction_check source");
  require_same_symbols(h.target(), a2.signature(), "restriction_check target");
  const std::string claim = h.name() + "* restricts to QV(" + a2.name() + ") -> QV(" + a.name() + ")";
  const AxiomSet k = axiomatize(a);
  const AxiomSet k2 = axiomatize(a2);
  for (const auto& m : corpus) {
    if (auto f = first_failure(m, k2)) {
      throw Error("restriction_check: " + m.name() + " is not in " + k2.name + ": law " + to_string(k2.laws[f->first]) +
                  " fails");
    }
  }
  for (const auto& m : corpus) {
    auto r = reduct(h, m);
    if (auto f = first_failure(r, k)) {
      AlgebraWitness w{"reduct of " + m.name() + " violates " + k.origins[f->first], {m, r}, {}, k.laws[f->first],
                       f->second};
      return Verdict::make(Status::refuted, claim, "reduct of " + m.name() + " is not in " + k.name, std::move(w));
    }
  }
  return Verdict::make(Status::proved, claim,
                       "all " + std::to_string(corpus.size()) + " reducts satisfy " + k.name);
}

struct ReflectionResult {
  Congruence theta;
  FiniteAlgebra quotient;
  /// element of A -> element of the quotient
  std::vector<Element> unit;
  /// theta was compared against every congruence whose quotient is in K
  bool certified_least = false;
};

/// The least congruence theta with A/theta in K: start from the diagonal
/// and add the conclusion of each violated quasi-identity until none is.
inline ReflectionResult reflect(const FiniteAlgebra& a, const AxiomSet& k, Element bound = kDefaultCongruenceBound) {
  require_same_symbols(a.signature(), k.signature, "reflect");
  Congruence theta = Congruence::diagonal(a.size());
  while (true) {
    auto q = quotient(a, theta);
    std::vector<Element> rep(q.algebra.size());
    for (Element e = a.size(); e-- > 0;) rep[q.projection[e]] = e;
    auto f = first_failure(q.algebra, k);
    if (!f) {
      ReflectionResult out{theta, std::move(q.algebra), std::move(q.projection), false};
      if (a.size() <= bound) {
        for (const auto& c : all_congruences(a, bound)) {
          if (in_quasivariety(quotient(a, c).algebra, k) && !theta.subset_of(c)) {
            throw Error("reflect: fixpoint is not below every congruence with quotient in " + k.name);
          }
        }
        out.certified_least = true;
      }
      return out;
    }
    const auto& law = k.laws[f->first];
    Element l = eval(q.algebra, law.conclusion.lhs, f->second);
    Element r = eval(q.algebra, law.conclusion.rhs, f->second);
    std::pair<Element, Element> pair{rep[l], rep[r]};
    theta = congruence_generated(a, std::span<const std::pair<Element, Element>>(&pair, 1), &theta);
  }
}

struct LindenbaumResult {
  Verdict verdict;
  std::optional<FiniteAlgebra> algebra;
  /// representative formula of each element
  std::vector<Formula> representatives;
  /// element denoted by x_i
  std::vector<Element> generators;
};

/// The algebra of formulas over x0..x_{n-1} modulo |- phi D psi, built by
/// closing the generators under the operations. Unknown when a needed
/// derivability query is undecided or a new class has no representative
/// within `depth`.
inline LindenbaumResult lindenbaum_algebra(const AlgebraizableLogic& a, unsigned n, unsigned depth, const Budget& b) {
  const Signature& sig = a.signature();
  LindenbaumResult out;
  const std::string claim =
      "Lindenbaum algebra of " + a.name() + " on " + std::to_string(n) + " generators within depth " + std::to_string(depth);
  std::vector<Formula>& reps = out.representatives;

  // index of the class of f, or nullopt if new; throws Status on undecided
  std::optional<Verdict> undecided;
  auto classify = [&](const Formula& f) -> std::optional<Element> {
    for (Element i = 0; i < reps.size(); ++i) {
      if (reps[i] == f) return i;
      bool same = true;
      for (const auto& d : delta_of(a.pair, reps[i], f)) {
        Verdict v = derive(a.logic, {}, d, b, a.oracle_ptr());
        if (v.unknown()) {
          undecided = std::move(v);
          return std::nullopt;
        }
        if (v.refuted()) {
          same = false;
          break;
        }
      }
      if (same) return i;
    }
    return std::nullopt;
  };
  auto fail = [&](std::string why) {
    out.verdict = Verdict::make(Status::unknown, claim, std::move(why));
    out.algebra.reset();
    return out;
  };

  std::vector<Formula> frontier;
  for (VarIndex v = 0; v < n; ++v) frontier.push_back(Formula::var(v));
  for (const auto& s : sig.symbols()) {
    if (s.arity == 0) frontier.push_back(Formula::app(s.name));
  }
  if (frontier.empty()) return fail("no generators and no constants");

  std::size_t processed = 0;
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end(), CanonicalLess{});
    for (const auto& f : frontier) {
      auto c = classify(f);
      if (undecided) return fail("undecided query " + undecided->claim);
      if (c) continue;
      if (f.depth() > depth) return fail("class of " + to_string(f) + " has no representative within depth");
      reps.push_back(f);
    }
    frontier.clear();
    // apply every operation to tuples that involve at least one new class
    const std::size_t old = processed;
    processed = reps.size();
    for (const auto& s : sig.symbols()) {
      if (s.arity == 0) continue;
      for_each_tuple(static_cast<Element>(processed), s.arity, [&](std::span<const Element> t) {
        bool fresh = false;
        for (Element e : t) fresh = fresh || e >= old;
        if (!fresh) return;
        std::vector<Formula> args;
        for (Element e : t) args.push_back(reps[e]);
        frontier.push_back(Formula::app(s.name, std::move(args)));
      });
    }
  }

  const Element k = static_cast<Element>(reps.size());
  std::vector<std::vector<Element>> tables;
  for (const auto& s : sig.symbols()) {
    std::vector<Element> table;
    bool ok = true;
    for_each_tuple(k, s.arity, [&](std::span<const Element> t) {
      if (!ok) return;
      std::vector<Formula> args;
      for (Element e : t) args.push_back(reps[e]);
      auto c = classify(Formula::app(s.name, std::move(args)));
      if (!c) {
        ok = false;
        return;
      }
      table.push_back(*c);
    });
    if (!ok) return fail(undecided ? "undecided query " + undecided->claim : "operation table is not closed");
    tables.push_back(std::move(table));
  }
  for (VarIndex v = 0; v < n; ++v) out.generators.push_back(*classify(Formula::var(v)));
  out.algebra = FiniteAlgebra("F_" + a.name() + "(" + std::to_string(n) + ")", sig, k, std::move(tables));
  out.verdict = Verdict::make(Status::proved, claim, std::to_string(k) + " classes");
  return out;
}

using Extension = std::function<Formula(const FlexibleMorphism&, const Formula&)>;

inline constexpr std::size_t kEtaFormulaLimit = 400000;

/// The homomorphism from source terms to the reduct of target terms that
/// fixes variables agrees with `ext` on every source formula over
/// x0..x_{n-1} of depth <= depth.
inline Verdict eta_check(const FlexibleMorphism& h, unsigned n, unsigned depth, const Extension& ext = flex_extend) {
  const std::string claim = "eta of " + h.name() + "* is the extension of " + h.name() + " on " + std::to_string(n) +
                            " variables, depth " + std::to_string(depth);
  std::vector<Formula> all;
  try {
    all = enumerate_formulas(h.source(), n, depth, kEtaFormulaLimit);
  } catch (const Error& e) {
    return Verdict::make(Status::unknown, claim, e.what());
  }
  // formulas come sorted by depth, so arguments are always computed first
  std::unordered_map<Formula, Formula, FormulaHash> eta;
  eta.reserve(all.size());
  for (const auto& f : all) {
    Formula image = f;
    if (!f.is_var()) {
      std::vector<Formula> args;
      for (const auto& arg : f.args()) args.push_back(eta.at(arg));
      image = subst(h.image(f.symbol()), Substitution::from_vector(args));
    }
    Formula got = ext(h, f);
    if (!(got == image)) {
      return Verdict::make(Status::refuted, claim, "extensions differ at " + to_string(f), FormulaWitness{f, image, got});
    }
    eta.emplace(f, std::move(image));
  }
  return Verdict::make(Status::proved, claim, "agree on " + std::to_string(all.size()) + " formulas");
}

namespace detail {

/// Target operations on the carrier of `m` read off the witnesses.
inline FiniteAlgebra transfer(const FiniteAlgebra& m, const Signature& target,
                              const std::map<std::string, Formula>& witnesses, const std::string& name) {
  std::vector<std::vector<Element>> tables;
  std::vector<Element> stack;
  for (const auto& s : target.symbols()) {
    auto it = witnesses.find(s.name);
    if (it == witnesses.end()) throw Error("missing density witness for '" + s.name + "'");
    CompiledTerm t(m.signature(), it->second);
    std::vector<Element> table;
    for_each_tuple(m.size(), s.arity, [&](std::span<const Element> args) { table.push_back(t.eval(m, args, stack)); });
    tables.push_back(std::move(table));
  }
  return FiniteAlgebra(name, target, m.size(), std::move(tables));
}

}  // namespace detail

struct AdjointResult {
  Verdict verdict;
  std::optional<FiniteAlgebra> algebra;
  Congruence rho;
  /// element of A -> element of the result
  std::vector<Element> unit;
};

/// G(A) for the left adjoint of h* in the dense case: the least congruence
/// rho of A such that the witnesses turn A/rho into a member of QV(a2)
/// whose reduct is A/rho.
inline AdjointResult induced_adjoint(const FlexibleMorphism& h, const AlgebraizableLogic& a, const AlgebraizableLogic& a2,
                                     const FiniteAlgebra& m, const std::map<std::string, Formula>& witnesses,
                                     Element bound = kDefaultCongruenceBound) {
  require_same_symbols(h.source(), a.signature(), "induced_adjoint source");
  require_same_symbols(h.target(), a2.signature(), "induced_adjoint target");
  require_same_symbols(m.signature(), a.signature(), "induced_adjoint algebra");
  for (const auto& s : h.target().symbols()) {
    if (!witnesses.contains(s.name)) throw Error("induced_adjoint: missing witness for '" + s.name + "'");
  }
  const std::string claim = "left adjoint of " + h.name() + "* at " + m.name();
  AdjointResult out;
  if (m.size() > bound) {
    out.verdict = Verdict::make(Status::unknown, claim, "carrier exceeds congruence bound");
    return out;
  }
  const AxiomSet k2 = axiomatize(a2);
  for (const auto& c : all_congruences(m, bound)) {
    auto q = quotient(m, c);
    auto m2 = detail::transfer(q.algebra, h.target(), witnesses, "G(" + m.name() + ")");
    if (!in_quasivariety(m2, k2) || !(reduct(h, m2) == q.algebra)) continue;
    out.algebra = std::move(m2);
    out.rho = c;
    out.unit = std::move(q.projection);
    out.verdict = Verdict::make(Status::proved, claim,
                                "least congruence has " + std::to_string(c.num_blocks()) + " blocks");
    return out;
  }
  out.verdict = Verdict::make(Status::refuted, claim, "no quotient carries a compatible " + a2.name() + " structure");
  return out;
}

/// Elements with not(not(x)) = x, with join replaced by not(not(x or y)).
inline FiniteAlgebra regular_elements(const FiniteAlgebra& hey, const AxiomSet& heyting) {
  if (auto f = first_failure(hey, heyting)) {
    throw Error("regular_elements: " + hey.name() + " violates " + to_string(heyting.laws[f->first]));
  }
  const auto& nt = hey.table("not");
  const std::size_t or_sym = hey.index_of("or");
  std::vector<Element> members;
  for (Element e = 0; e < hey.size(); ++e) {
    if (nt[nt[e]] == e) members.push_back(e);
  }
  std::map<Element, Element> index;
  for (Element i = 0; i < members.size(); ++i) index[members[i]] = i;
  std::vector<Element> args;
  return FiniteAlgebra::from_function(
      "Reg(" + hey.name() + ")", hey.signature(), static_cast<Element>(members.size()),
      [&](const Symbol& s, std::span<const Element> t) {
        args.resize(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) args[i] = members[t[i]];
        std::size_t sym = hey.index_of(s.name);
        Element r = hey.apply(sym, args);
        if (sym == or_sym) r = nt[nt[r]];
        auto it = index.find(r);
        if (it == index.end()) throw Error("regular_elements: " + s.name + " leaves the regular elements");
        return it->second;
      });
}

/// The canonical map L(h* A2) -> h*(L'(A2)) is a well-defined surjective
/// homomorphism, and the identity when A2 is already in QV(a2).
inline Verdict natural_epi_check(const FlexibleMorphism& h, const AlgebraizableLogic& a, const AlgebraizableLogic& a2,
                                 const FiniteAlgebra& m2) {
  require_same_symbols(h.source(), a.signature(), "natural_epi_check source");
  require_same_symbols(h.target(), a2.signature(), "natural_epi_check target");
  const std::string claim = "natural epimorphism for " + h.name() + " at " + m2.name();
  const AxiomSet k = axiomatize(a);
  const AxiomSet k2 = axiomatize(a2);
  auto left = reflect(reduct(h, m2), k);
  auto right_full = reflect(m2, k2);
  auto right = reduct(h, right_full.quotient);
  if (!left.theta.subset_of(right_full.theta)) {
    return Verdict::make(Status::refuted, claim, "canonical map is not well defined",
                         AlgebraWitness{"theta not below theta'", {left.quotient, right}, {}, std::nullopt, {}});
  }
  std::vector<Element> map(left.quotient.size());
  for (Element e = 0; e < m2.size(); ++e) map[left.unit[e]] = right_full.unit[e];
  AlgebraWitness w{"canonical map", {left.quotient, right}, {map}, std::nullopt, {}};
  if (!is_hom(left.quotient, right, map)) {
    return Verdict::make(Status::refuted, claim, "canonical map is not a homomorphism", std::move(w));
  }
  std::set<Element> image(map.begin(), map.end());
  if (image.size() != right.size()) {
    return Verdict::make(Status::refuted, claim, "canonical map is not surjective", std::move(w));
  }
  bool identity = left.quotient.size() == m2.size() && right.size() == m2.size();
  for (Element e = 0; identity && e < map.size(); ++e) identity = map[e] == e;
  if (in_quasivariety(m2, k2) && !identity) {
    return Verdict::make(Status::refuted, claim, "canonical map is not the identity on a member of QV", std::move(w));
  }
  return Verdict::make(Status::proved, claim, identity ? "identity" : "surjective homomorphism", std::move(w));
}

struct FunctorProps {
  Verdict full;
  Verdict faithful;
  Verdict injective_on_objects;
  Verdict hereditary;

  std::vector<const Verdict*> all() const { return {&full, &faithful, &injective_on_objects, &hereditary}; }
};

/// Full, faithful, injective on objects and hereditary, exactly over the
/// listed members of QV(a2).
inline FunctorProps functor_props(const FlexibleMorphism& h, const AlgebraizableLogic& a2,
                                  std::span<const FiniteAlgebra> corpus, const Budget& b) {
  require_same_symbols(h.target(), a2.signature(), "functor_props");
  const AxiomSet k2 = axiomatize(a2);
  for (const auto& m : corpus) {
    if (auto f = first_failure(m, k2)) {
      throw Error("functor_props: " + m.name() + " is not in " + k2.name + ": law " + to_string(k2.laws[f->first]) +
                  " fails");
    }
  }
  std::vector<FiniteAlgebra> reducts;
  for (const auto& m : corpus) reducts.push_back(reduct(h, m));
  const std::string over = " over " + std::to_string(corpus.size()) + " members";
  FunctorProps out;

  out.faithful = Verdict::make(Status::proved, h.name() + "* is faithful", "reducts keep underlying maps" + over);
  out.full = Verdict::make(Status::proved, h.name() + "* is full", "every reduct homomorphism lifts" + over);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      for (const auto& g : homs(corpus[i], corpus[j])) {
        if (!is_hom(reducts[i], reducts[j], g) && out.faithful.proved()) {
          out.faithful = Verdict::make(Status::refuted, out.faithful.claim, "homomorphism does not survive the reduct",
                                       AlgebraWitness{"map", {corpus[i], corpus[j]}, {g}, std::nullopt, {}});
        }
      }
      if (!out.full.proved()) continue;
      for (const auto& g : homs(reducts[i], reducts[j])) {
        if (!is_hom(corpus[i], corpus[j], g)) {
          out.full = Verdict::make(Status::refuted, out.full.claim,
                                   "homomorphism " + reducts[i].name() + " -> " + reducts[j].name() + " does not lift",
                                   AlgebraWitness{"map", {corpus[i], corpus[j]}, {g}, std::nullopt, {}});
          break;
        }
      }
    }
  }

  out.injective_on_objects =
      Verdict::make(Status::proved, h.name() + "* is injective on objects", "distinct members have distinct reducts" + over);
  for (std::size_t i = 0; i < corpus.size() && out.injective_on_objects.proved(); ++i) {
    for (std::size_t j = i + 1; j < corpus.size(); ++j) {
      if (!(corpus[i] == corpus[j]) && reducts[i] == reducts[j]) {
        out.injective_on_objects = Verdict::make(
            Status::refuted, out.injective_on_objects.claim, corpus[i].name() + " and " + corpus[j].name() + " share a reduct",
            AlgebraWitness{"equal reducts", {corpus[i], corpus[j]}, {}, std::nullopt, {}});
        break;
      }
    }
  }

  const std::string hclaim = h.name() + "* is hereditary";
  auto witnesses = connective_witnesses(h, a2, b);
  if (!witnesses) {
    out.hereditary = Verdict::make(Status::unknown, hclaim, "no density witnesses for the target connectives");
    return out;
  }
  out.hereditary = Verdict::make(Status::proved, hclaim, "every subalgebra of a reduct is a reduct" + over);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (const auto& su : subuniverses(reducts[i])) {
      auto sub = subalgebra(reducts[i], su);
      auto m2 = detail::transfer(sub.algebra, h.target(), *witnesses, sub.algebra.name());
      if (!in_quasivariety(m2, k2) || !(reduct(h, m2) == sub.algebra)) {
        out.hereditary = Verdict::make(Status::refuted, hclaim, "subalgebra of " + reducts[i].name() + " is not a reduct",
                                       AlgebraWitness{"subuniverse", {corpus[i], sub.algebra}, {su}, std::nullopt, {}});
        return out;
      }
    }
  }
  return out;
}

struct LawOptions {
  std::size_t iterations = 200;
  std::uint64_t seed = 1;
  Element max_carrier = 4;
  std::size_t max_symbols = 3;
  unsigned image_depth = 2;
};

/// Composition and identity laws of the reduct functor on random morphisms
/// S1 -> S2 -> S3 and random S3-algebras, compared table by table.
inline Verdict functor_laws(const LawOptions& o) {
  const std::string claim = "reduct respects composition and identities on " + std::to_string(o.iterations) +
                            " random cases, seed " + std::to_string(o.seed);
  Rng rng(o.seed);
  for (std::size_t i = 0; i < o.iterations; ++i) {
    auto s1 = random_signature(rng, "S1", o.max_symbols);
    auto s2 = random_signature(rng, "S2", o.max_symbols);
    auto s3 = random_signature(rng, "S3", o.max_symbols);
    auto h1 = random_morphism(rng, "h1", s1, s2, o.image_depth);
    auto h2 = random_morphism(rng, "h2", s2, s3, o.image_depth);
    auto a = random_algebra(rng, "A" + std::to_string(i), s3, o.max_carrier);
    auto lhs = reduct(flex_compose(h2, h1), a);
    auto rhs = reduct(h1, reduct(h2, a));
    if (!(lhs == rhs)) {
      return Verdict::make(Status::refuted, claim, "composition law fails at case " + std::to_string(i),
                           AlgebraWitness{"(h2.h1)* A vs h1*(h2* A)", {a, lhs, rhs}, {}, std::nullopt, {}});
    }
    if (!(reduct(flex_identity(s3), a) == a)) {
      return Verdict::make(Status::refuted, claim, "identity law fails at case " + std::to_string(i),
                           AlgebraWitness{"id* A vs A", {a}, {}, std::nullopt, {}});
    }
  }
  return Verdict::make(Status::proved, claim, "all cases agree table by table");
}

}  // namespace aalg
