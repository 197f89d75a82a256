#pragma once

// Three-valued results with replayable evidence, and budgets for the bounded
// searches that produce them.

#include <variant>

#include "aalg/logic.hpp"

namespace aalg {

struct Budget {
  unsigned max_depth = 3;
  unsigned max_vars = 3;
  unsigned max_iterations = 8;
  Element max_carrier = 2;
  std::optional<std::uint64_t> seed;
  /// facts kept by the forward prover
  std::size_t max_facts = 20000;
  /// search nodes per carrier size in the countermodel search
  std::size_t max_search_nodes = 20000;
};

enum class Status { proved, refuted, unknown };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::proved: return "Proved";
    case Status::refuted: return "Refuted";
    default: return "Unknown";
  }
}

struct TraceStep {
  enum class Kind { premise, axiom, rule, hypothesis };
  Formula formula;
  Kind kind = Kind::premise;
  /// index into the premises, axioms, rules or hypothesis rules
  std::size_t index = 0;
  /// earlier steps used as rule premises, in rule order
  std::vector<std::size_t> from;
  Substitution sigma;
};

inline const char* to_string(TraceStep::Kind k) {
  switch (k) {
    case TraceStep::Kind::premise: return "premise";
    case TraceStep::Kind::axiom: return "axiom";
    case TraceStep::Kind::rule: return "rule";
    default: return "hypothesis";
  }
}

/// A Hilbert-style derivation; the last step is the derived formula.
/// `hypotheses` are rules used verbatim, without substitution.
struct Trace {
  std::vector<TraceStep> steps;
  std::vector<Rule> hypotheses;
};

/// The query holds in every matrix of a family trusted to be complete.
struct OracleCertificate {
  std::vector<Matrix> matrices;
};

/// The premises are designated and the goal is not.
struct MatrixWitness {
  Matrix matrix;
  Assignment assignment;
};

/// For each matrix, sharing designation status is a congruence.
struct FilterCongruenceCertificate {
  std::vector<Matrix> matrices;
};

/// Free-form counterexample data from the algebraic checks.
struct AlgebraWitness {
  std::string note;
  std::vector<FiniteAlgebra> algebras;
  std::vector<std::vector<Element>> maps;
  std::optional<QuasiIdentity> law;
  Assignment assignment;
};

/// A formula at which a check fails, with the two sides that disagree.
struct FormulaWitness {
  Formula formula;
  std::optional<Formula> expected;
  std::optional<Formula> actual;
};

using Evidence = std::variant<std::monostate, Trace, OracleCertificate, MatrixWitness, FilterCongruenceCertificate,
                              AlgebraWitness, FormulaWitness>;

struct Verdict {
  Status status = Status::unknown;
  std::string claim;
  std::string reason;
  Evidence evidence;
  std::vector<Verdict> parts;

  bool proved() const { return status == Status::proved; }
  bool refuted() const { return status == Status::refuted; }
  bool unknown() const { return status == Status::unknown; }

  static Verdict make(Status s, std::string claim, std::string reason, Evidence ev = {}) {
    return Verdict{s, std::move(claim), std::move(reason), std::move(ev), {}};
  }
};

/// Proved when every part is, Refuted when some part is, Unknown otherwise.
inline Verdict all_of(std::string claim, std::vector<Verdict> parts) {
  Verdict v;
  v.claim = std::move(claim);
  bool all = true;
  const Verdict* refuted = nullptr;
  for (const auto& p : parts) {
    all = all && p.proved();
    if (!refuted && p.refuted()) refuted = &p;
  }
  if (refuted) {
    v.status = Status::refuted;
    v.reason = "refuted: " + refuted->claim;
  } else if (all) {
    v.status = Status::proved;
    v.reason = "all " + std::to_string(parts.size()) + " obligations proved";
  } else {
    v.status = Status::unknown;
    v.reason = "some obligations undecided within budget";
  }
  v.parts = std::move(parts);
  return v;
}

/// Checks a derivation of `phi` from `gamma` in `l`.
inline bool check_trace(const LogicPresentation& l, std::span<const Formula> gamma, const Formula& phi, const Trace& t) {
  if (t.steps.empty() || !(t.steps.back().formula == phi)) return false;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    switch (s.kind) {
      case TraceStep::Kind::premise:
        if (s.index >= gamma.size() || !(gamma[s.index] == s.formula)) return false;
        break;
      case TraceStep::Kind::axiom:
        if (s.index >= l.axioms().size() || !(subst(l.axioms()[s.index], s.sigma) == s.formula)) return false;
        break;
      case TraceStep::Kind::rule:
      case TraceStep::Kind::hypothesis: {
        bool hyp = s.kind == TraceStep::Kind::hypothesis;
        const auto& rules = hyp ? t.hypotheses : l.rules();
        if (s.index >= rules.size()) return false;
        const auto& r = rules[s.index];
        if (s.from.size() != r.premises.size()) return false;
        for (std::size_t k = 0; k < r.premises.size(); ++k) {
          if (s.from[k] >= i) return false;
          Formula want = hyp ? r.premises[k] : subst(r.premises[k], s.sigma);
          if (!(t.steps[s.from[k]].formula == want)) return false;
        }
        Formula concl = hyp ? r.conclusion : subst(r.conclusion, s.sigma);
        if (!(concl == s.formula)) return false;
        break;
      }
    }
  }
  return true;
}

/// Instantiates every step of a derivation by `sigma`; the result derives
/// sigma(phi) from sigma[gamma]. Hypothesis rules are instantiated as well.
inline Trace instantiate(const Trace& t, const Substitution& sigma) {
  Trace out;
  for (const auto& h : t.hypotheses) {
    Rule r{{}, subst(h.conclusion, sigma)};
    for (const auto& p : h.premises) r.premises.push_back(subst(p, sigma));
    out.hypotheses.push_back(std::move(r));
  }
  for (const auto& s : t.steps) {
    TraceStep n = s;
    n.formula = subst(s.formula, sigma);
    if (s.kind == TraceStep::Kind::axiom || s.kind == TraceStep::Kind::rule) n.sigma = compose(sigma, s.sigma);
    out.steps.push_back(std::move(n));
  }
  return out;
}

inline bool check_certificate(const LogicPresentation& l, std::span<const Formula> gamma, const Formula& phi,
                              const OracleCertificate& c) {
  if (c.matrices.empty()) return false;
  for (const auto& m : c.matrices) {
    if (!validates(l, m) || find_countermodel_assignment(m, gamma, phi)) return false;
  }
  return true;
}

inline bool check_witness(const LogicPresentation& l, std::span<const Formula> gamma, const Formula& phi,
                          const MatrixWitness& w) {
  if (!validates(l, w.matrix)) return false;
  const auto& a = w.matrix.algebra;
  for (const auto& g : gamma) {
    if (!w.matrix.designates(eval(a, g, w.assignment))) return false;
  }
  return !w.matrix.designates(eval(a, phi, w.assignment));
}

/// The equivalence "both designated or both undesignated".
inline Congruence designation_partition(const Matrix& m) {
  std::vector<int> label(m.algebra.size());
  for (Element e = 0; e < label.size(); ++e) label[e] = m.designates(e) ? 1 : 0;
  return Congruence::from_labels(label);
}

inline bool check_filter_congruence(const LogicPresentation& l, const FilterCongruenceCertificate& c) {
  if (c.matrices.empty()) return false;
  for (const auto& m : c.matrices) {
    if (!validates(l, m) || !is_congruence(m.algebra, designation_partition(m))) return false;
  }
  return true;
}

/// Re-checks the evidence of a single derivability verdict for (gamma, phi).
inline bool replay(const LogicPresentation& l, std::span<const Formula> gamma, const Formula& phi, const Verdict& v) {
  if (v.unknown()) return true;
  if (v.proved()) {
    if (auto* t = std::get_if<Trace>(&v.evidence)) return check_trace(l, gamma, phi, *t);
    if (auto* c = std::get_if<OracleCertificate>(&v.evidence)) return check_certificate(l, gamma, phi, *c);
    return false;
  }
  if (auto* w = std::get_if<MatrixWitness>(&v.evidence)) return check_witness(l, gamma, phi, *w);
  return false;
}

}  // namespace aalg
