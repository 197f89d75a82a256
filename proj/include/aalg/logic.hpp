#pragma once

// Finitely presented logics (axioms and rules over a signature) and the
// logical matrices used to refute consequences.

#include "aalg/finalg.hpp"

namespace aalg {

struct Rule {
  std::vector<Formula> premises;
  Formula conclusion;

  friend bool operator==(const Rule&, const Rule&) = default;
};

inline std::string to_string(const Rule& r) {
  std::string out;
  for (std::size_t i = 0; i < r.premises.size(); ++i) out += (i ? ", " : "") + to_string(r.premises[i]);
  return out + " |- " + to_string(r.conclusion);
}

class LogicPresentation {
public:
  LogicPresentation() = default;

  LogicPresentation(std::string name, Signature sig, std::vector<Formula> axioms, std::vector<Rule> rules)
      : name_(std::move(name)), sig_(std::move(sig)), axioms_(std::move(axioms)), rules_(std::move(rules)) {
    for (const auto& a : axioms_) require_over(sig_, a);
    for (const auto& r : rules_) {
      if (r.premises.empty()) throw Error("logic " + name_ + ": rule without premises: " + to_string(r));
      for (const auto& p : r.premises) require_over(sig_, p);
      require_over(sig_, r.conclusion);
    }
  }

  const std::string& name() const { return name_; }
  const Signature& signature() const { return sig_; }
  const std::vector<Formula>& axioms() const { return axioms_; }
  const std::vector<Rule>& rules() const { return rules_; }

  friend bool operator==(const LogicPresentation& a, const LogicPresentation& b) {
    return a.sig_.same_symbols(b.sig_) && a.axioms_ == b.axioms_ && a.rules_ == b.rules_;
  }

private:
  std::string name_;
  Signature sig_;
  std::vector<Formula> axioms_;
  std::vector<Rule> rules_;
};

/// A finite algebra with a set of designated elements.
struct Matrix {
  FiniteAlgebra algebra;
  std::vector<bool> designated;

  Matrix() = default;
  Matrix(FiniteAlgebra a, const std::set<Element>& d) : algebra(std::move(a)), designated(algebra.size(), false) {
    for (Element e : d) designated.at(e) = true;
  }

  bool designates(Element e) const { return designated[e]; }
  const std::string& name() const { return algebra.name(); }

  std::set<Element> designated_set() const {
    std::set<Element> out;
    for (Element e = 0; e < designated.size(); ++e) {
      if (designated[e]) out.insert(e);
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.algebra == b.algebra && a.designated == b.designated; }
};

/// An axiom instance or rule instance of `l` that fails in a matrix.
struct PresentationViolation {
  bool is_rule = false;
  std::size_t index = 0;
  Assignment assignment;
};

inline std::string describe(const LogicPresentation& l, const PresentationViolation& v) {
  std::string what = v.is_rule ? "rule " + to_string(l.rules()[v.index]) : "axiom " + to_string(l.axioms()[v.index]);
  std::string env;
  for (auto [var, e] : v.assignment) env += (env.empty() ? "" : ", ") + ("x" + std::to_string(var)) + "=" + std::to_string(e);
  return what + " fails at {" + env + "}";
}

/// First axiom or rule instance of `l` that `m` does not validate.
inline std::optional<PresentationViolation> find_presentation_violation(const LogicPresentation& l, const Matrix& m) {
  require_same_symbols(l.signature(), m.algebra.signature(), "matrix validation");
  const auto& a = m.algebra;
  std::vector<Element> stack;
  for (std::size_t i = 0; i < l.axioms().size(); ++i) {
    CompiledTerm t(a.signature(), l.axioms()[i]);
    auto vs = vars(l.axioms()[i]);
    std::optional<PresentationViolation> bad;
    for_each_assignment(a.size(), vs, [&](std::span<const Element> env) {
      if (m.designates(t.eval(a, env, stack))) return true;
      bad = PresentationViolation{false, i, to_assignment(vs, env)};
      return false;
    });
    if (bad) return bad;
  }
  for (std::size_t i = 0; i < l.rules().size(); ++i) {
    const auto& r = l.rules()[i];
    std::vector<CompiledTerm> prem;
    for (const auto& p : r.premises) prem.emplace_back(a.signature(), p);
    CompiledTerm concl(a.signature(), r.conclusion);
    std::set<VarIndex> vs = vars(r.premises);
    collect_vars(r.conclusion, vs);
    std::optional<PresentationViolation> bad;
    for_each_assignment(a.size(), vs, [&](std::span<const Element> env) {
      for (const auto& p : prem) {
        if (!m.designates(p.eval(a, env, stack))) return true;
      }
      if (m.designates(concl.eval(a, env, stack))) return true;
      bad = PresentationViolation{true, i, to_assignment(vs, env)};
      return false;
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

inline bool validates(const LogicPresentation& l, const Matrix& m) { return !find_presentation_violation(l, m); }

/// First assignment under which every member of `gamma` is designated and
/// `phi` is not.
inline std::optional<Assignment> find_countermodel_assignment(const Matrix& m, std::span<const Formula> gamma,
                                                              const Formula& phi) {
  const auto& a = m.algebra;
  std::vector<CompiledTerm> prem;
  for (const auto& g : gamma) prem.emplace_back(a.signature(), g);
  CompiledTerm goal(a.signature(), phi);
  std::set<VarIndex> vs = vars(gamma);
  collect_vars(phi, vs);
  std::optional<Assignment> out;
  std::vector<Element> stack;
  for_each_assignment(a.size(), vs, [&](std::span<const Element> env) {
    for (const auto& p : prem) {
      if (!m.designates(p.eval(a, env, stack))) return true;
    }
    if (m.designates(goal.eval(a, env, stack))) return true;
    out = to_assignment(vs, env);
    return false;
  });
  return out;
}

/// Matrices supplied for a logic. When `complete` is set the family is
/// trusted to characterize the logic exactly (for instance truth tables for
/// classical logic); otherwise they are only used as sound countermodels.
struct OracleSet {
  std::vector<Matrix> matrices;
  bool complete = false;

  bool empty() const { return matrices.empty(); }
};

/// Throws if some oracle matrix fails to validate the presentation.
inline void require_valid_oracles(const LogicPresentation& l, const OracleSet& o) {
  for (const auto& m : o.matrices) {
    if (auto v = find_presentation_violation(l, m)) {
      throw Error("oracle matrix " + m.name() + " does not validate " + l.name() + ": " + describe(l, *v));
    }
  }
}

}  // namespace aalg
