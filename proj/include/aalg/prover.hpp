#pragma once

// Bounded forward proof search. Facts are closed under rule instances whose
// premises match existing facts; axiom instances enter by matching the goal,
// by matching fully instantiated rule premises, and by seeding over a small
// universe of terms. Everything stays below the budget depth.

#include <unordered_set>

#include "aalg/verdict.hpp"

namespace aalg {

namespace detail {

/// Binding of pattern variables, indexed by variable.
class Binding {
public:
  explicit Binding(std::size_t nvars = 0) : slots_(nvars) {}

  const std::optional<Formula>& get(VarIndex v) const { return slots_[v]; }
  std::size_t size() const { return slots_.size(); }
  std::size_t mark() const { return trail_.size(); }

  void bind(VarIndex v, Formula f) {
    slots_[v] = std::move(f);
    trail_.push_back(v);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      slots_[trail_.back()].reset();
      trail_.pop_back();
    }
  }

  Substitution substitution() const {
    Substitution s;
    for (VarIndex v = 0; v < slots_.size(); ++v) {
      if (slots_[v]) s.set(v, *slots_[v]);
    }
    return s;
  }

private:
  std::vector<std::optional<Formula>> slots_;
  std::vector<VarIndex> trail_;
};

/// One-way matching of `pat` against `f`, extending `b`. On failure the
/// binding is restored.
inline bool match(const Formula& pat, const Formula& f, Binding& b) {
  std::size_t m = b.mark();
  std::vector<std::pair<const Formula*, const Formula*>> todo{{&pat, &f}};
  while (!todo.empty()) {
    auto [p, g] = todo.back();
    todo.pop_back();
    if (p->is_var()) {
      const auto& cur = b.get(p->var_index());
      if (cur) {
        if (!(*cur == *g)) {
          b.undo(m);
          return false;
        }
      } else {
        b.bind(p->var_index(), *g);
      }
      continue;
    }
    if (g->is_var() || p->symbol() != g->symbol() || p->args().size() != g->args().size()) {
      b.undo(m);
      return false;
    }
    for (std::size_t i = 0; i < p->args().size(); ++i) todo.emplace_back(&p->args()[i], &g->args()[i]);
  }
  return true;
}

inline std::size_t pattern_slots(const Formula& f) {
  auto vs = vars(f);
  return vs.empty() ? 0 : *vs.rbegin() + 1;
}

inline bool fully_bound(const std::set<VarIndex>& vs, const Binding& b) {
  for (auto v : vs) {
    if (!b.get(v)) return false;
  }
  return true;
}

/// Largest depth at which each variable occurs inside `f`.
inline void occurrence_depths(const Formula& f, unsigned at, std::map<VarIndex, unsigned>& out) {
  if (f.is_var()) {
    auto& d = out[f.var_index()];
    d = std::max(d, at);
    return;
  }
  for (const auto& a : f.args()) occurrence_depths(a, at + 1, out);
}

}  // namespace detail

class ForwardProver {
public:
  ForwardProver(const LogicPresentation& l, std::span<const Formula> gamma, Formula goal, const Budget& b,
                std::vector<Rule> hypotheses = {})
      : l_(l), gamma_(gamma.begin(), gamma.end()), goal_(std::move(goal)), b_(b), hyps_(std::move(hypotheses)) {
    for (const auto& r : l_.rules()) {
      std::set<VarIndex> pv = vars(r.premises);
      std::vector<std::set<VarIndex>> each;
      for (const auto& p : r.premises) each.push_back(vars(p));
      std::size_t slots = detail::pattern_slots(r.conclusion);
      for (const auto& p : r.premises) slots = std::max(slots, detail::pattern_slots(p));
      std::map<VarIndex, unsigned> occ;
      detail::occurrence_depths(r.conclusion, 0, occ);
      rules_.push_back({std::move(each), vars(r.conclusion), slots, {occ.begin(), occ.end()}});
    }
    for (const auto& a : l_.axioms()) axiom_slots_.push_back(detail::pattern_slots(a));
  }

  /// A derivation of the goal, if one is found within the budget.
  std::optional<Trace> run() {
    build_universe();
    for (std::size_t i = 0; i < gamma_.size(); ++i) {
      if (add({gamma_[i], TraceStep::Kind::premise, i, {}, {}}, true)) return trace();
    }
    for (std::size_t i = 0; i < l_.axioms().size(); ++i) {
      detail::Binding bind(axiom_slots_[i]);
      if (detail::match(l_.axioms()[i], goal_, bind)) {
        if (add({goal_, TraceStep::Kind::axiom, i, {}, bind.substitution()})) return trace();
      }
    }
    seed_axioms();
    if (done_) return trace();

    std::size_t old_end = 0;
    for (unsigned round = 0; round < b_.max_iterations && !done_ && !full(); ++round) {
      std::size_t delta_end = facts_.size();
      if (old_end == delta_end) break;
      for (std::size_t r = 0; r < l_.rules().size() && !done_ && !full(); ++r) apply_rule(r, old_end, delta_end);
      apply_hypotheses();
      if (done_) break;
      for (std::size_t f = delta_end; f < facts_.size(); ++f) extend_universe(facts_[f].formula);
      seed_axioms();
      old_end = delta_end;
    }
    if (!done_) return std::nullopt;
    return trace();
  }

  std::size_t fact_count() const { return facts_.size(); }
  bool exhausted() const { return full(); }

private:
  struct Fact {
    Formula formula;
    TraceStep::Kind kind;
    std::size_t index;
    std::vector<std::size_t> parents;
    Substitution sigma;
  };

  struct RuleInfo {
    std::vector<std::set<VarIndex>> premise_vars;
    std::set<VarIndex> conclusion_vars;
    std::size_t slots;
    std::vector<std::pair<VarIndex, unsigned>> conclusion_depths;
  };

  /// Bound conclusion variables still leave the conclusion within depth.
  bool fits(const RuleInfo& info, const detail::Binding& bind) const {
    for (auto [v, d] : info.conclusion_depths) {
      const auto& t = bind.get(v);
      if (t && t->depth() + d > b_.max_depth) return false;
    }
    return true;
  }

  bool full() const { return facts_.size() >= b_.max_facts; }

  /// Returns true once the goal has been reached.
  bool add(Fact f, bool force = false) {
    if (done_) return true;
    if (!force && (f.formula.depth() > b_.max_depth || full())) return false;
    auto [it, fresh] = index_.emplace(f.formula, facts_.size());
    if (!fresh) return false;
    by_symbol_[f.formula.is_var() ? std::string() : f.formula.symbol()].push_back(facts_.size());
    facts_.push_back(std::move(f));
    if (facts_.back().formula == goal_) {
      goal_id_ = facts_.size() - 1;
      done_ = true;
    }
    return done_;
  }

  std::optional<std::size_t> find(const Formula& f) const {
    auto it = index_.find(f);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Fact id for a fully instantiated premise: an existing fact or a newly
  /// recorded axiom instance.
  std::optional<std::size_t> lookup_or_axiom(const Formula& f) {
    if (auto id = find(f)) return id;
    if (f.depth() > b_.max_depth || full()) return std::nullopt;
    for (std::size_t i = 0; i < l_.axioms().size(); ++i) {
      detail::Binding bind(axiom_slots_[i]);
      if (detail::match(l_.axioms()[i], f, bind)) {
        add({f, TraceStep::Kind::axiom, i, {}, bind.substitution()});
        return find(f);
      }
    }
    return std::nullopt;
  }

  void build_universe() {
    std::set<VarIndex> qv = vars(gamma_);
    collect_vars(goal_, qv);
    for (auto v : qv) add_term(Formula::var(v));
    // Fresh variables are never needed: renaming one to a query variable
    // keeps a derivation valid and within depth.
    if (qv.empty()) add_term(Formula::var(0));
    for (const auto& s : l_.signature().symbols()) {
      if (s.arity == 0) add_term(Formula::app(s.name));
    }
    for (const auto& g : gamma_) extend_universe(g);
    extend_universe(goal_);
  }

  void add_term(const Formula& t) {
    if (t.depth() >= b_.max_depth) return;
    if (universe_set_.insert(t).second) universe_.push_back(t);
  }

  void extend_universe(const Formula& f) {
    if (f.is_var()) return;
    add_term(f);
    for (const auto& a : f.args()) extend_universe(a);
  }

  /// Axiom instances with every variable mapped into the universe, within depth.
  void seed_axioms() {
    for (std::size_t i = 0; i < l_.axioms().size() && !done_ && !full(); ++i) {
      const auto& ax = l_.axioms()[i];
      std::map<VarIndex, unsigned> occ;
      detail::occurrence_depths(ax, 0, occ);
      if (ax.depth() > b_.max_depth) continue;
      std::vector<VarIndex> vs;
      std::vector<std::vector<const Formula*>> choices;
      for (auto [v, d] : occ) {
        vs.push_back(v);
        choices.emplace_back();
        for (const auto& t : universe_) {
          if (d + t.depth() <= b_.max_depth) choices.back().push_back(&t);
        }
        if (choices.back().empty()) break;
      }
      if (choices.size() != vs.size() || (!vs.empty() && choices.back().empty())) continue;
      std::vector<std::size_t> pos(vs.size(), 0);
      while (!done_ && !full()) {
        Substitution s;
        for (std::size_t k = 0; k < vs.size(); ++k) s.set(vs[k], *choices[k][pos[k]]);
        Formula inst = subst(ax, s);
        if (!find(inst)) add({inst, TraceStep::Kind::axiom, i, {}, s});
        std::size_t p = vs.size();
        while (p > 0) {
          --p;
          if (++pos[p] < choices[p].size()) break;
          pos[p] = 0;
          if (p == 0) goto next_axiom;
        }
        if (vs.empty()) break;
      }
    next_axiom:;
    }
  }

  void apply_rule(std::size_t r, std::size_t old_end, std::size_t delta_end) {
    const auto& rule = l_.rules()[r];
    const auto& info = rules_[r];
    const std::size_t k = rule.premises.size();
    for (std::size_t i = 0; i < k && !done_ && !full(); ++i) {
      for (std::size_t f = old_end; f < delta_end && !done_ && !full(); ++f) {
        detail::Binding bind(info.slots);
        if (!detail::match(rule.premises[i], facts_[f].formula, bind) || !fits(info, bind)) continue;
        std::vector<std::size_t> chosen(k, 0);
        chosen[i] = f;
        extend_premises(r, i, 0, old_end, delta_end, bind, chosen);
      }
    }
  }

  void extend_premises(std::size_t r, std::size_t delta_pos, std::size_t j, std::size_t old_end, std::size_t delta_end,
                       detail::Binding& bind, std::vector<std::size_t>& chosen) {
    if (done_ || full()) return;
    const auto& rule = l_.rules()[r];
    const auto& info = rules_[r];
    if (j == rule.premises.size()) {
      conclude(r, bind, chosen);
      return;
    }
    if (j == delta_pos) {
      extend_premises(r, delta_pos, j + 1, old_end, delta_end, bind, chosen);
      return;
    }
    const Formula& pat = rule.premises[j];
    if (detail::fully_bound(info.premise_vars[j], bind)) {
      Formula inst = subst(pat, bind.substitution());
      if (auto id = lookup_or_axiom(inst)) {
        chosen[j] = *id;
        extend_premises(r, delta_pos, j + 1, old_end, delta_end, bind, chosen);
      }
      return;
    }
    const std::size_t limit = j < delta_pos ? old_end : delta_end;
    auto scan = [&](const std::vector<std::size_t>& ids) {
      for (std::size_t id : ids) {
        if (id >= limit || done_ || full()) break;
        std::size_t m = bind.mark();
        if (!detail::match(pat, facts_[id].formula, bind)) continue;
        if (!fits(info, bind)) {
          bind.undo(m);
          continue;
        }
        chosen[j] = id;
        extend_premises(r, delta_pos, j + 1, old_end, delta_end, bind, chosen);
        bind.undo(m);
      }
    };
    if (pat.is_var()) {
      // copy the buckets: new facts may be appended while scanning
      std::vector<std::vector<std::size_t>> buckets;
      for (const auto& [sym, ids] : by_symbol_) buckets.push_back(ids);
      for (const auto& ids : buckets) scan(ids);
    } else {
      auto it = by_symbol_.find(pat.symbol());
      if (it != by_symbol_.end()) {
        auto ids = it->second;
        scan(ids);
      }
    }
  }

  void conclude(std::size_t r, detail::Binding& bind, const std::vector<std::size_t>& chosen) {
    const auto& rule = l_.rules()[r];
    const auto& info = rules_[r];
    std::vector<VarIndex> open;
    for (auto v : info.conclusion_vars) {
      if (!bind.get(v)) open.push_back(v);
    }
    std::function<void(std::size_t)> go = [&](std::size_t k) {
      if (done_ || full()) return;
      if (k == open.size()) {
        Formula c = subst(rule.conclusion, bind.substitution());
        if (c.depth() <= b_.max_depth && !find(c)) add({c, TraceStep::Kind::rule, r, chosen, bind.substitution()});
        return;
      }
      for (std::size_t u = 0; u < universe_.size(); ++u) {
        std::size_t m = bind.mark();
        bind.bind(open[k], universe_[u]);
        go(k + 1);
        bind.undo(m);
      }
    };
    go(0);
  }

  void apply_hypotheses() {
    bool changed = true;
    while (changed && !done_ && !full()) {
      changed = false;
      for (std::size_t h = 0; h < hyps_.size() && !done_; ++h) {
        const auto& r = hyps_[h];
        if (find(r.conclusion)) continue;
        std::vector<std::size_t> from;
        for (const auto& p : r.premises) {
          auto id = find(p);
          if (!id) break;
          from.push_back(*id);
        }
        if (from.size() != r.premises.size()) continue;
        add({r.conclusion, TraceStep::Kind::hypothesis, h, from, {}}, true);
        changed = true;
      }
    }
  }

  Trace trace() const {
    std::set<std::size_t> needed;
    std::vector<std::size_t> todo{goal_id_};
    while (!todo.empty()) {
      auto id = todo.back();
      todo.pop_back();
      if (!needed.insert(id).second) continue;
      for (auto p : facts_[id].parents) todo.push_back(p);
    }
    std::map<std::size_t, std::size_t> step_of;
    Trace t;
    t.hypotheses = hyps_;
    for (auto id : needed) {
      const auto& f = facts_[id];
      TraceStep s{f.formula, f.kind, f.index, {}, f.sigma};
      for (auto p : f.parents) s.from.push_back(step_of.at(p));
      step_of[id] = t.steps.size();
      t.steps.push_back(std::move(s));
    }
    return t;
  }

  const LogicPresentation& l_;
  std::vector<Formula> gamma_;
  Formula goal_;
  Budget b_;
  std::vector<Rule> hyps_;
  std::vector<RuleInfo> rules_;
  std::vector<std::size_t> axiom_slots_;

  std::vector<Fact> facts_;
  std::unordered_map<Formula, std::size_t, FormulaHash> index_;
  std::map<std::string, std::vector<std::size_t>> by_symbol_;
  std::vector<Formula> universe_;
  std::unordered_set<Formula, FormulaHash> universe_set_;
  bool done_ = false;
  std::size_t goal_id_ = 0;
};

}  // namespace aalg
