#pragma once

// Finite countermodel search: a matrix that validates a presentation and an
// assignment that designates the premises but not the goal. Operation table
// cells, designation bits and the query assignment are decided lazily by a
// backtracking search over partially defined tables.

#include <random>

#include "aalg/verdict.hpp"

namespace aalg {

namespace detail {

class MatrixSearch {
public:
  MatrixSearch(const LogicPresentation& l, std::span<const Formula> gamma, const Formula& phi, Element k,
               const Budget& b)
      : l_(l), sig_(l.signature()), k_(k), b_(b) {
    for (const auto& s : sig_.symbols()) {
      base_.push_back(ncells_);
      ncells_ += ipow(k_, s.arity);
    }
    std::set<VarIndex> qv = vars(gamma);
    collect_vars(phi, qv);
    query_vars_.assign(qv.begin(), qv.end());
    // decision variables: designation bits, query variables, table cells
    nvars_ = k_ + query_vars_.size() + ncells_;
    value_.assign(nvars_, -1);

    for (const auto& g : gamma) add_query(g, true);
    add_query(phi, false);
    for (const auto& a : l_.axioms()) {
      auto prog = compile(a);
      auto vs = vars(a);
      for_each_assignment(k_, vs, [&](std::span<const Element> env) {
        constraints_.push_back({Kind::axiom, {}, prog, false, {env.begin(), env.end()}});
        return true;
      });
    }
    for (const auto& r : l_.rules()) {
      std::vector<Program> prem;
      for (const auto& p : r.premises) prem.push_back(compile(p));
      auto concl = compile(r.conclusion);
      std::set<VarIndex> vs = vars(r.premises);
      collect_vars(r.conclusion, vs);
      for_each_assignment(k_, vs, [&](std::span<const Element> env) {
        constraints_.push_back({Kind::rule, prem, concl, false, {env.begin(), env.end()}});
        return true;
      });
    }
    if (b_.seed) rng_.seed(*b_.seed + k_);
  }

  std::optional<MatrixWitness> run() {
    std::vector<std::uint32_t> open(constraints_.size());
    std::iota(open.begin(), open.end(), 0);
    if (!dfs(open)) return std::nullopt;
    std::vector<std::vector<Element>> tables;
    for (std::size_t s = 0; s < sig_.size(); ++s) {
      std::vector<Element> t(ipow(k_, sig_.symbols()[s].arity));
      for (std::size_t c = 0; c < t.size(); ++c) {
        int v = value_[cell_var(s, c)];
        t[c] = v < 0 ? 0 : static_cast<Element>(v);
      }
      tables.push_back(std::move(t));
    }
    std::set<Element> d;
    for (Element e = 0; e < k_; ++e) {
      if (value_[e] == 1) d.insert(e);
    }
    MatrixWitness w{Matrix(FiniteAlgebra("M" + std::to_string(k_), sig_, k_, std::move(tables)), d), {}};
    for (std::size_t i = 0; i < query_vars_.size(); ++i) {
      int v = value_[k_ + i];
      w.assignment[query_vars_[i]] = v < 0 ? 0 : static_cast<Element>(v);
    }
    return w;
  }

  std::size_t nodes() const { return nodes_; }
  bool exhausted() const { return nodes_ >= b_.max_search_nodes; }

private:
  struct Instr {
    int symbol;  // -1: variable
    std::uint32_t operand;
  };
  using Program = std::shared_ptr<const std::vector<Instr>>;

  enum class Kind { query_premise, query_goal, axiom, rule };

  struct Constraint {
    Kind kind;
    std::vector<Program> premises;
    Program term;
    bool query = false;
    std::vector<Element> env;
  };

  static constexpr int kBlocked = -1;

  Program compile(const Formula& f) const {
    auto out = std::make_shared<std::vector<Instr>>();
    std::function<void(const Formula&)> go = [&](const Formula& g) {
      if (g.is_var()) {
        out->push_back({-1, g.var_index()});
        return;
      }
      for (const auto& a : g.args()) go(a);
      out->push_back({static_cast<int>(*sig_.index_of(g.symbol())), static_cast<std::uint32_t>(g.args().size())});
    };
    go(f);
    return out;
  }

  void add_query(const Formula& f, bool premise) {
    Constraint c{premise ? Kind::query_premise : Kind::query_goal, {}, compile(f), true, {}};
    constraints_.push_back(std::move(c));
  }

  std::size_t cell_var(std::size_t sym, std::size_t offset) const { return k_ + query_vars_.size() + base_[sym] + offset; }

  std::size_t query_var(VarIndex v) const {
    auto it = std::lower_bound(query_vars_.begin(), query_vars_.end(), v);
    return k_ + static_cast<std::size_t>(it - query_vars_.begin());
  }

  /// Element denoted by the program, or kBlocked with `block` set to the
  /// undecided variable that is needed first.
  int eval(const Program& p, const Constraint& c, std::size_t& block) {
    stack_.clear();
    for (const auto& ins : *p) {
      if (ins.symbol < 0) {
        if (c.query) {
          std::size_t dv = query_var(ins.operand);
          if (value_[dv] < 0) {
            block = dv;
            return kBlocked;
          }
          stack_.push_back(value_[dv]);
        } else {
          stack_.push_back(static_cast<int>(c.env[ins.operand]));
        }
        continue;
      }
      std::size_t idx = 0;
      std::size_t first = stack_.size() - ins.operand;
      for (std::size_t i = first; i < stack_.size(); ++i) idx = idx * k_ + static_cast<std::size_t>(stack_[i]);
      stack_.resize(first);
      std::size_t dv = cell_var(static_cast<std::size_t>(ins.symbol), idx);
      if (value_[dv] < 0) {
        block = dv;
        return kBlocked;
      }
      stack_.push_back(value_[dv]);
    }
    return stack_.back();
  }

  /// 1 designated, 0 not, kBlocked undecided.
  int designation(const Program& p, const Constraint& c, std::size_t& block) {
    int e = eval(p, c, block);
    if (e == kBlocked) return kBlocked;
    if (value_[e] < 0) {
      block = static_cast<std::size_t>(e);
      return kBlocked;
    }
    return value_[e];
  }

  enum class State { satisfied, violated, blocked };

  State check(const Constraint& c, std::size_t& block) {
    switch (c.kind) {
      case Kind::query_premise:
      case Kind::axiom: {
        int d = designation(c.term, c, block);
        return d == kBlocked ? State::blocked : d == 1 ? State::satisfied : State::violated;
      }
      case Kind::query_goal: {
        int d = designation(c.term, c, block);
        return d == kBlocked ? State::blocked : d == 0 ? State::satisfied : State::violated;
      }
      case Kind::rule: {
        bool blocked = false;
        std::size_t first_block = 0;
        for (const auto& p : c.premises) {
          std::size_t bl = 0;
          int d = designation(p, c, bl);
          if (d == 0) return State::satisfied;
          if (d == kBlocked && !blocked) {
            blocked = true;
            first_block = bl;
          }
        }
        std::size_t bl = 0;
        int d = designation(c.term, c, bl);
        if (d == 1) return State::satisfied;
        if (blocked) {
          block = first_block;
          return State::blocked;
        }
        if (d == kBlocked) {
          block = bl;
          return State::blocked;
        }
        return State::violated;
      }
    }
    return State::violated;
  }

  int domain(std::size_t var) const { return var < k_ ? 2 : static_cast<int>(k_); }

  bool dfs(const std::vector<std::uint32_t>& open) {
    if (++nodes_ > b_.max_search_nodes) return false;
    std::vector<std::uint32_t> still;
    std::optional<std::size_t> branch;
    for (auto ci : open) {
      std::size_t block = 0;
      switch (check(constraints_[ci], block)) {
        case State::violated: return false;
        case State::satisfied: break;
        case State::blocked:
          still.push_back(ci);
          if (!branch) branch = block;
          break;
      }
    }
    if (!branch) return true;
    std::vector<int> order(domain(*branch));
    std::iota(order.begin(), order.end(), 0);
    if (*branch < k_) std::reverse(order.begin(), order.end());
    if (b_.seed) std::shuffle(order.begin(), order.end(), rng_);
    for (int v : order) {
      value_[*branch] = v;
      if (dfs(still)) return true;
      if (nodes_ > b_.max_search_nodes) break;
    }
    value_[*branch] = -1;
    return false;
  }

  const LogicPresentation& l_;
  const Signature& sig_;
  Element k_;
  Budget b_;
  std::vector<std::size_t> base_;
  std::size_t ncells_ = 0;
  std::vector<VarIndex> query_vars_;
  std::size_t nvars_ = 0;
  std::vector<int> value_;
  std::vector<Constraint> constraints_;
  std::vector<int> stack_;
  std::size_t nodes_ = 0;
  std::mt19937_64 rng_;
};

}  // namespace detail

/// Smallest-carrier countermodel up to `b.max_carrier`, checked before it is
/// returned.
inline std::optional<MatrixWitness> search_countermodel(const LogicPresentation& l, std::span<const Formula> gamma,
                                                        const Formula& phi, const Budget& b) {
  for (Element k = 1; k <= b.max_carrier; ++k) {
    detail::MatrixSearch s(l, gamma, phi, k, b);
    if (auto w = s.run()) {
      if (check_witness(l, gamma, phi, *w)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace aalg
