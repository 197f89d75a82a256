#pragma once

// Finite algebras over a signature: term evaluation, quasi-identity
// satisfaction, homomorphisms, congruences, quotients, products and
// subalgebras. Elements are the integers 0..k-1.

#include <numeric>
#include <set>

#include "aalg/syntax.hpp"

namespace aalg {

using Element = std::uint32_t;
using Assignment = std::map<VarIndex, Element>;

inline std::size_t ipow(std::size_t base, unsigned exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

class FiniteAlgebra {
public:
  FiniteAlgebra() = default;

  /// `tables[i]` is the row-major operation table of `sig.symbols()[i]`.
  FiniteAlgebra(std::string name, Signature sig, Element size, std::vector<std::vector<Element>> tables)
      : name_(std::move(name)), sig_(std::move(sig)), size_(size), tables_(std::move(tables)) {
    if (size_ == 0) throw Error("algebra " + name_ + ": carrier must be nonempty");
    if (tables_.size() != sig_.size()) {
      throw Error("algebra " + name_ + ": expected " + std::to_string(sig_.size()) + " tables, got " +
                  std::to_string(tables_.size()));
    }
    for (std::size_t i = 0; i < tables_.size(); ++i) {
      const auto& s = sig_.symbols()[i];
      if (tables_[i].size() != ipow(size_, s.arity)) {
        throw Error("algebra " + name_ + ": table for " + s.name + " has " + std::to_string(tables_[i].size()) +
                    " entries, expected " + std::to_string(ipow(size_, s.arity)));
      }
      for (Element e : tables_[i]) {
        if (e >= size_) throw Error("algebra " + name_ + ": entry " + std::to_string(e) + " out of carrier in " + s.name);
      }
    }
  }

  /// Builds tables by calling `fn(symbol, args)` for every argument tuple.
  template <class Fn>
  static FiniteAlgebra from_function(std::string name, Signature sig, Element size, Fn&& fn) {
    std::vector<std::vector<Element>> tables;
    for (const auto& s : sig.symbols()) {
      std::vector<Element> t(ipow(size, s.arity));
      std::vector<Element> args(s.arity, 0);
      for (std::size_t idx = 0; idx < t.size(); ++idx) {
        std::size_t rem = idx;
        for (unsigned p = s.arity; p-- > 0;) {
          args[p] = static_cast<Element>(rem % size);
          rem /= size;
        }
        t[idx] = fn(s, std::span<const Element>(args));
      }
      tables.push_back(std::move(t));
    }
    return FiniteAlgebra(std::move(name), std::move(sig), size, std::move(tables));
  }

  const std::string& name() const { return name_; }
  const Signature& signature() const { return sig_; }
  Element size() const { return size_; }
  const std::vector<std::vector<Element>>& tables() const { return tables_; }
  const std::vector<Element>& table(std::size_t sym) const { return tables_.at(sym); }
  const std::vector<Element>& table(std::string_view sym) const { return tables_[index_of(sym)]; }

  std::size_t index_of(std::string_view sym) const {
    auto i = sig_.index_of(sym);
    if (!i) throw SignatureMismatch("symbol '" + std::string(sym) + "' is not interpreted in algebra " + name_);
    return *i;
  }

  std::size_t offset(std::span<const Element> args) const {
    std::size_t idx = 0;
    for (Element a : args) idx = idx * size_ + a;
    return idx;
  }

  Element apply(std::size_t sym, std::span<const Element> args) const { return tables_[sym][offset(args)]; }

  FiniteAlgebra renamed(std::string name) const {
    FiniteAlgebra a = *this;
    a.name_ = std::move(name);
    return a;
  }

  /// Table equality over the same symbols; names are ignored.
  friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    return a.size_ == b.size_ && a.sig_.same_symbols(b.sig_) && a.tables_ == b.tables_;
  }

private:
  std::string name_;
  Signature sig_;
  Element size_ = 1;
  std::vector<std::vector<Element>> tables_;
};

/// Iterates over every tuple in {0..k-1}^n in lexicographic order.
template <class Fn>
void for_each_tuple(Element k, std::size_t n, Fn&& fn) {
  std::vector<Element> t(n, 0);
  while (true) {
    fn(std::span<const Element>(t));
    std::size_t p = n;
    while (p > 0) {
      --p;
      if (++t[p] < k) break;
      t[p] = 0;
      if (p == 0) return;
    }
    if (n == 0) return;
  }
}

/// A formula flattened to postfix with symbols resolved against one algebra
/// signature; evaluation is a tight stack loop.
class CompiledTerm {
public:
  CompiledTerm(const Signature& sig, const Formula& f) { compile(sig, f); }

  Element eval(const FiniteAlgebra& a, std::span<const Element> env, std::vector<Element>& stack) const {
    stack.clear();
    for (const auto& ins : code_) {
      if (ins.symbol < 0) {
        stack.push_back(env[ins.operand]);
        continue;
      }
      const auto& table = a.table(static_cast<std::size_t>(ins.symbol));
      std::size_t idx = 0;
      std::size_t base = stack.size() - ins.operand;
      for (std::size_t i = base; i < stack.size(); ++i) idx = idx * a.size() + stack[i];
      stack.resize(base);
      stack.push_back(table[idx]);
    }
    return stack.back();
  }

  Element eval(const FiniteAlgebra& a, std::span<const Element> env) const {
    std::vector<Element> stack;
    return eval(a, env, stack);
  }

private:
  struct Instr {
    int symbol;         // -1 for a variable
    std::uint32_t operand;  // variable index or arity
  };

  void compile(const Signature& sig, const Formula& f) {
    if (f.is_var()) {
      code_.push_back({-1, f.var_index()});
      return;
    }
    for (const auto& a : f.args()) compile(sig, a);
    auto i = sig.index_of(f.symbol());
    if (!i) throw SignatureMismatch("symbol '" + f.symbol() + "' is not in signature " + sig.name());
    if (sig.symbols()[*i].arity != f.args().size()) {
      throw SignatureMismatch("symbol '" + f.symbol() + "' applied with wrong arity");
    }
    code_.push_back({static_cast<int>(*i), static_cast<std::uint32_t>(f.args().size())});
  }

  std::vector<Instr> code_;
};

inline Element eval(const FiniteAlgebra& a, const Formula& phi, std::span<const Element> env) {
  if (phi.is_var()) {
    if (phi.var_index() >= env.size()) {
      throw Error("eval: variable x" + std::to_string(phi.var_index()) + " is not assigned");
    }
    Element e = env[phi.var_index()];
    if (e >= a.size()) throw Error("eval: assigned element out of carrier");
    return e;
  }
  std::size_t sym = a.index_of(phi.symbol());
  if (a.signature().symbols()[sym].arity != phi.args().size()) {
    throw SignatureMismatch("eval: symbol '" + phi.symbol() + "' applied with wrong arity");
  }
  std::size_t idx = 0;
  for (const auto& arg : phi.args()) idx = idx * a.size() + eval(a, arg, env);
  return a.table(sym)[idx];
}

inline Element eval(const FiniteAlgebra& a, const Formula& phi, const Assignment& env) {
  std::vector<Element> dense;
  for (auto v : vars(phi)) {
    auto it = env.find(v);
    if (it == env.end()) throw Error("eval: variable x" + std::to_string(v) + " is not assigned");
    if (dense.size() <= v) dense.resize(v + 1, 0);
    dense[v] = it->second;
  }
  return eval(a, phi, std::span<const Element>(dense));
}

/// Calls fn(env) for every assignment of the listed variables into {0..k-1};
/// env is dense and indexed by variable. Stops early when fn returns false.
template <class Fn>
bool for_each_assignment(Element k, const std::set<VarIndex>& vs, Fn&& fn) {
  std::vector<VarIndex> order(vs.begin(), vs.end());
  std::vector<Element> env(order.empty() ? 0 : order.back() + 1, 0);
  while (true) {
    if (!fn(std::span<const Element>(env))) return false;
    std::size_t p = order.size();
    while (p > 0) {
      --p;
      if (++env[order[p]] < k) break;
      env[order[p]] = 0;
      if (p == 0) return true;
    }
    if (order.empty()) return true;
  }
}

inline Assignment to_assignment(const std::set<VarIndex>& vs, std::span<const Element> env) {
  Assignment out;
  for (auto v : vs) out[v] = env[v];
  return out;
}

/// First assignment (in lexicographic order) where the premises hold and the
/// conclusion fails, if any.
inline std::optional<Assignment> find_violation(const FiniteAlgebra& a, const QuasiIdentity& q) {
  const auto& sig = a.signature();
  std::vector<std::pair<CompiledTerm, CompiledTerm>> prem;
  for (const auto& e : q.premises) prem.emplace_back(CompiledTerm(sig, e.lhs), CompiledTerm(sig, e.rhs));
  CompiledTerm cl(sig, q.conclusion.lhs), cr(sig, q.conclusion.rhs);
  auto vs = vars(q);
  std::optional<Assignment> witness;
  std::vector<Element> stack;
  for_each_assignment(a.size(), vs, [&](std::span<const Element> env) {
    for (const auto& [l, r] : prem) {
      if (l.eval(a, env, stack) != r.eval(a, env, stack)) return true;
    }
    if (cl.eval(a, env, stack) != cr.eval(a, env, stack)) {
      witness = to_assignment(vs, env);
      return false;
    }
    return true;
  });
  return witness;
}

inline bool satisfies(const FiniteAlgebra& a, const QuasiIdentity& q) {
  require_over(a.signature(), q);
  return !find_violation(a, q).has_value();
}

inline bool is_hom(const FiniteAlgebra& a, const FiniteAlgebra& b, std::span<const Element> g) {
  require_same_symbols(a.signature(), b.signature(), "is_hom");
  if (g.size() != a.size()) return false;
  for (Element e : g) {
    if (e >= b.size()) return false;
  }
  bool ok = true;
  std::vector<Element> img;
  for (std::size_t s = 0; s < a.signature().size() && ok; ++s) {
    const unsigned n = a.signature().symbols()[s].arity;
    for_each_tuple(a.size(), n, [&](std::span<const Element> t) {
      if (!ok) return;
      img.assign(n, 0);
      for (unsigned i = 0; i < n; ++i) img[i] = g[t[i]];
      if (g[a.apply(s, t)] != b.apply(s, img)) ok = false;
    });
  }
  return ok;
}

/// All homomorphisms A -> B as element maps, in lexicographic order.
inline std::vector<std::vector<Element>> homs(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  require_same_symbols(a.signature(), b.signature(), "homs");
  const Element k = a.size();
  // Each table entry is checked once the largest element among its arguments
  // and result has been assigned.
  struct Entry {
    std::size_t sym;
    std::vector<Element> args;
    Element result;
  };
  std::vector<std::vector<Entry>> checks(k);
  for (std::size_t s = 0; s < a.signature().size(); ++s) {
    const unsigned n = a.signature().symbols()[s].arity;
    for_each_tuple(k, n, [&](std::span<const Element> t) {
      Element r = a.apply(s, t);
      Element m = r;
      for (Element e : t) m = std::max(m, e);
      checks[m].push_back({s, std::vector<Element>(t.begin(), t.end()), r});
    });
  }
  std::vector<std::vector<Element>> out;
  std::vector<Element> g(k, 0);
  std::vector<Element> img;
  auto consistent = [&](Element m) {
    for (const auto& c : checks[m]) {
      img.resize(c.args.size());
      for (std::size_t i = 0; i < c.args.size(); ++i) img[i] = g[c.args[i]];
      if (b.apply(c.sym, img) != g[c.result]) return false;
    }
    return true;
  };
  std::function<void(Element)> go = [&](Element m) {
    if (m == k) {
      out.push_back(g);
      return;
    }
    for (Element v = 0; v < b.size(); ++v) {
      g[m] = v;
      if (consistent(m)) go(m + 1);
    }
  };
  go(0);
  return out;
}

inline bool isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.size() != b.size() || !a.signature().same_symbols(b.signature())) return false;
  for (const auto& g : homs(a, b)) {
    std::set<Element> img(g.begin(), g.end());
    if (img.size() == a.size()) return true;
  }
  return false;
}

/// An equivalence on the carrier stored as a map to the least member of each
/// block. Compatibility with the operations is checked where it matters
/// (quotient, is_congruence); the type itself only guarantees a partition.
class Congruence {
public:
  Congruence() = default;

  static Congruence diagonal(Element k) {
    Congruence c;
    c.rep_.resize(k);
    std::iota(c.rep_.begin(), c.rep_.end(), 0);
    return c;
  }

  static Congruence total(Element k) {
    Congruence c;
    c.rep_.assign(k, 0);
    return c;
  }

  /// From any block labelling (label[a] == label[b] iff related).
  template <class Labels>
  static Congruence from_labels(const Labels& label) {
    Congruence c;
    c.rep_.resize(label.size());
    std::map<std::size_t, Element> first;
    for (Element a = 0; a < label.size(); ++a) {
      auto [it, fresh] = first.emplace(static_cast<std::size_t>(label[a]), a);
      c.rep_[a] = it->second;
    }
    return c;
  }

  static Congruence from_blocks(Element k, const std::vector<std::vector<Element>>& blocks) {
    std::vector<std::size_t> label(k);
    std::iota(label.begin(), label.end(), std::size_t{k});
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (Element e : blocks[b]) label.at(e) = b;
    }
    return from_labels(label);
  }

  Element size() const { return static_cast<Element>(rep_.size()); }
  Element rep(Element a) const { return rep_[a]; }
  const std::vector<Element>& reps() const { return rep_; }
  bool related(Element a, Element b) const { return rep_[a] == rep_[b]; }

  std::size_t num_blocks() const {
    std::size_t n = 0;
    for (Element a = 0; a < rep_.size(); ++a) n += rep_[a] == a;
    return n;
  }

  std::size_t num_pairs() const {
    std::map<Element, std::size_t> count;
    for (Element r : rep_) ++count[r];
    std::size_t n = 0;
    for (auto& [r, c] : count) n += c * c;
    return n;
  }

  /// Blocks ordered by least member, members ascending.
  std::vector<std::vector<Element>> blocks() const {
    std::map<Element, std::vector<Element>> m;
    for (Element a = 0; a < rep_.size(); ++a) m[rep_[a]].push_back(a);
    std::vector<std::vector<Element>> out;
    for (auto& [r, b] : m) out.push_back(std::move(b));
    return out;
  }

  /// this ⊆ other
  bool subset_of(const Congruence& other) const {
    for (Element a = 0; a < rep_.size(); ++a) {
      if (!other.related(a, rep_[a])) return false;
    }
    return true;
  }

  bool is_diagonal() const { return num_blocks() == rep_.size(); }

  friend bool operator==(const Congruence&, const Congruence&) = default;

private:
  std::vector<Element> rep_;
};

inline bool is_congruence(const FiniteAlgebra& a, const Congruence& c) {
  if (c.size() != a.size()) return false;
  bool ok = true;
  std::vector<Element> r;
  for (std::size_t s = 0; s < a.signature().size() && ok; ++s) {
    const unsigned n = a.signature().symbols()[s].arity;
    for_each_tuple(a.size(), n, [&](std::span<const Element> t) {
      if (!ok) return;
      r.assign(t.begin(), t.end());
      for (auto& e : r) e = c.rep(e);
      if (!c.related(a.apply(s, t), a.apply(s, r))) ok = false;
    });
  }
  return ok;
}

namespace detail {

struct UnionFind {
  std::vector<Element> parent;
  explicit UnionFind(Element k) : parent(k) { std::iota(parent.begin(), parent.end(), 0); }
  Element find(Element a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace detail

/// Least congruence containing `base` and all `pairs`.
inline Congruence congruence_generated(const FiniteAlgebra& a, std::span<const std::pair<Element, Element>> pairs,
                                       const Congruence* base = nullptr) {
  detail::UnionFind uf(a.size());
  if (base) {
    for (Element e = 0; e < a.size(); ++e) uf.unite(e, base->rep(e));
  }
  for (auto [p, q] : pairs) {
    if (p >= a.size() || q >= a.size()) throw Error("congruence_generated: pair outside carrier");
    uf.unite(p, q);
  }
  bool changed = true;
  std::vector<Element> r;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < a.signature().size(); ++s) {
      const unsigned n = a.signature().symbols()[s].arity;
      if (n == 0) continue;
      for_each_tuple(a.size(), n, [&](std::span<const Element> t) {
        r.assign(t.begin(), t.end());
        for (auto& e : r) e = uf.find(e);
        changed = uf.unite(a.apply(s, t), a.apply(s, r)) || changed;
      });
    }
  }
  std::vector<Element> label(a.size());
  for (Element e = 0; e < a.size(); ++e) label[e] = uf.find(e);
  return Congruence::from_labels(label);
}

inline Congruence congruence_generated(const FiniteAlgebra& a, std::initializer_list<std::pair<Element, Element>> pairs) {
  std::vector<std::pair<Element, Element>> v(pairs);
  return congruence_generated(a, std::span<const std::pair<Element, Element>>(v));
}

inline Congruence join(const FiniteAlgebra& a, const Congruence& c1, const Congruence& c2) {
  std::vector<std::pair<Element, Element>> pairs;
  for (Element e = 0; e < a.size(); ++e) pairs.emplace_back(e, c2.rep(e));
  return congruence_generated(a, pairs, &c1);
}

inline Congruence meet(const Congruence& c1, const Congruence& c2) {
  std::vector<std::pair<Element, Element>> label(c1.size());
  for (Element e = 0; e < c1.size(); ++e) label[e] = {c1.rep(e), c2.rep(e)};
  std::map<std::pair<Element, Element>, std::size_t> ids;
  std::vector<std::size_t> flat(c1.size());
  for (Element e = 0; e < c1.size(); ++e) flat[e] = ids.emplace(label[e], ids.size()).first->second;
  return Congruence::from_labels(flat);
}

inline constexpr Element kDefaultCongruenceBound = 8;

/// Every congruence of `a`, ordered by number of related pairs then by the
/// representative map. Throws if the carrier exceeds `bound`.
inline std::vector<Congruence> all_congruences(const FiniteAlgebra& a, Element bound = kDefaultCongruenceBound) {
  if (a.size() > bound) {
    throw Error("all_congruences: carrier " + std::to_string(a.size()) + " exceeds bound " + std::to_string(bound));
  }
  auto key = [](const Congruence& c) { return std::make_pair(c.num_pairs(), c.reps()); };
  std::map<std::pair<std::size_t, std::vector<Element>>, Congruence> found;
  auto add = [&](const Congruence& c) { return found.emplace(key(c), c).second; };
  add(Congruence::diagonal(a.size()));
  std::vector<Congruence> principal;
  for (Element p = 0; p < a.size(); ++p) {
    for (Element q = p + 1; q < a.size(); ++q) {
      auto c = congruence_generated(a, {{p, q}});
      if (add(c)) principal.push_back(c);
    }
  }
  // every congruence is a join of principal ones
  std::vector<Congruence> frontier = principal;
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (const auto& c : frontier) {
      for (const auto& p : principal) {
        auto j = join(a, c, p);
        if (add(j)) next.push_back(j);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Congruence> out;
  for (auto& [k, c] : found) out.push_back(c);
  return out;
}

struct Quotient {
  FiniteAlgebra algebra;
  /// element of A -> block index in the quotient
  std::vector<Element> projection;
};

/// Blocks are numbered in order of their least member.
inline Quotient quotient(const FiniteAlgebra& a, const Congruence& c) {
  if (!is_congruence(a, c)) throw Error("quotient: partition is not compatible with the operations of " + a.name());
  std::vector<Element> block_of(a.size());
  std::vector<Element> rep_of_block;
  for (Element e = 0; e < a.size(); ++e) {
    if (c.rep(e) == e) {
      block_of[e] = static_cast<Element>(rep_of_block.size());
      rep_of_block.push_back(e);
    }
  }
  for (Element e = 0; e < a.size(); ++e) block_of[e] = block_of[c.rep(e)];
  const Element m = static_cast<Element>(rep_of_block.size());
  std::vector<Element> args;
  auto q = FiniteAlgebra::from_function(a.name() + "/theta", a.signature(), m, [&](const Symbol& s, std::span<const Element> t) {
    args.resize(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) args[i] = rep_of_block[t[i]];
    return block_of[a.apply(*a.signature().index_of(s.name), args)];
  });
  return {std::move(q), std::move(block_of)};
}

/// Pairs (a, b) are encoded as a * |B| + b.
inline FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  require_same_symbols(a.signature(), b.signature(), "product");
  const Element kb = b.size();
  std::vector<Element> la, lb;
  return FiniteAlgebra::from_function(a.name() + "x" + b.name(), a.signature(), a.size() * kb,
                                      [&](const Symbol& s, std::span<const Element> t) {
                                        la.resize(t.size());
                                        lb.resize(t.size());
                                        for (std::size_t i = 0; i < t.size(); ++i) {
                                          la[i] = t[i] / kb;
                                          lb[i] = t[i] % kb;
                                        }
                                        std::size_t sym = *a.signature().index_of(s.name);
                                        return a.apply(sym, la) * kb + b.apply(sym, lb);
                                      });
}

/// Least subuniverse containing `seed` (as a sorted element list).
inline std::vector<Element> subuniverse_generated(const FiniteAlgebra& a, std::span<const Element> seed) {
  std::vector<bool> in(a.size(), false);
  for (Element e : seed) in.at(e) = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < a.signature().size(); ++s) {
      const unsigned n = a.signature().symbols()[s].arity;
      std::vector<Element> members;
      for (Element e = 0; e < a.size(); ++e) {
        if (in[e]) members.push_back(e);
      }
      if (n > 0 && members.empty()) continue;
      std::vector<Element> args(n);
      for_each_tuple(static_cast<Element>(std::max<std::size_t>(members.size(), 1)), n, [&](std::span<const Element> t) {
        for (unsigned i = 0; i < n; ++i) args[i] = members[t[i]];
        Element r = a.apply(s, args);
        if (!in[r]) {
          in[r] = true;
          changed = true;
        }
      });
    }
  }
  std::vector<Element> out;
  for (Element e = 0; e < a.size(); ++e) {
    if (in[e]) out.push_back(e);
  }
  return out;
}

struct Subalgebra {
  FiniteAlgebra algebra;
  /// element of the subalgebra -> element of the parent
  std::vector<Element> embedding;
};

inline Subalgebra subalgebra(const FiniteAlgebra& a, std::span<const Element> seed) {
  auto members = subuniverse_generated(a, seed);
  if (members.empty()) throw Error("subalgebra: generated subuniverse of " + a.name() + " is empty");
  std::map<Element, Element> index;
  for (Element i = 0; i < members.size(); ++i) index[members[i]] = i;
  std::vector<Element> args;
  auto sub = FiniteAlgebra::from_function(a.name() + "_sub", a.signature(), static_cast<Element>(members.size()),
                                          [&](const Symbol& s, std::span<const Element> t) {
                                            args.resize(t.size());
                                            for (std::size_t i = 0; i < t.size(); ++i) args[i] = members[t[i]];
                                            return index.at(a.apply(*a.signature().index_of(s.name), args));
                                          });
  return {std::move(sub), std::move(members)};
}

/// Every nonempty subuniverse of `a`, ordered by size then lexicographically.
inline std::vector<std::vector<Element>> subuniverses(const FiniteAlgebra& a) {
  std::set<std::vector<Element>> seen;
  std::vector<std::vector<Element>> frontier;
  auto add = [&](std::vector<Element> s) {
    if (s.empty()) return;
    if (seen.insert(s).second) frontier.push_back(std::move(s));
  };
  add(subuniverse_generated(a, {}));
  for (Element e = 0; e < a.size(); ++e) {
    Element seed[] = {e};
    add(subuniverse_generated(a, seed));
  }
  while (!frontier.empty()) {
    auto cur = std::move(frontier);
    frontier.clear();
    for (const auto& s : cur) {
      for (Element e = 0; e < a.size(); ++e) {
        if (std::binary_search(s.begin(), s.end(), e)) continue;
        auto grown = s;
        grown.push_back(e);
        add(subuniverse_generated(a, grown));
      }
    }
  }
  std::vector<std::vector<Element>> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  return out;
}

}  // namespace aalg
