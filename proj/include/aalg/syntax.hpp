#pragma once

// Signatures, formulas, substitutions and signature morphisms (strict and
// flexible) together with their homomorphic extensions.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace aalg {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised whenever a formula, algebra or morphism is used against a signature
/// it does not belong to.
class SignatureMismatch : public Error {
public:
  using Error::Error;
};

struct Symbol {
  std::string name;
  unsigned arity = 0;

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// A finite arity-graded family of connective symbols. Symbol names are
/// pairwise distinct across all arities; declaration order is kept and is the
/// order used for operation tables.
class Signature {
public:
  Signature() = default;

  Signature(std::string name, std::vector<Symbol> symbols)
      : name_(std::move(name)), symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (!index_.emplace(symbols_[i].name, i).second) {
        throw Error("signature " + name_ + ": duplicate symbol '" + symbols_[i].name + "'");
      }
    }
  }

  const std::string& name() const { return name_; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }

  std::optional<std::size_t> index_of(std::string_view sym) const {
    auto it = index_.find(std::string(sym));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(std::string_view sym) const { return index_of(sym).has_value(); }

  const Symbol& at(std::string_view sym) const {
    auto i = index_of(sym);
    if (!i) throw SignatureMismatch("symbol '" + std::string(sym) + "' is not in signature " + name_);
    return symbols_[*i];
  }

  unsigned max_arity() const {
    unsigned m = 0;
    for (const auto& s : symbols_) m = std::max(m, s.arity);
    return m;
  }

  /// Same symbols with the same arities in the same order; the name is ignored.
  bool same_symbols(const Signature& other) const { return symbols_ == other.symbols_; }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.name_ == b.name_ && a.symbols_ == b.symbols_;
  }

private:
  std::string name_;
  std::vector<Symbol> symbols_;
  std::unordered_map<std::string, std::size_t> index_;
};

inline void require_same_symbols(const Signature& a, const Signature& b, std::string_view what) {
  if (!a.same_symbols(b)) {
    throw SignatureMismatch(std::string(what) + ": signatures " + a.name() + " and " + b.name() +
                            " differ");
  }
}

using VarIndex = std::uint32_t;

/// Immutable formula tree: either a variable x_i or a symbol applied to
/// arguments. Nodes are shared; equality is structural.
class Formula {
public:
  Formula() : Formula(var(0)) {}

  static Formula var(VarIndex i) {
    auto n = std::make_shared<Node>();
    n->is_var = true;
    n->var = i;
    n->hash = std::hash<std::uint64_t>{}(0x9e3779b97f4a7c15ULL ^ i);
    n->depth = 0;
    n->size = 1;
    return Formula(std::move(n));
  }

  static Formula app(std::string symbol, std::vector<Formula> args = {}) {
    auto n = std::make_shared<Node>();
    n->is_var = false;
    std::size_t h = std::hash<std::string>{}(symbol);
    unsigned d = 0;
    std::size_t sz = 1;
    for (const auto& a : args) {
      h = h * 1000003u ^ a.hash();
      d = std::max(d, a.depth());
      sz += a.size();
    }
    n->symbol = std::move(symbol);
    n->args = std::move(args);
    n->hash = h;
    n->depth = d + 1;
    n->size = sz;
    return Formula(std::move(n));
  }

  bool is_var() const { return node_->is_var; }
  VarIndex var_index() const { return node_->var; }
  const std::string& symbol() const { return node_->symbol; }
  const std::vector<Formula>& args() const { return node_->args; }
  std::size_t hash() const { return node_->hash; }
  /// Variables have depth 0; an application has depth 1 + max depth of its
  /// arguments, so constants have depth 1.
  unsigned depth() const { return node_->depth; }
  std::size_t size() const { return node_->size; }

  bool same_node(const Formula& o) const { return node_ == o.node_; }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.size() != b.size()) return false;
    if (a.is_var() != b.is_var()) return false;
    if (a.is_var()) return a.var_index() == b.var_index();
    if (a.symbol() != b.symbol() || a.args().size() != b.args().size()) return false;
    for (std::size_t i = 0; i < a.args().size(); ++i) {
      if (!(a.args()[i] == b.args()[i])) return false;
    }
    return true;
  }

private:
  struct Node {
    bool is_var = true;
    VarIndex var = 0;
    std::string symbol;
    std::vector<Formula> args;
    std::size_t hash = 0;
    unsigned depth = 0;
    std::size_t size = 1;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

/// Structural order: variables before applications, variables by index,
/// applications by symbol name then arguments.
inline std::strong_ordering structural_compare(const Formula& a, const Formula& b) {
  if (a.same_node(b)) return std::strong_ordering::equal;
  if (a.is_var() != b.is_var()) return a.is_var() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_var()) return a.var_index() <=> b.var_index();
  if (auto c = a.symbol().compare(b.symbol()); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto c = a.args().size() <=> b.args().size(); c != 0) return c;
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    if (auto c = structural_compare(a.args()[i], b.args()[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

/// Canonical enumeration order: depth, then size, then structure.
inline std::strong_ordering canonical_compare(const Formula& a, const Formula& b) {
  if (auto c = a.depth() <=> b.depth(); c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return structural_compare(a, b);
}

struct CanonicalLess {
  bool operator()(const Formula& a, const Formula& b) const { return canonical_compare(a, b) < 0; }
};

inline std::string to_string(const Formula& f) {
  if (f.is_var()) return "x" + std::to_string(f.var_index());
  std::string out = f.symbol() + "(";
  for (std::size_t i = 0; i < f.args().size(); ++i) {
    if (i) out += ", ";
    out += to_string(f.args()[i]);
  }
  return out + ")";
}

inline void collect_vars(const Formula& f, std::set<VarIndex>& out) {
  if (f.is_var()) {
    out.insert(f.var_index());
    return;
  }
  for (const auto& a : f.args()) collect_vars(a, out);
}

inline std::set<VarIndex> vars(const Formula& f) {
  std::set<VarIndex> out;
  collect_vars(f, out);
  return out;
}

inline std::set<VarIndex> vars(std::span<const Formula> fs) {
  std::set<VarIndex> out;
  for (const auto& f : fs) collect_vars(f, out);
  return out;
}

/// Throws SignatureMismatch unless every symbol of `f` is in `sig` with the
/// arity it is applied at.
inline void require_over(const Signature& sig, const Formula& f) {
  if (f.is_var()) return;
  const Symbol& s = sig.at(f.symbol());
  if (s.arity != f.args().size()) {
    throw SignatureMismatch("symbol '" + s.name + "' has arity " + std::to_string(s.arity) +
                            " but is applied to " + std::to_string(f.args().size()) + " arguments");
  }
  for (const auto& a : f.args()) require_over(sig, a);
}

inline bool is_over(const Signature& sig, const Formula& f) {
  try {
    require_over(sig, f);
    return true;
  } catch (const SignatureMismatch&) {
    return false;
  }
}

/// Total map from variables to formulas, the identity off a finite support.
class Substitution {
public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<const VarIndex, Formula>> init) : map_(init) {}
  explicit Substitution(std::map<VarIndex, Formula> m) : map_(std::move(m)) {}

  /// Maps x_i to images[i].
  static Substitution from_vector(std::span<const Formula> images) {
    Substitution s;
    for (std::size_t i = 0; i < images.size(); ++i) s.set(static_cast<VarIndex>(i), images[i]);
    return s;
  }

  void set(VarIndex v, Formula f) { map_.insert_or_assign(v, std::move(f)); }

  Formula operator()(VarIndex v) const {
    auto it = map_.find(v);
    return it == map_.end() ? Formula::var(v) : it->second;
  }

  const std::map<VarIndex, Formula>& support() const { return map_; }
  bool empty() const { return map_.empty(); }

  friend bool operator==(const Substitution& a, const Substitution& b) {
    // identity entries x_i -> x_i are equivalent to absence
    auto trivial = [](const auto& kv) { return kv.second.is_var() && kv.second.var_index() == kv.first; };
    for (const auto& kv : a.map_) {
      if (trivial(kv)) continue;
      auto it = b.map_.find(kv.first);
      if (it == b.map_.end() || !(it->second == kv.second)) return false;
    }
    for (const auto& kv : b.map_) {
      if (trivial(kv)) continue;
      if (!a.map_.contains(kv.first)) return false;
    }
    return true;
  }

private:
  std::map<VarIndex, Formula> map_;
};

/// Homomorphic extension of a substitution: all variables replaced
/// simultaneously. Unchanged subtrees are shared with the input.
inline Formula subst(const Formula& phi, const Substitution& sigma) {
  if (phi.is_var()) return sigma(phi.var_index());
  if (phi.args().empty()) return phi;
  std::vector<Formula> args;
  args.reserve(phi.args().size());
  bool changed = false;
  for (const auto& a : phi.args()) {
    args.push_back(subst(a, sigma));
    changed = changed || !args.back().same_node(a);
  }
  if (!changed) return phi;
  return Formula::app(phi.symbol(), std::move(args));
}

/// Checked variant: every formula involved must be over `sig`.
inline Formula subst(const Signature& sig, const Formula& phi, const Substitution& sigma) {
  require_over(sig, phi);
  for (const auto& [v, f] : sigma.support()) require_over(sig, f);
  return subst(phi, sigma);
}

/// (outer * inner)(x) := subst(inner(x), outer), so that
/// subst(subst(phi, inner), outer) == subst(phi, outer * inner).
inline Substitution compose(const Substitution& outer, const Substitution& inner) {
  Substitution out;
  for (const auto& [v, f] : inner.support()) out.set(v, subst(f, outer));
  for (const auto& [v, f] : outer.support()) {
    if (!inner.support().contains(v)) out.set(v, f);
  }
  return out;
}

/// Arity-preserving symbol map f = (f_n).
class StrictMorphism {
public:
  StrictMorphism(Signature source, Signature target, std::map<std::string, std::string> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    for (const auto& [from, to] : map_) {
      const Symbol& s = source_.at(from);
      const Symbol& t = target_.at(to);
      if (s.arity != t.arity) {
        throw Error("strict morphism maps " + s.name + "/" + std::to_string(s.arity) + " to " + t.name +
                    "/" + std::to_string(t.arity));
      }
    }
  }

  const Signature& source() const { return source_; }
  const Signature& target() const { return target_; }

  const std::string& image(const std::string& sym) const {
    auto it = map_.find(sym);
    if (it == map_.end()) throw SignatureMismatch("strict morphism has no image for '" + sym + "'");
    return it->second;
  }

private:
  Signature source_;
  Signature target_;
  std::map<std::string, std::string> map_;
};

inline Formula strict_extend(const StrictMorphism& f, const Formula& phi) {
  if (phi.is_var()) return phi;
  std::vector<Formula> args;
  args.reserve(phi.args().size());
  for (const auto& a : phi.args()) args.push_back(strict_extend(f, a));
  return Formula::app(f.image(phi.symbol()), std::move(args));
}

/// Flexible signature morphism: each c_n is sent to a target formula whose
/// variables are exactly {x0, ..., x_{n-1}}.
class FlexibleMorphism {
public:
  FlexibleMorphism() = default;

  FlexibleMorphism(std::string name, Signature source, Signature target, std::map<std::string, Formula> images)
      : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    for (const auto& s : source_.symbols()) {
      auto it = images_.find(s.name);
      if (it == images_.end()) {
        throw Error("morphism " + name_ + ": no image for '" + s.name + "'");
      }
      require_over(target_, it->second);
      std::set<VarIndex> expected;
      for (unsigned i = 0; i < s.arity; ++i) expected.insert(i);
      if (vars(it->second) != expected) {
        throw Error("morphism " + name_ + ": image of " + s.name + "/" + std::to_string(s.arity) +
                    " must use exactly the variables x0..x" + std::to_string(static_cast<int>(s.arity) - 1));
      }
    }
    for (const auto& [sym, img] : images_) {
      if (!source_.contains(sym)) throw SignatureMismatch("morphism " + name_ + ": '" + sym + "' is not a source symbol");
    }
  }

  const std::string& name() const { return name_; }
  const Signature& source() const { return source_; }
  const Signature& target() const { return target_; }
  const std::map<std::string, Formula>& images() const { return images_; }

  const Formula& image(const std::string& sym) const {
    auto it = images_.find(sym);
    if (it == images_.end()) throw SignatureMismatch("morphism " + name_ + ": no image for '" + sym + "'");
    return it->second;
  }

  /// Same signatures and images, ignoring the name.
  friend bool operator==(const FlexibleMorphism& a, const FlexibleMorphism& b) {
    return a.source_.same_symbols(b.source_) && a.target_.same_symbols(b.target_) && a.images_ == b.images_;
  }

private:
  std::string name_;
  Signature source_;
  Signature target_;
  std::map<std::string, Formula> images_;
};

/// The unique extension fixing variables with
/// ext(c(psi...)) = h(c)[x_i := ext(psi_i)].
inline Formula flex_extend(const FlexibleMorphism& h, const Formula& phi) {
  if (phi.is_var()) return phi;
  const Formula& img = h.image(phi.symbol());
  std::vector<Formula> args;
  args.reserve(phi.args().size());
  for (const auto& a : phi.args()) args.push_back(flex_extend(h, a));
  return subst(img, Substitution::from_vector(args));
}

inline FlexibleMorphism flex_identity(const Signature& sig) {
  std::map<std::string, Formula> images;
  for (const auto& s : sig.symbols()) {
    std::vector<Formula> args;
    for (unsigned i = 0; i < s.arity; ++i) args.push_back(Formula::var(i));
    images.emplace(s.name, Formula::app(s.name, std::move(args)));
  }
  return FlexibleMorphism("id_" + sig.name(), sig, sig, std::move(images));
}

/// (h2 . h1)(c) = flex_extend(h2, h1(c)).
inline FlexibleMorphism flex_compose(const FlexibleMorphism& h2, const FlexibleMorphism& h1) {
  require_same_symbols(h1.target(), h2.source(), "flex_compose");
  std::map<std::string, Formula> images;
  for (const auto& [sym, img] : h1.images()) images.emplace(sym, flex_extend(h2, img));
  return FlexibleMorphism(h2.name() + "." + h1.name(), h1.source(), h2.target(), std::move(images));
}

struct Equation {
  Formula lhs;
  Formula rhs;

  friend bool operator==(const Equation&, const Equation&) = default;
};

struct QuasiIdentity {
  std::vector<Equation> premises;
  Equation conclusion;

  friend bool operator==(const QuasiIdentity&, const QuasiIdentity&) = default;
};

inline std::string to_string(const Equation& e) { return to_string(e.lhs) + " == " + to_string(e.rhs); }

inline std::string to_string(const QuasiIdentity& q) {
  std::string out;
  for (std::size_t i = 0; i < q.premises.size(); ++i) {
    if (i) out += " & ";
    out += to_string(q.premises[i]);
  }
  if (!q.premises.empty()) out += " -> ";
  return out + to_string(q.conclusion);
}

inline std::set<VarIndex> vars(const QuasiIdentity& q) {
  std::set<VarIndex> out;
  for (const auto& e : q.premises) {
    collect_vars(e.lhs, out);
    collect_vars(e.rhs, out);
  }
  collect_vars(q.conclusion.lhs, out);
  collect_vars(q.conclusion.rhs, out);
  return out;
}

inline void require_over(const Signature& sig, const QuasiIdentity& q) {
  for (const auto& e : q.premises) {
    require_over(sig, e.lhs);
    require_over(sig, e.rhs);
  }
  require_over(sig, q.conclusion.lhs);
  require_over(sig, q.conclusion.rhs);
}

/// Convenience builders used throughout the corpus and tests.
inline Formula x(VarIndex i) { return Formula::var(i); }

template <class... Args>
Formula op(std::string symbol, Args&&... args) {
  return Formula::app(std::move(symbol), std::vector<Formula>{std::forward<Args>(args)...});
}

}  // namespace aalg
