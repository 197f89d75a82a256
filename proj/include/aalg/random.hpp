#pragma once

// Seeded generators for signatures, formulas, morphisms and algebras. Used by
// the property tests and the `laws` command.

#include <random>

#include "aalg/finalg.hpp"

namespace aalg {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

/// Up to `max_symbols` symbols of arity <= 2, always including one nullary and
/// one binary symbol so that every arity has some formula with exactly the
/// variables x0..x_{n-1}.
inline Signature random_signature(Rng& rng, const std::string& name, std::size_t max_symbols = 3) {
  std::vector<Symbol> syms{{name + "_c", 0}, {name + "_b", 2}};
  std::size_t extra = max_symbols > 2 ? pick(rng, max_symbols - 1) : 0;
  for (std::size_t i = 0; i < extra; ++i) {
    syms.push_back({name + "_f" + std::to_string(i), static_cast<unsigned>(pick(rng, 3))});
  }
  std::shuffle(syms.begin(), syms.end(), rng);
  return Signature(name, std::move(syms));
}

inline Formula random_formula(Rng& rng, const Signature& sig, unsigned nvars, unsigned max_depth) {
  std::vector<const Symbol*> usable;
  for (const auto& s : sig.symbols()) usable.push_back(&s);
  bool leaf = max_depth == 0 || pick(rng, 3) == 0;
  if (leaf && nvars > 0) return Formula::var(static_cast<VarIndex>(pick(rng, nvars)));
  if (max_depth == 0 || usable.empty()) {
    if (nvars == 0) throw Error("random_formula: no leaves available");
    return Formula::var(static_cast<VarIndex>(pick(rng, nvars)));
  }
  if (nvars == 0) {
    // avoid dead ends: only constants or symbols applied to constant terms
    std::erase_if(usable, [&](const Symbol* s) { return s->arity > 0 && max_depth < 2; });
    bool has_const = std::any_of(sig.symbols().begin(), sig.symbols().end(), [](const Symbol& s) { return s.arity == 0; });
    if (!has_const) throw Error("random_formula: signature has no constants");
  }
  const Symbol& s = *usable[pick(rng, usable.size())];
  std::vector<Formula> args;
  for (unsigned i = 0; i < s.arity; ++i) args.push_back(random_formula(rng, sig, nvars, max_depth - 1));
  return Formula::app(s.name, std::move(args));
}

/// A flexible morphism whose images have depth <= max_depth. Images are
/// resampled until their variables are exactly x0..x_{n-1}; after repeated
/// failure a minimal image is built from the binary and nullary symbols.
inline FlexibleMorphism random_morphism(Rng& rng, const std::string& name, const Signature& source,
                                        const Signature& target, unsigned max_depth = 2) {
  const Symbol* binary = nullptr;
  const Symbol* constant = nullptr;
  for (const auto& s : target.symbols()) {
    if (s.arity == 2 && !binary) binary = &s;
    if (s.arity == 0 && !constant) constant = &s;
  }
  std::map<std::string, Formula> images;
  for (const auto& s : source.symbols()) {
    std::set<VarIndex> want;
    for (unsigned i = 0; i < s.arity; ++i) want.insert(i);
    std::optional<Formula> img;
    for (int attempt = 0; attempt < 50 && !img; ++attempt) {
      try {
        auto f = random_formula(rng, target, s.arity, max_depth);
        if (vars(f) == want) img = f;
      } catch (const Error&) {
      }
    }
    if (!img) {
      if (s.arity == 0 && constant) {
        img = Formula::app(constant->name);
      } else if (s.arity == 1) {
        img = Formula::var(0);
      } else if (binary) {
        Formula acc = Formula::var(0);
        for (unsigned i = 1; i < s.arity; ++i) acc = Formula::app(binary->name, {acc, Formula::var(i)});
        img = acc;
      } else {
        throw Error("random_morphism: target cannot express arity " + std::to_string(s.arity));
      }
    }
    images.emplace(s.name, *img);
  }
  return FlexibleMorphism(name, source, target, std::move(images));
}

inline FiniteAlgebra random_algebra(Rng& rng, const std::string& name, const Signature& sig, Element max_carrier) {
  Element k = static_cast<Element>(1 + pick(rng, max_carrier));
  std::vector<std::vector<Element>> tables;
  for (const auto& s : sig.symbols()) {
    std::vector<Element> t(ipow(k, s.arity));
    for (auto& e : t) e = static_cast<Element>(pick(rng, k));
    tables.push_back(std::move(t));
  }
  return FiniteAlgebra(name, sig, k, std::move(tables));
}

}  // namespace aalg
