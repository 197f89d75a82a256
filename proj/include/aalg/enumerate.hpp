#pragma once

#include <limits>

#include "aalg/syntax.hpp"

namespace aalg {

/// All formulas over `sig` whose variables lie in {x0..x_{nvars-1}} and whose
/// depth is at most `max_depth`, in canonical order. Throws if more than
/// `limit` formulas would be produced.
inline std::vector<Formula> enumerate_formulas(const Signature& sig, unsigned nvars, unsigned max_depth,
                                               std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  std::vector<Formula> all;
  std::vector<std::vector<Formula>> by_depth(max_depth + 1);
  for (unsigned v = 0; v < nvars; ++v) by_depth[0].push_back(Formula::var(v));
  all = by_depth[0];

  auto guard = [&] {
    if (all.size() > limit) {
      throw Error("formula enumeration exceeds limit of " + std::to_string(limit));
    }
  };

  for (unsigned d = 1; d <= max_depth; ++d) {
    // pool of formulas of depth < d; at least one argument must have depth d-1
    std::vector<Formula> pool;
    for (unsigned e = 0; e < d; ++e) pool.insert(pool.end(), by_depth[e].begin(), by_depth[e].end());
    for (const auto& s : sig.symbols()) {
      if (s.arity == 0) {
        if (d == 1) by_depth[1].push_back(Formula::app(s.name));
        continue;
      }
      if (pool.empty()) continue;
      std::vector<std::size_t> idx(s.arity, 0);
      while (true) {
        bool top = false;
        for (auto i : idx) top = top || pool[i].depth() == d - 1;
        if (top) {
          std::vector<Formula> args;
          args.reserve(s.arity);
          for (auto i : idx) args.push_back(pool[i]);
          by_depth[d].push_back(Formula::app(s.name, std::move(args)));
          if (all.size() + by_depth[d].size() > limit) {
            throw Error("formula enumeration exceeds limit of " + std::to_string(limit));
          }
        }
        std::size_t p = s.arity;
        while (p > 0) {
          --p;
          if (++idx[p] < pool.size()) break;
          idx[p] = 0;
          if (p == 0) goto done;
        }
      }
    done:;
    }
    all.insert(all.end(), by_depth[d].begin(), by_depth[d].end());
    guard();
  }
  std::sort(all.begin(), all.end(), CanonicalLess{});
  return all;
}

}  // namespace aalg
