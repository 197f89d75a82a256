#pragma once

// JSON encodings of library results for the command-line reports.

#include <nlohmann/json.hpp>

#include "aalg/aalg.hpp"

namespace aalg::cli {

using nlohmann::json;

inline json to_json(const Formula& f) { return to_string(f); }

inline json to_json(const Equation& e) { return to_string(e); }

inline json to_json(const QuasiIdentity& q) { return to_string(q); }

inline json to_json(const Assignment& a) {
  json out = json::object();
  for (const auto& [v, e] : a) out["x" + std::to_string(v)] = e;
  return out;
}

inline json to_json(const Substitution& s) {
  json out = json::object();
  for (const auto& [v, f] : s.support()) out["x" + std::to_string(v)] = to_string(f);
  return out;
}

/// Nullary tables as a value, unary as a list, binary as rows, higher
/// arities flat row-major.
inline json table_json(const FiniteAlgebra& a, std::size_t sym) {
  const auto& t = a.table(sym);
  switch (a.signature().symbols()[sym].arity) {
    case 0: return t[0];
    case 2: {
      json rows = json::array();
      for (Element i = 0; i < a.size(); ++i) {
        rows.push_back(std::vector<Element>(t.begin() + i * a.size(), t.begin() + (i + 1) * a.size()));
      }
      return rows;
    }
    default: return t;
  }
}

inline json to_json(const FiniteAlgebra& a) {
  json ops = json::object();
  for (std::size_t i = 0; i < a.signature().size(); ++i) ops[a.signature().symbols()[i].name] = table_json(a, i);
  return {{"name", a.name()}, {"signature", a.signature().name()}, {"carrier", a.size()}, {"operations", ops}};
}

inline json to_json(const Matrix& m) {
  std::vector<Element> d;
  for (Element e = 0; e < m.designated.size(); ++e) {
    if (m.designated[e]) d.push_back(e);
  }
  return {{"algebra", to_json(m.algebra)}, {"designated", d}};
}

inline json to_json(const Congruence& c) {
  std::map<Element, std::vector<Element>> blocks;
  for (Element e = 0; e < c.size(); ++e) blocks[c.rep(e)].push_back(e);
  json out = json::array();
  for (const auto& [r, b] : blocks) out.push_back(b);
  return out;
}

inline json to_json(const Trace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json j{{"formula", to_string(s.formula)}, {"kind", to_string(s.kind)}, {"index", s.index}};
    if (!s.from.empty()) j["from"] = s.from;
    if (!s.sigma.support().empty()) j["sigma"] = to_json(s.sigma);
    steps.push_back(std::move(j));
  }
  json out{{"type", "trace"}, {"steps", steps}};
  if (!t.hypotheses.empty()) {
    json h = json::array();
    for (const auto& r : t.hypotheses) h.push_back(to_string(r));
    out["hypotheses"] = h;
  }
  return out;
}

inline json matrices_json(const std::vector<Matrix>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

inline json evidence_json(const Evidence& ev) {
  struct Visitor {
    json operator()(std::monostate) const { return nullptr; }
    json operator()(const Trace& t) const { return to_json(t); }
    json operator()(const OracleCertificate& c) const {
      return {{"type", "oracle-certificate"}, {"matrices", matrices_json(c.matrices)}};
    }
    json operator()(const MatrixWitness& w) const {
      return {{"type", "matrix-witness"}, {"matrix", to_json(w.matrix)}, {"assignment", to_json(w.assignment)}};
    }
    json operator()(const FilterCongruenceCertificate& c) const {
      return {{"type", "filter-congruence-certificate"}, {"matrices", matrices_json(c.matrices)}};
    }
    json operator()(const AlgebraWitness& w) const {
      json algs = json::array();
      for (const auto& a : w.algebras) algs.push_back(to_json(a));
      json out{{"type", "algebra-witness"}, {"note", w.note}, {"algebras", algs}, {"maps", w.maps}};
      if (w.law) out["law"] = to_json(*w.law);
      if (!w.assignment.empty()) out["assignment"] = to_json(w.assignment);
      return out;
    }
    json operator()(const FormulaWitness& w) const {
      json out{{"type", "formula-witness"}, {"formula", to_string(w.formula)}};
      if (w.expected) out["expected"] = to_string(*w.expected);
      if (w.actual) out["actual"] = to_string(*w.actual);
      return out;
    }
  };
  return std::visit(Visitor{}, ev);
}

inline json to_json(const Verdict& v) {
  json out{{"claim", v.claim}, {"status", to_string(v.status)}, {"reason", v.reason}, {"evidence", evidence_json(v.evidence)}};
  if (!v.parts.empty()) {
    json parts = json::array();
    for (const auto& p : v.parts) parts.push_back(to_json(p));
    out["parts"] = parts;
  }
  return out;
}

inline json to_json(const Budget& b) {
  json out{{"depth", b.max_depth},
           {"vars", b.max_vars},
           {"iters", b.max_iterations},
           {"max_carrier", b.max_carrier},
           {"max_facts", b.max_facts},
           {"max_search_nodes", b.max_search_nodes}};
  out["seed"] = b.seed ? json(*b.seed) : json(nullptr);
  return out;
}

inline json to_json(const AxiomSet& k) {
  json laws = json::array();
  for (std::size_t i = 0; i < k.laws.size(); ++i) {
    laws.push_back({{"law", to_string(k.laws[i])}, {"origin", k.origins[i]}});
  }
  return {{"name", k.name}, {"signature", k.signature.name()}, {"laws", laws}};
}

}  // namespace aalg::cli
