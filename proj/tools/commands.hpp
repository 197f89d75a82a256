#pragma once

// Command surface of the aalg tool. `run` parses the arguments, resolves
// names against the built-in corpus and any DSL files, prints a JSON report
// and returns the exit code (0 proved, 1 refuted, 2 unknown, 3 input error).

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "report.hpp"

namespace aalg::cli {

enum ExitCode { exit_proved = 0, exit_refuted = 1, exit_unknown = 2, exit_input = 3 };

/// Bad names, missing options and malformed files.
class InputError : public Error {
public:
  using Error::Error;
};

struct Options {
  std::string command;
  std::vector<std::string> files;
  std::string logic, pair, source, target, morphism, other, algebra, filter;
  std::vector<std::string> oracles;
  std::vector<std::string> corpus;
  std::optional<unsigned> depth, vars, iters, n;
  std::optional<Element> max_carrier;
  std::optional<std::uint64_t> seed;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"check-pair", "axiomatize", "check-translation", "check-af-morphism",
                                              "free",       "reduct",     "reflect",           "adjoint",
                                              "leibniz",    "density",    "equiv",             "props",
                                              "laws",       "glivenko"};
  return names;
}

/// Workspace plus the option-driven lookups every command shares.
class Context {
public:
  Context(const Options& o, std::istream& in) : opt_(o) {
    ws_.fallback = &corpus_workspace();
    for (const auto& f : o.files) {
      std::string text;
      if (f == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
      } else {
        std::ifstream file(f);
        if (!file) throw InputError("cannot open '" + f + "'");
        text.assign(std::istreambuf_iterator<char>(file), {});
      }
      try {
        parse_into(ws_, text);
      } catch (const ParseError& e) {
        throw ParseError(e.kind(), e.line(), e.column(), f + ": " + e.what());
      }
    }
    budget_.max_depth = o.depth.value_or(budget_.max_depth);
    budget_.max_vars = o.vars.value_or(budget_.max_vars);
    budget_.max_iterations = o.iters.value_or(budget_.max_iterations);
    budget_.max_carrier = o.max_carrier.value_or(budget_.max_carrier);
    budget_.seed = o.seed;
  }

  const Options& opt() const { return opt_; }
  const Budget& budget() const { return budget_; }
  const Workspace& ws() const { return ws_; }

  const FiniteAlgebra& algebra(const std::string& name) const { return decl(name).algebra; }

  const AlgebraDecl& decl(const std::string& name) const {
    if (auto a = ws_.algebra(name)) return *a;
    throw InputError("unknown algebra '" + name + "'");
  }

  const LogicPresentation& logic(const std::string& name) const {
    if (auto l = ws_.logic(name)) return *l;
    throw InputError("unknown logic '" + name + "'");
  }

  /// `a.b.c` composes right to left; `id_Sig` is the identity on Sig.
  FlexibleMorphism morphism(const std::string& spec) const {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, '.');) parts.push_back(p);
    if (parts.empty()) throw InputError("empty morphism name");
    std::optional<FlexibleMorphism> out;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      FlexibleMorphism h = single_morphism(*it);
      if (!out) {
        out = std::move(h);
      } else if (!out->target().same_symbols(h.source())) {
        throw InputError("cannot compose " + h.name() + " after " + out->name() + ": signatures differ");
      } else {
        out = flex_compose(h, *out);
      }
    }
    return *out;
  }

  /// The pair called `name`, or the unique pair of the logic called `name`.
  AlgebraizableLogic pair(const std::string& name) const {
    if (ws_.pair(name)) return build(name, nullptr);
    if (ws_.logic(name)) return build(pair_of_logic(name), nullptr);
    throw InputError("unknown pair or logic '" + name + "'");
  }

  /// `--pair`, else the pair of `--logic`; with both, the pair is checked
  /// against the given logic.
  AlgebraizableLogic main_pair() const {
    if (!opt_.pair.empty()) {
      if (opt_.logic.empty()) return pair(opt_.pair);
      if (!ws_.pair(opt_.pair)) throw InputError("unknown pair '" + opt_.pair + "'");
      return build(opt_.pair, &logic(opt_.logic));
    }
    if (!opt_.logic.empty()) return pair(opt_.logic);
    throw InputError(opt_.command + " needs --pair or --logic");
  }

  /// Source or target side of a morphism command; inferred from the
  /// morphism signature when the option is empty and the match is unique.
  AlgebraizableLogic side(const std::string& given, const Signature& sig, const char* what) const {
    if (!given.empty()) return pair(given);
    return pair(logic_for(sig, what));
  }

  const LogicPresentation& side_logic(const std::string& given, const Signature& sig, const char* what) const {
    if (!given.empty()) {
      if (auto l = ws_.logic(given)) return *l;
      if (auto p = ws_.pair(given)) return logic(p->logic);
      throw InputError("unknown logic '" + given + "'");
    }
    return logic(logic_for(sig, what));
  }

  /// `--corpus`, else `fallback`.
  std::vector<FiniteAlgebra> algebras(const std::vector<FiniteAlgebra>& fallback) const {
    if (opt_.corpus.empty()) return fallback;
    std::vector<FiniteAlgebra> out;
    for (const auto& n : opt_.corpus) out.push_back(algebra(n));
    return out;
  }

  Matrix matrix_for(const std::string& name, const AlgebraizingPair& p) const {
    const auto& d = decl(name);
    return d.designated ? Matrix(d.algebra, *d.designated) : tau_matrix(d.algebra, p);
  }

private:
  FlexibleMorphism single_morphism(const std::string& name) const {
    if (auto h = ws_.morphism(name)) return *h;
    if (name.starts_with("id_")) {
      if (auto s = ws_.signature(name.substr(3))) return flex_identity(*s);
    }
    throw InputError("unknown morphism '" + name + "'");
  }

  std::string pair_of_logic(const std::string& logic_name) const {
    std::vector<std::string> found;
    for (const Workspace* w = &ws_; w; w = w->fallback) {
      for (const auto& [n, p] : w->pairs) {
        if (p.logic == logic_name && std::find(found.begin(), found.end(), n) == found.end()) found.push_back(n);
      }
    }
    if (found.size() != 1) {
      throw InputError("logic '" + logic_name + "' has " + std::to_string(found.size()) + " pairs; name one with --pair");
    }
    return found.front();
  }

  std::string logic_for(const Signature& sig, const char* what) const {
    std::vector<std::string> found;
    for (const Workspace* w = &ws_; w; w = w->fallback) {
      for (const auto& [n, l] : w->logics) {
        if (l.signature().name() == sig.name() && std::find(found.begin(), found.end(), n) == found.end()) {
          found.push_back(n);
        }
      }
    }
    if (found.size() != 1) {
      throw InputError(std::to_string(found.size()) + " logics over " + sig.name() + "; name the " + what + " with --" +
                       what);
    }
    return found.front();
  }

  /// Corpus pairs keep their oracles and members; workspace pairs take every
  /// known algebra of QV as a member. `--oracle` replaces the oracle set.
  AlgebraizableLogic build(const std::string& pair_name, const LogicPresentation* logic_override) const {
    const PairDecl& d = *ws_.pair(pair_name);
    const LogicPresentation& l = logic_override ? *logic_override : logic(d.logic);
    const bool from_corpus = !ws_.pairs.contains(pair_name) && corpus().contains(pair_name);
    AlgebraizableLogic out;
    if (from_corpus && l == corpus().pair(pair_name).logic) {
      out = corpus().pair(pair_name);
      out.logic = l;
    } else {
      out = AlgebraizableLogic(l, d.pair);
      const AxiomSet k = axiomatize(l, d.pair);
      for (const Workspace* w = &ws_; w; w = w->fallback) {
        for (const auto& [n, a] : w->algebras) {
          if (a.algebra.signature().same_symbols(l.signature()) && in_quasivariety(a.algebra, k)) {
            out.members.push_back(a.algebra);
          }
        }
      }
    }
    std::vector<Matrix> ms;
    for (const auto& spec : opt_.oracles) {
      auto colon = spec.find(':');
      if (colon != std::string::npos && spec.substr(0, colon) != l.name()) continue;
      ms.push_back(matrix_for(colon == std::string::npos ? spec : spec.substr(colon + 1), out.pair));
    }
    if (!ms.empty()) {
      out.oracles = OracleSet{std::move(ms), true};
      require_valid_oracles(out.logic, out.oracles);
    }
    return out;
  }

  Options opt_;
  Budget budget_;
  Workspace ws_;
};

/// Verdicts plus any computed objects of one command.
struct Outcome {
  std::vector<Verdict> verdicts;
  json result = json::object();
};

inline Verdict computed(const std::string& claim, const std::string& reason) {
  return Verdict::make(Status::proved, claim, reason);
}

namespace commands {

inline Outcome check_pair(const Context& c) {
  auto a = c.main_pair();
  Outcome out;
  out.verdicts.push_back(aalg::check_pair(a.logic, a.pair, c.budget(), a.oracle_ptr()));
  return out;
}

inline Outcome axiomatize(const Context& c) {
  auto a = c.main_pair();
  auto k = aalg::axiomatize(a);
  Outcome out;
  out.result["axiomset"] = to_json(k);
  std::vector<FiniteAlgebra> tested = c.algebras({});
  if (!c.opt().algebra.empty()) tested.push_back(c.algebra(c.opt().algebra));
  for (const auto& m : tested) {
    const std::string claim = m.name() + " is in " + k.name;
    if (auto f = first_failure(m, k)) {
      out.verdicts.push_back(Verdict::make(Status::refuted, claim, "violates " + k.origins[f->first],
                                           AlgebraWitness{"failing law", {m}, {}, k.laws[f->first], f->second}));
    } else {
      out.verdicts.push_back(Verdict::make(Status::proved, claim, "satisfies all " + std::to_string(k.laws.size()) + " laws"));
    }
  }
  if (tested.empty()) out.verdicts.push_back(computed(k.name + " axiomatized", std::to_string(k.laws.size()) + " laws"));
  return out;
}

inline Outcome check_translation(const Context& c) {
  auto h = c.morphism(c.opt().morphism);
  const auto& l = c.side_logic(c.opt().source, h.source(), "source");
  auto a2 = c.side(c.opt().target, h.target(), "target");
  Outcome out;
  out.verdicts.push_back(aalg::check_translation(h, l, a2.logic, c.budget(), a2.oracle_ptr()));
  return out;
}

inline Outcome check_af_morphism(const Context& c) {
  auto h = c.morphism(c.opt().morphism);
  auto a = c.side(c.opt().source, h.source(), "source");
  auto a2 = c.side(c.opt().target, h.target(), "target");
  Outcome out;
  std::vector<Verdict> parts;
  parts.push_back(aalg::check_translation(h, a.logic, a2.logic, c.budget(), a2.oracle_ptr()));
  parts.push_back(preserves_pair(h, a, a2, c.budget()));
  out.verdicts.push_back(all_of(h.name() + " is a morphism of algebraizable logics", std::move(parts)));
  return out;
}

inline Outcome free(const Context& c) {
  auto a = c.main_pair();
  unsigned n = c.opt().n.value_or(1);
  auto r = lindenbaum_algebra(a, n, c.budget().max_depth, c.budget());
  Outcome out;
  if (r.algebra) {
    out.result["algebra"] = to_json(*r.algebra);
    json reps = json::array();
    for (const auto& f : r.representatives) reps.push_back(to_string(f));
    out.result["representatives"] = reps;
    out.result["generators"] = r.generators;
  }
  out.verdicts.push_back(std::move(r.verdict));
  return out;
}

inline Outcome reduct(const Context& c) {
  auto h = c.morphism(c.opt().morphism);
  const auto& a2 = c.algebra(c.opt().algebra);
  auto r = aalg::reduct(h, a2);
  Outcome out;
  out.result["algebra"] = to_json(r);
  out.verdicts.push_back(computed(h.name() + "*(" + a2.name() + ")", "reduct computed"));
  return out;
}

inline Outcome reflect(const Context& c) {
  auto a = c.main_pair();
  const auto& m = c.algebra(c.opt().algebra);
  auto r = aalg::reflect(m, aalg::axiomatize(a));
  Outcome out;
  out.result["congruence"] = to_json(r.theta);
  out.result["algebra"] = to_json(r.quotient);
  out.result["unit"] = r.unit;
  const std::string claim = "reflection of " + m.name() + " into QV(" + a.name() + ")";
  out.verdicts.push_back(r.certified_least
                             ? Verdict::make(Status::proved, claim, "least congruence certified against all congruences")
                             : Verdict::make(Status::unknown, claim, "carrier too large to certify leastness"));
  return out;
}

inline Outcome adjoint(const Context& c) {
  auto h = c.morphism(c.opt().morphism);
  auto a = c.side(c.opt().source, h.source(), "source");
  auto a2 = c.side(c.opt().target, h.target(), "target");
  const auto& m = c.algebra(c.opt().algebra);
  Outcome out;
  auto w = connective_witnesses(h, a2, c.budget());
  if (!w) {
    out.verdicts.push_back(Verdict::make(Status::unknown, "left adjoint of " + h.name() + "* at " + m.name(),
                                         "no density witnesses within the depth budget"));
    return out;
  }
  json wj = json::object();
  for (const auto& [s, f] : *w) wj[s] = to_string(f);
  out.result["witnesses"] = wj;
  auto r = induced_adjoint(h, a, a2, m, *w);
  if (r.algebra) {
    out.result["algebra"] = to_json(*r.algebra);
    out.result["congruence"] = to_json(r.rho);
    out.result["unit"] = r.unit;
  }
  out.verdicts.push_back(std::move(r.verdict));
  return out;
}

inline std::vector<Filter> filters_of(const Context& c, const FiniteAlgebra& m, const LogicPresentation& l) {
  if (!c.opt().filter.empty()) {
    Filter f;
    std::stringstream ss(c.opt().filter);
    for (std::string p; std::getline(ss, p, ',');) {
      try {
        f.insert(static_cast<Element>(std::stoul(p)));
      } catch (const std::exception&) {
        throw InputError("bad filter element '" + p + "'");
      }
    }
    return {f};
  }
  std::vector<Filter> out;
  if (m.size() > 16) throw InputError("carrier too large to enumerate filters; pass --filter");
  for (std::uint32_t bits = 0; bits < (1u << m.size()); ++bits) {
    Filter f;
    for (Element e = 0; e < m.size(); ++e) {
      if (bits >> e & 1) f.insert(e);
    }
    if (is_l_filter(m, f, l)) out.push_back(f);
  }
  return out;
}

inline Outcome leibniz(const Context& c) {
  auto a = c.main_pair();
  const auto& m = c.algebra(c.opt().algebra);
  Outcome out;
  json rows = json::array();
  for (const auto& f : filters_of(c, m, a.logic)) {
    std::string fs = "{";
    for (Element e : f) fs += (fs.size() > 1 ? ", " : "") + std::to_string(e);
    fs += "}";
    const std::string claim = "Leibniz congruence of " + fs + " on " + m.name() + " is given by the equivalence formulas";
    auto omega = aalg::leibniz(m, f);
    auto rel = leibniz_delta(m, f, a.pair.delta);
    rows.push_back({{"filter", std::vector<Element>(f.begin(), f.end())},
                    {"l_filter", is_l_filter(m, f, a.logic)},
                    {"leibniz", to_json(omega)}});
    if (rel == to_relation(omega)) {
      out.verdicts.push_back(Verdict::make(Status::proved, claim, "relations agree"));
    } else {
      out.verdicts.push_back(Verdict::make(
          Status::refuted, claim, "relations differ",
          AlgebraWitness{"filter " + fs, {m}, {std::vector<Element>(f.begin(), f.end())}, std::nullopt, {}}));
    }
  }
  out.result["filters"] = rows;
  if (out.verdicts.empty()) out.verdicts.push_back(computed("filters of " + m.name(), "no filters"));
  return out;
}

inline Outcome density(const Context& c) {
  auto h = c.morphism(c.opt().morphism);
  auto a2 = c.side(c.opt().target, h.target(), "target");
  auto r = delta_dense(h, a2, c.opt().n.value_or(2), c.budget());
  Outcome out;
  json w = json::array();
  for (const auto& [t, s] : r.witnesses) w.push_back({to_string(t), to_string(s)});
  out.result["witness_count"] = r.witnesses.size();
  out.result["witnesses"] = w;
  out.verdicts.push_back(std::move(r.verdict));
  return out;
}

inline Outcome equiv(const Context& c) {
  auto g0 = c.morphism(c.opt().morphism);
  if (c.opt().other.empty()) throw InputError("equiv needs --other");
  auto g1 = c.morphism(c.opt().other);
  auto a2 = c.side(c.opt().target, g0.target(), "target");
  Outcome out;
  out.verdicts.push_back(approx_equiv(g0, g1, a2, c.budget()));
  return out;
}

inline Outcome props(const Context& c) {
  auto h = c.morphism(c.opt().morphism);
  auto a2 = c.side(c.opt().target, h.target(), "target");
  auto members = c.algebras(a2.members);
  auto p = functor_props(h, a2, members, c.budget());
  Outcome out;
  for (const Verdict* v : p.all()) out.verdicts.push_back(*v);
  return out;
}

inline Outcome laws(const Context& c) {
  LawOptions o;
  o.iterations = c.opt().iters.value_or(200);
  o.seed = c.opt().seed.value_or(1);
  o.max_carrier = c.opt().max_carrier.value_or(4);
  Outcome out;
  out.verdicts.push_back(functor_laws(o));
  return out;
}

inline Outcome glivenko(const Context& c) {
  const Options& o = c.opt();
  auto h = c.morphism(o.morphism.empty() ? "godel" : o.morphism);
  auto a = c.pair(o.source.empty() ? "IPC_pair" : o.source);
  auto a2 = c.pair(o.target.empty() ? "CPC_pair" : o.target);
  std::vector<FiniteAlgebra> hs;
  if (!o.algebra.empty()) {
    hs.push_back(c.algebra(o.algebra));
  } else {
    for (const char* n : {"H3", "H4", "H5"}) hs.push_back(c.algebra(n));
    hs = c.algebras(hs);
  }
  Outcome out;
  auto w = connective_witnesses(h, a2, c.budget());
  if (!w) {
    out.verdicts.push_back(Verdict::make(Status::unknown, "Glivenko comparison", "no density witnesses"));
    return out;
  }
  const AxiomSet k = aalg::axiomatize(a);
  const AxiomSet k2 = aalg::axiomatize(a2);
  json rows = json::array();
  auto compare = [&](const std::string& claim, const FiniteAlgebra& got, const FiniteAlgebra& reg) {
    out.verdicts.push_back(isomorphic(got, reg) ? Verdict::make(Status::proved, claim, "isomorphic")
                                                : Verdict::make(Status::refuted, claim, "not isomorphic",
                                                                AlgebraWitness{"computed vs regular", {got, reg}, {}, std::nullopt, {}}));
  };
  for (const auto& m : hs) {
    auto reg = regular_elements(m, k);
    auto refl = aalg::reflect(reduct(h, m), k2);
    json row{{"algebra", m.name()}, {"regular", to_json(reg)}, {"reflection", to_json(refl.quotient)}};
    compare("reflection of " + m.name() + " is its algebra of regular elements", refl.quotient, reg);
    auto r = induced_adjoint(h, a, a2, m, *w);
    if (r.algebra) {
      row["adjoint"] = to_json(*r.algebra);
      row["unit"] = r.unit;
      compare("left adjoint at " + m.name() + " is its algebra of regular elements", *r.algebra, reg);
    } else {
      out.verdicts.push_back(std::move(r.verdict));
    }
    rows.push_back(std::move(row));
  }
  out.result["algebras"] = rows;
  return out;
}

}  // namespace commands

inline Outcome dispatch(const Context& c) {
  using Fn = Outcome (*)(const Context&);
  static const std::map<std::string, Fn> table{
      {"check-pair", commands::check_pair},   {"axiomatize", commands::axiomatize},
      {"check-translation", commands::check_translation}, {"check-af-morphism", commands::check_af_morphism},
      {"free", commands::free},               {"reduct", commands::reduct},
      {"reflect", commands::reflect},         {"adjoint", commands::adjoint},
      {"leibniz", commands::leibniz},         {"density", commands::density},
      {"equiv", commands::equiv},             {"props", commands::props},
      {"laws", commands::laws},               {"glivenko", commands::glivenko}};
  return table.at(c.opt().command)(c);
}

inline int exit_code(const std::vector<Verdict>& vs) {
  bool unknown = false;
  for (const auto& v : vs) {
    if (v.refuted()) return exit_refuted;
    unknown = unknown || v.unknown();
  }
  return unknown ? exit_unknown : exit_proved;
}

inline json inputs_json(const Options& o) {
  json in = json::object();
  auto put = [&](const char* k, const std::string& v) {
    if (!v.empty()) in[k] = v;
  };
  put("logic", o.logic);
  put("pair", o.pair);
  put("source", o.source);
  put("target", o.target);
  put("morphism", o.morphism);
  put("other", o.other);
  put("algebra", o.algebra);
  put("filter", o.filter);
  if (o.n) in["n"] = *o.n;
  if (!o.files.empty()) in["files"] = o.files;
  if (!o.oracles.empty()) in["oracles"] = o.oracles;
  if (!o.corpus.empty()) in["corpus"] = o.corpus;
  return in;
}

/// Runs one command; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
  Options o;
  CLI::App app{"Finite-scale workbench for algebraizable logics", "aalg"};
  app.set_help_flag();
  app.allow_windows_style_options(false);
  bool help = false;
  app.add_flag("-h,--help", help, "Show usage");
  app.add_option("command", o.command, "One of: " + [] {
    std::string s;
    for (const auto& n : command_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }());
  app.add_option("--file", o.files, "DSL file to load ('-' for stdin); repeatable");
  app.add_option("--logic", o.logic, "Logic name");
  app.add_option("--pair", o.pair, "Pair name");
  app.add_option("--source", o.source, "Source pair or logic of a morphism");
  app.add_option("--target", o.target, "Target pair or logic of a morphism");
  app.add_option("--morphism", o.morphism, "Morphism; 'a.b' composes, 'id_Sig' is an identity");
  app.add_option("--other", o.other, "Second morphism for equiv");
  app.add_option("--algebra", o.algebra, "Algebra name");
  app.add_option("--filter", o.filter, "Comma-separated filter for leibniz");
  app.add_option("--n", o.n, "Generators for free; arity for density");
  app.add_option("--depth", o.depth, "Formula depth budget");
  app.add_option("--vars", o.vars, "Variable budget");
  app.add_option("--iters", o.iters, "Iteration budget; case count for laws");
  app.add_option("--max-carrier", o.max_carrier, "Largest countermodel carrier");
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--oracle", o.oracles, "[Logic:]ALGEBRA marked as a complete oracle; repeatable");
  app.add_option("--corpus", o.corpus, "Algebras to range over")->delimiter(',');

  json report{{"command", nullptr}};
  auto fail = [&](const std::string& kind, const std::string& msg, std::optional<std::pair<std::size_t, std::size_t>> at) {
    json e{{"kind", kind}, {"message", msg}};
    if (at) {
      e["line"] = at->first;
      e["column"] = at->second;
    }
    report["error"] = e;
    out << report.dump(2) << "\n";
    err << "error: " << msg << "\n";
    return static_cast<int>(exit_input);
  };

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), std::nullopt);
  }
  if (help || o.command.empty()) {
    err << app.help();
    return help ? static_cast<int>(exit_proved) : static_cast<int>(exit_input);
  }
  report["command"] = o.command;
  report["inputs"] = inputs_json(o);
  if (std::find(command_names().begin(), command_names().end(), o.command) == command_names().end()) {
    return fail("usage", "unknown command '" + o.command + "'", std::nullopt);
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Context ctx(o, in);
    report["budget"] = to_json(ctx.budget());
    Outcome r = dispatch(ctx);
    json vs = json::array();
    for (const auto& v : r.verdicts) vs.push_back(to_json(v));
    report["verdicts"] = vs;
    if (!r.result.empty()) report["result"] = r.result;
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out << report.dump(2) << "\n";
    return exit_code(r.verdicts);
  } catch (const ParseError& e) {
    return fail(to_string(e.kind()), e.what(), std::pair{e.line(), e.column()});
  } catch (const InputError& e) {
    return fail("input", e.what(), std::nullopt);
  } catch (const Error& e) {
    return fail("operation", e.what(), std::nullopt);
  }
}

}  // namespace aalg::cli
