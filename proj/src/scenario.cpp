#include "ccspace/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ccspace {

namespace {

using J = nlohmann::ordered_json;
using namespace scenario;

std::string join(const std::vector<std::string>& problems) {
  std::ostringstream out;
  out << "invalid scenario";
  for (const auto& p : problems) out << "\n  " << p;
  return out.str();
}

class Reader {
 public:
  std::vector<std::string> problems;

  void fail(const std::string& path, const std::string& what) { problems.push_back(path + ": " + what); }

  bool object(const J& j, const std::string& path, std::initializer_list<const char*> keys) {
    if (!j.is_object()) {
      fail(path, "expected an object");
      return false;
    }
    for (const auto& [k, v] : j.items())
      if (std::none_of(keys.begin(), keys.end(), [&](const char* s) { return k == s; }))
        fail(path + "." + k, "unknown key");
    return true;
  }

  template <typename T>
  std::optional<T> get(const J& obj, const char* key, const std::string& path, bool required) {
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) fail(path + "." + key, "missing");
      return std::nullopt;
    }
    return as<T>(*it, path + "." + key);
  }

  template <typename T>
  std::optional<T> as(const J& j, const std::string& path) {
    if constexpr (std::is_same_v<T, double>) {
      if (!j.is_number()) return wrong(path, "a number");
    } else if constexpr (std::is_same_v<T, bool>) {
      if (!j.is_boolean()) return wrong(path, "a boolean");
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!j.is_string()) return wrong(path, "a string");
    } else if constexpr (std::is_integral_v<T>) {
      if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0))
        return wrong(path, "a non-negative integer");
    }
    try {
      return j.get<T>();
    } catch (const nlohmann::json::exception&) {
      return wrong(path, "a value of the right type");
    }
  }

  std::optional<Labels> labels(const J& j, const std::string& path) {
    if (!j.is_array()) return wrong(path, "an array of labels");
    Labels out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      auto s = as<std::string>(j[i], path + "[" + std::to_string(i) + "]");
      if (s) out.push_back(*s);
    }
    return out;
  }

  std::optional<Labels> labels(const J& obj, const char* key, const std::string& path, bool required) {
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) fail(path + "." + key, "missing");
      return std::nullopt;
    }
    return labels(*it, path + "." + key);
  }

  template <typename F>
  void each(const J& obj, const char* key, const std::string& path, F&& f) {
    auto it = obj.find(key);
    if (it == obj.end()) return;
    if (!it->is_array()) {
      fail(path + "." + key, "expected an array");
      return;
    }
    for (std::size_t i = 0; i < it->size(); ++i)
      f((*it)[i], path + "." + key + "[" + std::to_string(i) + "]");
  }

 private:
  std::nullopt_t wrong(const std::string& path, const char* what) {
    fail(path, std::string("expected ") + what);
    return std::nullopt;
  }
};

std::pair<std::string, std::string> pair_of(Reader& r, const J& j, const std::string& path) {
  auto l = r.labels(j, path);
  if (l && l->size() != 2) r.fail(path, "expected a pair of labels");
  if (!l || l->size() != 2) return {};
  return {(*l)[0], (*l)[1]};
}

void parse_families(Reader& r, const J& j, FamiliesBlock& f) {
  const std::string p = "families";
  if (!r.object(j, p, {"graphs", "truths", "fhat", "fd", "explicit"})) return;
  r.each(j, "graphs", p, [&](const J& g, const std::string& gp) {
    if (!r.object(g, gp, {"name", "edges", "f_star", "within"})) return;
    GraphSpec spec;
    spec.name = r.get<std::string>(g, "name", gp, true).value_or("");
    spec.f_star = r.get<std::string>(g, "f_star", gp, true).value_or("");
    spec.within = r.labels(g, "within", gp, false);
    r.each(g, "edges", gp, [&](const J& e, const std::string& ep) { spec.edges.push_back(pair_of(r, e, ep)); });
    f.graphs.push_back(std::move(spec));
  });
  f.truths = r.labels(j, "truths", p, false);
  f.fhat = r.labels(j, "fhat", p, false).value_or(Labels{});
  r.each(j, "fd", p, [&](const J& d, const std::string& dp) {
    if (!r.object(d, dp, {"domain", "f"})) return;
    f.fd.push_back({r.labels(d, "domain", dp, true).value_or(Labels{}),
                    r.get<std::string>(d, "f", dp, true).value_or("")});
  });
  r.each(j, "explicit", p, [&](const J& e, const std::string& ep) {
    if (!r.object(e, ep, {"name", "kind", "domain", "members"})) return;
    ExplicitFamilySpec spec;
    spec.name = r.get<std::string>(e, "name", ep, true).value_or("");
    spec.kind = r.get<std::string>(e, "kind", ep, true).value_or("");
    spec.domain = r.labels(e, "domain", ep, true).value_or(Labels{});
    r.each(e, "members", ep, [&](const J& m, const std::string& mp) {
      spec.members.push_back(r.labels(m, mp).value_or(Labels{}));
    });
    f.explicit_families.push_back(std::move(spec));
  });
}

void parse_blackhole(Reader& r, const J& j, BlackholeBlock& b) {
  const std::string p = "blackhole";
  if (!r.object(j, p, {"solution_space", "epsilon_grid", "probes"})) return;
  b.solution_space = r.labels(j, "solution_space", p, true).value_or(Labels{});
  r.each(j, "epsilon_grid", p, [&](const J& e, const std::string& ep) {
    if (auto v = r.as<double>(e, ep)) b.epsilon_grid.push_back(*v);
  });
  r.each(j, "probes", p, [&](const J& e, const std::string& ep) {
    if (!r.object(e, ep, {"sequence", "x", "epsilon", "region"})) return;
    b.probes.push_back({r.get<std::string>(e, "sequence", ep, true).value_or(""),
                        r.get<std::string>(e, "x", ep, true).value_or(""),
                        r.get<double>(e, "epsilon", ep, true).value_or(0.0),
                        r.labels(e, "region", ep, false)});
  });
}

void parse_environment(Reader& r, const J& j, EnvironmentBlock& env) {
  const std::string p = "environment";
  if (!r.object(j, p, {"points", "base", "practical_wholes", "map"})) return;
  env.points = r.labels(j, "points", p, true).value_or(Labels{});
  r.each(j, "base", p, [&](const J& b, const std::string& bp) {
    if (!r.object(b, bp, {"name", "members", "tag"})) return;
    env.base.push_back({r.get<std::string>(b, "name", bp, false).value_or(""),
                        r.labels(b, "members", bp, true).value_or(Labels{}),
                        r.get<std::string>(b, "tag", bp, false).value_or("complete")});
  });
  r.each(j, "practical_wholes", p, [&](const J& w, const std::string& wp) {
    env.practical_wholes.push_back(r.labels(w, wp).value_or(Labels{}));
  });
  if (auto it = j.find("map"); it != j.end()) {
    if (!it->is_object()) {
      r.fail(p + ".map", "expected an object");
    } else {
      for (const auto& [k, v] : it->items())
        if (auto s = r.as<std::string>(v, p + ".map." + k)) env.map.emplace_back(k, *s);
    }
  }
}

void parse_parameters(Reader& r, const J& j, Parameters& params) {
  const std::string p = "parameters";
  if (!r.object(j, p, {"epsilon", "cap", "family_cap", "tol_eq", "samples", "seed", "limit_point_min"}))
    return;
  r.each(j, "epsilon", p, [&](const J& e, const std::string& ep) {
    if (auto v = r.as<double>(e, ep)) params.epsilon.push_back(*v);
  });
  params.cap = r.get<std::size_t>(j, "cap", p, false);
  params.family_cap = r.get<std::size_t>(j, "family_cap", p, false);
  params.tol_eq = r.get<double>(j, "tol_eq", p, false);
  params.samples = r.get<std::size_t>(j, "samples", p, false);
  params.seed = r.get<std::uint64_t>(j, "seed", p, false);
  params.limit_point_min = r.get<std::size_t>(j, "limit_point_min", p, false);
}

// Referential integrity helpers.
class Checker {
 public:
  std::vector<std::string> problems;

  void declared(const std::set<std::string>& known, const Labels& used, const std::string& path,
                const char* space) {
    for (const auto& l : used) declared(known, l, path, space);
  }
  void declared(const std::set<std::string>& known, const std::string& used, const std::string& path,
                const char* space) {
    if (!known.count(used)) problems.push_back(path + ": '" + used + "' is not declared in " + space);
  }
  void threshold(double v, const std::string& path) {
    if (!(v > 0.0 && v < 1.0)) problems.push_back(path + ": threshold must lie strictly between 0 and 1");
  }
  void unit(double v, const std::string& path) {
    if (!(v >= 0.0 && v <= 1.0)) problems.push_back(path + ": value must lie in [0,1]");
  }
  void distinct(const Labels& labels, const std::string& path) {
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (l.empty()) problems.push_back(path + ": empty label");
      else if (!seen.insert(l).second) problems.push_back(path + ": duplicate label '" + l + "'");
    }
  }
};

J labels_json(const Labels& l) { return J(l); }

}  // namespace

ScenarioError::ScenarioError(std::vector<std::string> problems)
    : std::runtime_error(join(problems)), problems_(std::move(problems)) {}

Scenario parse_scenario(const std::string& text) {
  J doc;
  try {
    doc = J::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ScenarioError({std::string("syntax: ") + e.what()});
  }
  Reader r;
  Scenario s;
  if (!r.object(doc, "$", {"version", "name", "universe", "rules", "implications", "weights", "matrix",
                           "sequences", "queries", "families", "blackhole", "environment", "parameters"}))
    throw ScenarioError(r.problems);

  auto version = r.get<int>(doc, "version", "$", true);
  if (version && *version != kScenarioVersion)
    r.fail("$.version", "unsupported version " + std::to_string(*version));
  s.version = version.value_or(kScenarioVersion);
  s.name = r.get<std::string>(doc, "name", "$", false).value_or("");

  if (auto it = doc.find("universe"); it == doc.end()) {
    r.fail("$.universe", "missing");
  } else if (r.object(*it, "universe", {"symbols", "cognitive", "logic_base"})) {
    s.universe.symbols = r.labels(*it, "symbols", "universe", true).value_or(Labels{});
    s.universe.cognitive = r.labels(*it, "cognitive", "universe", true).value_or(Labels{});
    s.universe.logic_base = r.labels(*it, "logic_base", "universe", false).value_or(Labels{});
  }

  r.each(doc, "rules", "$", [&](const J& j, const std::string& p) {
    if (!r.object(j, p, {"if", "then"})) return;
    s.rules.push_back({r.labels(j, "if", p, false).value_or(Labels{}),
                       r.get<std::string>(j, "then", p, true).value_or("")});
  });
  r.each(doc, "implications", "$", [&](const J& j, const std::string& p) {
    if (!r.object(j, p, {"if", "then", "sentence"})) return;
    s.implications.push_back({r.get<std::string>(j, "if", p, true).value_or(""),
                              r.get<std::string>(j, "then", p, true).value_or(""),
                              r.get<std::string>(j, "sentence", p, true).value_or("")});
  });
  if (auto it = doc.find("weights"); it != doc.end()) {
    if (!it->is_object()) {
      r.fail("$.weights", "expected an object");
    } else {
      s.weights.emplace();
      for (const auto& [k, v] : it->items())
        if (auto d = r.as<double>(v, "$.weights." + k)) s.weights->emplace_back(k, *d);
    }
  }
  if (doc.contains("matrix")) {
    s.matrix.emplace();
    r.each(doc, "matrix", "$", [&](const J& row, const std::string& p) {
      std::vector<double> values;
      if (!row.is_array()) r.fail(p, "expected an array of numbers");
      else
        for (std::size_t i = 0; i < row.size(); ++i)
          if (auto d = r.as<double>(row[i], p + "[" + std::to_string(i) + "]")) values.push_back(*d);
      s.matrix->push_back(std::move(values));
    });
  }
  r.each(doc, "sequences", "$", [&](const J& j, const std::string& p) {
    if (!r.object(j, p, {"name", "items", "virtual_limit", "constant_tail"})) return;
    s.sequences.push_back({r.get<std::string>(j, "name", p, true).value_or(""),
                           r.labels(j, "items", p, true).value_or(Labels{}),
                           r.get<std::string>(j, "virtual_limit", p, false),
                           r.get<bool>(j, "constant_tail", p, false).value_or(false)});
  });
  r.each(doc, "queries", "$", [&](const J& j, const std::string& p) {
    s.queries.push_back(r.labels(j, p).value_or(Labels{}));
  });
  if (auto it = doc.find("families"); it != doc.end()) parse_families(r, *it, s.families.emplace());
  if (auto it = doc.find("blackhole"); it != doc.end()) parse_blackhole(r, *it, s.blackhole.emplace());
  if (auto it = doc.find("environment"); it != doc.end())
    parse_environment(r, *it, s.environment.emplace());
  if (auto it = doc.find("parameters"); it != doc.end()) parse_parameters(r, *it, s.parameters);

  if (!r.problems.empty()) throw ScenarioError(r.problems);
  return s;
}

std::string emit_scenario(const Scenario& s) {
  J doc;
  doc["version"] = s.version;
  doc["name"] = s.name;
  doc["universe"] = {{"symbols", labels_json(s.universe.symbols)},
                     {"cognitive", labels_json(s.universe.cognitive)},
                     {"logic_base", labels_json(s.universe.logic_base)}};
  if (!s.rules.empty()) {
    J rules = J::array();
    for (const auto& rule : s.rules) rules.push_back({{"if", rule.premises}, {"then", rule.conclusion}});
    doc["rules"] = std::move(rules);
  }
  if (!s.implications.empty()) {
    J imps = J::array();
    for (const auto& i : s.implications)
      imps.push_back({{"if", i.antecedent}, {"then", i.consequent}, {"sentence", i.sentence}});
    doc["implications"] = std::move(imps);
  }
  if (s.weights) {
    J w = J::object();
    for (const auto& [k, v] : *s.weights) w[k] = v;
    doc["weights"] = std::move(w);
  }
  if (s.matrix) doc["matrix"] = *s.matrix;
  if (!s.sequences.empty()) {
    J seqs = J::array();
    for (const auto& q : s.sequences) {
      J e = {{"name", q.name}, {"items", q.items}};
      if (q.virtual_limit) e["virtual_limit"] = *q.virtual_limit;
      if (q.constant_tail) e["constant_tail"] = true;
      seqs.push_back(std::move(e));
    }
    doc["sequences"] = std::move(seqs);
  }
  if (!s.queries.empty()) doc["queries"] = s.queries;
  if (s.families) {
    const auto& f = *s.families;
    J fam = J::object();
    J graphs = J::array();
    for (const auto& g : f.graphs) {
      J e = {{"name", g.name}, {"edges", J::array()}, {"f_star", g.f_star}};
      for (const auto& [a, b] : g.edges) e["edges"].push_back({a, b});
      if (g.within) e["within"] = *g.within;
      graphs.push_back(std::move(e));
    }
    fam["graphs"] = std::move(graphs);
    if (f.truths) fam["truths"] = *f.truths;
    fam["fhat"] = f.fhat;
    J fd = J::array();
    for (const auto& d : f.fd) fd.push_back({{"domain", d.domain}, {"f", d.f}});
    fam["fd"] = std::move(fd);
    J ex = J::array();
    for (const auto& e : f.explicit_families)
      ex.push_back({{"name", e.name}, {"kind", e.kind}, {"domain", e.domain}, {"members", e.members}});
    fam["explicit"] = std::move(ex);
    doc["families"] = std::move(fam);
  }
  if (s.blackhole) {
    const auto& b = *s.blackhole;
    J probes = J::array();
    for (const auto& p : b.probes) {
      J e = {{"sequence", p.sequence}, {"x", p.x}, {"epsilon", p.epsilon}};
      if (p.region) e["region"] = *p.region;
      probes.push_back(std::move(e));
    }
    doc["blackhole"] = {{"solution_space", b.solution_space},
                        {"epsilon_grid", b.epsilon_grid},
                        {"probes", std::move(probes)}};
  }
  if (s.environment) {
    const auto& env = *s.environment;
    J base = J::array();
    for (const auto& b : env.base) base.push_back({{"name", b.name}, {"members", b.members}, {"tag", b.tag}});
    J map = J::object();
    for (const auto& [k, v] : env.map) map[k] = v;
    doc["environment"] = {{"points", env.points},
                          {"base", std::move(base)},
                          {"practical_wholes", env.practical_wholes},
                          {"map", std::move(map)}};
  }
  const auto& p = s.parameters;
  J params = J::object();
  if (!p.epsilon.empty()) params["epsilon"] = p.epsilon;
  if (p.cap) params["cap"] = *p.cap;
  if (p.family_cap) params["family_cap"] = *p.family_cap;
  if (p.tol_eq) params["tol_eq"] = *p.tol_eq;
  if (p.samples) params["samples"] = *p.samples;
  if (p.seed) params["seed"] = *p.seed;
  if (p.limit_point_min) params["limit_point_min"] = *p.limit_point_min;
  if (!params.empty()) doc["parameters"] = std::move(params);
  return doc.dump(2) + "\n";
}

std::vector<std::string> integrity_problems(const Scenario& s) {
  Checker c;
  const auto& u = s.universe;
  if (u.symbols.empty()) c.problems.push_back("universe.symbols: empty universe");
  c.distinct(u.symbols, "universe.symbols");
  const std::set<std::string> sym(u.symbols.begin(), u.symbols.end());
  const std::set<std::string> cog(u.cognitive.begin(), u.cognitive.end());
  const char* omega = "universe.symbols";
  c.declared(sym, u.cognitive, "universe.cognitive", omega);
  c.declared(sym, u.logic_base, "universe.logic_base", omega);

  for (std::size_t i = 0; i < s.rules.size(); ++i) {
    const std::string p = "rules[" + std::to_string(i) + "]";
    c.declared(sym, s.rules[i].premises, p + ".if", omega);
    c.declared(sym, s.rules[i].conclusion, p + ".then", omega);
  }
  for (std::size_t i = 0; i < s.implications.size(); ++i) {
    const std::string p = "implications[" + std::to_string(i) + "]";
    const auto& imp = s.implications[i];
    c.declared(sym, Labels{imp.antecedent, imp.consequent, imp.sentence}, p, omega);
  }
  if (s.weights) {
    std::set<std::string> seen;
    for (const auto& [k, v] : *s.weights) {
      c.declared(sym, k, "weights", omega);
      c.unit(v, "weights." + k);
      if (!seen.insert(k).second) c.problems.push_back("weights: duplicate key '" + k + "'");
    }
    for (const auto& l : u.symbols)
      if (!seen.count(l)) c.problems.push_back("weights: no weight for '" + l + "'");
  }
  if (s.matrix) {
    if (s.matrix->size() != u.symbols.size())
      c.problems.push_back("matrix: expected one row per symbol");
    for (std::size_t i = 0; i < s.matrix->size(); ++i) {
      const auto& row = (*s.matrix)[i];
      if (row.size() != u.symbols.size())
        c.problems.push_back("matrix[" + std::to_string(i) + "]: expected one column per symbol");
      for (std::size_t j = 0; j < row.size(); ++j)
        c.unit(row[j], "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
  }

  std::set<std::string> seq_names;
  for (std::size_t i = 0; i < s.sequences.size(); ++i) {
    const auto& q = s.sequences[i];
    const std::string p = "sequences[" + std::to_string(i) + "]";
    if (q.name.empty()) c.problems.push_back(p + ".name: empty name");
    if (!seq_names.insert(q.name).second) c.problems.push_back(p + ".name: duplicate sequence '" + q.name + "'");
    if (q.items.empty()) c.problems.push_back(p + ".items: empty sequence");
    c.declared(sym, q.items, p + ".items", omega);
    if (q.virtual_limit) c.declared(sym, *q.virtual_limit, p + ".virtual_limit", omega);
  }
  for (std::size_t i = 0; i < s.queries.size(); ++i)
    c.declared(sym, s.queries[i], "queries[" + std::to_string(i) + "]", omega);

  if (s.families) {
    const auto& f = *s.families;
    std::set<std::string> names;
    for (std::size_t i = 0; i < f.graphs.size(); ++i) {
      const auto& g = f.graphs[i];
      const std::string p = "families.graphs[" + std::to_string(i) + "]";
      if (!names.insert(g.name).second) c.problems.push_back(p + ".name: duplicate graph '" + g.name + "'");
      for (const auto& [a, b] : g.edges) c.declared(sym, Labels{a, b}, p + ".edges", omega);
      c.declared(sym, g.f_star, p + ".f_star", omega);
      const Labels within = g.within.value_or(u.cognitive);
      if (g.within) c.declared(sym, *g.within, p + ".within", omega);
      if (std::find(within.begin(), within.end(), g.f_star) == within.end())
        c.problems.push_back(p + ".f_star: '" + g.f_star + "' lies outside the domain");
    }
    if (f.truths) c.declared(sym, *f.truths, "families.truths", omega);
    c.declared(sym, f.fhat, "families.fhat", omega);
    for (std::size_t i = 0; i < f.fd.size(); ++i) {
      const std::string p = "families.fd[" + std::to_string(i) + "]";
      c.declared(sym, f.fd[i].domain, p + ".domain", omega);
      c.declared(sym, f.fd[i].f, p + ".f", omega);
    }
    names.clear();
    for (std::size_t i = 0; i < f.explicit_families.size(); ++i) {
      const auto& e = f.explicit_families[i];
      const std::string p = "families.explicit[" + std::to_string(i) + "]";
      if (!names.insert(e.name).second) c.problems.push_back(p + ".name: duplicate family '" + e.name + "'");
      static const std::set<std::string> kinds{"classic-ideal", "classic-filter", "consequence-ideal",
                                               "consequence-filter"};
      if (!kinds.count(e.kind)) c.problems.push_back(p + ".kind: unknown family kind '" + e.kind + "'");
      c.declared(sym, e.domain, p + ".domain", omega);
      const std::set<std::string> dom(e.domain.begin(), e.domain.end());
      for (std::size_t m = 0; m < e.members.size(); ++m) {
        c.declared(sym, e.members[m], p + ".members[" + std::to_string(m) + "]", omega);
        for (const auto& l : e.members[m])
          if (sym.count(l) && !dom.count(l))
            c.problems.push_back(p + ".members[" + std::to_string(m) + "]: '" + l + "' lies outside the domain");
      }
    }
  }

  if (s.blackhole) {
    const auto& b = *s.blackhole;
    c.declared(sym, b.solution_space, "blackhole.solution_space", omega);
    for (std::size_t i = 0; i < b.epsilon_grid.size(); ++i)
      c.threshold(b.epsilon_grid[i], "blackhole.epsilon_grid[" + std::to_string(i) + "]");
    for (std::size_t i = 0; i < b.probes.size(); ++i) {
      const auto& pr = b.probes[i];
      const std::string p = "blackhole.probes[" + std::to_string(i) + "]";
      c.declared(seq_names, pr.sequence, p + ".sequence", "sequences");
      c.declared(sym, pr.x, p + ".x", omega);
      c.threshold(pr.epsilon, p + ".epsilon");
      if (pr.region) c.declared(sym, *pr.region, p + ".region", omega);
    }
  }

  if (s.environment) {
    const auto& env = *s.environment;
    c.distinct(env.points, "environment.points");
    const std::set<std::string> pts(env.points.begin(), env.points.end());
    const char* points = "environment.points";
    for (std::size_t i = 0; i < env.base.size(); ++i) {
      const std::string p = "environment.base[" + std::to_string(i) + "]";
      c.declared(pts, env.base[i].members, p + ".members", points);
      if (env.base[i].tag != "complete" && env.base[i].tag != "irreducible")
        c.problems.push_back(p + ".tag: expected complete or irreducible");
    }
    for (std::size_t i = 0; i < env.practical_wholes.size(); ++i)
      c.declared(pts, env.practical_wholes[i], "environment.practical_wholes[" + std::to_string(i) + "]",
                 points);
    std::set<std::string> mapped;
    for (const auto& [from, to] : env.map) {
      c.declared(cog, from, "environment.map", "universe.cognitive");
      c.declared(pts, to, "environment.map." + from, points);
      mapped.insert(from);
    }
    if (!env.map.empty())
      for (const auto& l : cog)
        if (!mapped.count(l)) c.problems.push_back("environment.map: no image for '" + l + "'");
  }

  const auto& params = s.parameters;
  for (std::size_t i = 0; i < params.epsilon.size(); ++i)
    c.threshold(params.epsilon[i], "parameters.epsilon[" + std::to_string(i) + "]");
  if (params.tol_eq && !(*params.tol_eq >= 0.0 && *params.tol_eq < 1.0))
    c.problems.push_back("parameters.tol_eq: must lie in [0,1)");
  if (params.cap && *params.cap > 62) c.problems.push_back("parameters.cap: at most 62");
  if (params.family_cap && *params.family_cap > 30) c.problems.push_back("parameters.family_cap: at most 30");
  return c.problems;
}

Workspace resolve(const Scenario& s) {
  if (auto problems = integrity_problems(s); !problems.empty()) throw ScenarioError(std::move(problems));
  Workspace w;
  try {
    w.universe = make_universe(s.universe.symbols, s.universe.cognitive, s.universe.logic_base);
    const Universe& u = w.universe;
    std::vector<Rule> rules;
    for (const auto& r : s.rules) {
      Rule rule;
      for (const auto& l : r.premises) rule.premises.push_back(u.index_of(l));
      rule.conclusion = u.index_of(r.conclusion);
      rules.push_back(std::move(rule));
    }
    w.op = std::make_unique<RuleSystem>(u, std::move(rules));
    for (const auto& i : s.implications)
      w.implications.push_back({u.index_of(i.antecedent), u.index_of(i.consequent), u.index_of(i.sentence)});

    const auto& p = s.parameters;
    if (p.tol_eq) w.tolerance = Measure::from_double(*p.tol_eq);
    if (s.matrix) {
      std::vector<std::vector<Measure>> rows;
      for (const auto& row : *s.matrix) {
        rows.emplace_back();
        for (double v : row) rows.back().push_back(Measure::from_double(v));
      }
      w.metric = PseudoMetric::from_matrix(std::move(rows), w.tolerance);
    } else if (s.weights) {
      std::vector<Measure> weights(u.size());
      for (const auto& [k, v] : *s.weights) weights[u.index_of(k)] = Measure::from_double(v);
      w.metric = PseudoMetric::from_weights(std::move(weights), w.tolerance);
    }
    for (const auto& q : s.sequences) {
      ThoughtSequence seq;
      seq.name = q.name;
      for (const auto& l : q.items) seq.items.push_back(u.index_of(l));
      if (q.virtual_limit) seq.virtual_limit = u.index_of(*q.virtual_limit);
      seq.constant_tail = q.constant_tail;
      w.sequences.push_back(std::move(seq));
    }
    if (s.environment) {
      std::vector<BaseObjectSpec> base;
      for (const auto& b : s.environment->base)
        base.push_back({b.name, b.members, b.tag == "irreducible" ? BaseTag::irreducible : BaseTag::complete});
      w.environment = make_environment(s.environment->points, base, s.environment->practical_wholes);
    }
    if (p.cap) w.cap = *p.cap;
    if (p.family_cap) w.family_cap = *p.family_cap;
    if (p.samples) w.samples = *p.samples;
    if (p.seed) w.seed = *p.seed;
    for (double e : p.epsilon) w.epsilons.push_back(Measure::from_double(e));
    w.limit_point_min = p.limit_point_min;
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception& e) {
    throw ScenarioError({e.what()});
  }
  return w;
}

}  // namespace ccspace
