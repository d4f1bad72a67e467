#include "ccspace/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "ccspace/closure_lattice.hpp"
#include "ccspace/error.hpp"

namespace ccspace {

namespace {

using J = nlohmann::ordered_json;

J labels(const Universe& u, const SentenceSet& s) { return J(u.labels_of(s)); }

J sets(const Universe& u, const std::vector<SentenceSet>& family) {
  J out = J::array();
  for (const auto& s : family) out.push_back(labels(u, s));
  return out;
}

J point_sets(const LabelSpace& points, const std::vector<SentenceSet>& family) {
  J out = J::array();
  for (const auto& s : family) out.push_back(points.labels_of(s));
  return out;
}

double num(Measure m) { return m.to_double(); }

std::string eps_tag(Measure m) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", m.to_double());
  return buf;
}

class Section {
 public:
  J body = J::object();

  Section() {
    body["verdicts"] = J::object();
    body["details"] = J::object();
  }

  void add(const Check& c, const std::string& prefix = {}) {
    const std::string id = prefix + c.id;
    body["verdicts"][id] = std::string(to_string(c.verdict));
    J detail = {{"note", c.note}, {"witness", J::array()}};
    for (const auto& w : c.witness) detail["witness"].push_back({{"role", w.role}, {"labels", w.labels}});
    body["details"][id] = std::move(detail);
  }
  void add(const CheckReport& r, const std::string& prefix = {}) {
    for (const auto& c : r.checks) add(c, prefix);
  }
  J& operator[](const char* key) { return body[key]; }
};

struct Context {
  const Scenario& scenario;
  Workspace& w;
  const RunOptions& options;
  std::optional<CctFamily> tau;

  const CctFamily& cct() {
    if (!tau) tau = build_cct(*w.op, w.cap);
    return *tau;
  }
};

J diagnostics_json(const std::vector<Diagnostic>& ds) {
  J out = J::array();
  for (const auto& d : ds) out.push_back({{"code", d.code}, {"message", d.message}});
  return out;
}

std::string_view mode_name(ValidationMode m) {
  switch (m) {
    case ValidationMode::automatic: return "automatic";
    case ValidationMode::exhaustive: return "exhaustive";
    case ValidationMode::sampled: return "sampled";
  }
  return "?";
}

J section_validate(Context& ctx) {
  const Universe& u = ctx.w.universe;
  Section s;
  s["universe"] = {{"symbols", u.symbols().labels()},
                   {"cognitive", labels(u, u.cognitive())},
                   {"logic_base", labels(u, u.logic_base())},
                   {"diagnostics", diagnostics_json(u.diagnostics())}};
  ValidationOptions vo;
  vo.samples = ctx.w.samples;
  vo.seed = ctx.w.seed;
  const AxiomReport axioms = validate_operator(*ctx.w.op, ctx.w.implications, vo);
  s["operator"] = {{"rules", ctx.w.op->rules().size()}, {"mode", std::string(mode_name(axioms.mode))}};
  s.add(axioms.axioms);
  s.add(axioms.cognitive);
  if (ctx.w.metric) {
    const auto& m = *ctx.w.metric;
    MetricValidationOptions mo;
    mo.seed = ctx.w.seed;
    s["metric"] = {{"kind", m.kind() == PseudoMetric::Kind::weights ? "weights" : "matrix"},
                   {"tol_eq", num(m.tolerance())}};
    s.add(validate_pseudometric(m, u, mo), "metric/");
  }
  return std::move(s.body);
}

J section_closures(Context& ctx) {
  const Universe& u = ctx.w.universe;
  const auto& op = *ctx.w.op;
  Section s;
  s["logic"] = labels(u, op.close(u.empty_set()));
  try {
    const MooreFamily moore = enumerate_deductive(op, u.cognitive(), ctx.w.cap);
    s["deductive_in_cognitive"] = {{"count", moore.members.size()}, {"members", sets(u, moore.members)}};
  } catch (const CapExceeded& e) {
    s["deductive_in_cognitive"] = {{"error", e.what()}};
  }
  J queries = J::array();
  for (const auto& q : ctx.scenario.queries) {
    const SentenceSet a = u.set_of(q);
    const SentenceSet cn = op.close(a);
    J entry = {{"set", labels(u, a)}, {"cn", labels(u, cn)}};
    try {
      const SentenceSet cl = cognitive_closure(op, a, ctx.w.cap);
      entry["cognitive_closure"] = labels(u, cl);
      entry["agree"] = cl == cn;
    } catch (const CapExceeded& e) {
      entry["cognitive_closure"] = nullptr;
      entry["error"] = e.what();
    }
    queries.push_back(std::move(entry));
  }
  s["queries"] = std::move(queries);
  return std::move(s.body);
}

J section_cct(Context& ctx) {
  const Universe& u = ctx.w.universe;
  Section s;
  const CctFamily& tau = ctx.cct();
  const SentenceSet covered = tau.union_of_members();
  s["tau"] = {{"count", tau.members.size()},
              {"members", sets(u, tau.members)},
              {"union", labels(u, covered)},
              {"uncovered", labels(u, u.cognitive() - covered)},
              {"diagnostics", diagnostics_json(tau.diagnostics)}};
  return std::move(s.body);
}

J section_theorems(Context& ctx) {
  Section s;
  TheoremOptions to;
  to.samples = ctx.w.samples;
  to.seed = ctx.w.seed;
  to.cap = ctx.w.cap;
  s.add(check_structure_theorems(*ctx.w.op, ctx.cct(), to));
  return std::move(s.body);
}

J section_limits(Context& ctx) {
  const Universe& u = ctx.w.universe;
  Section s;
  if (!ctx.w.metric) {
    s["note"] = "no weights or similarity matrix";
    return std::move(s.body);
  }
  const auto& metric = *ctx.w.metric;
  if (!metric.trusted()) {
    s["note"] = "similarity matrix is not a pseudometric; convergence not evaluated";
    return std::move(s.body);
  }
  if (ctx.w.epsilons.empty()) s["note"] = "no thresholds configured";
  J runs = J::array();
  for (Measure eps : ctx.w.epsilons) {
    std::vector<LimitReport> reports;
    for (const auto& seq : ctx.w.sequences)
      reports.push_back(detect_limits(metric, seq, eps, ctx.w.limit_point_min));
    for (std::size_t i = 0; i < ctx.w.sequences.size(); ++i) {
      const auto& seq = ctx.w.sequences[i];
      const auto& rep = reports[i];
      J detected = J::array();
      for (const auto& c : rep.candidates)
        if (c.detected) detected.push_back({{"x", u.label(c.sentence)}, {"onset", *c.onset}});
      J points = J::array();
      for (const auto& [x, hits] : rep.limit_points) points.push_back({{"x", u.label(x)}, {"hits", hits}});
      J entry = {{"sequence", seq.name},
                 {"epsilon", num(eps)},
                 {"items", seq.items.size()},
                 {"limits", labels(u, rep.limits)},
                 {"detected", std::move(detected)},
                 {"limit_point_min", rep.limit_point_min},
                 {"limit_points", std::move(points)}};
      if (seq.virtual_limit) {
        entry["virtual_limit"] = u.label(*seq.virtual_limit);
        entry["virtual_limit_detected"] = rep.limits.contains(*seq.virtual_limit);
      }
      runs.push_back(std::move(entry));

      std::vector<PartnerSequence> partners;
      for (std::size_t j = 0; j < ctx.w.sequences.size(); ++j)
        if (j != i) partners.push_back({&ctx.w.sequences[j], &reports[j]});
      s.add(check_limit_theorems(*ctx.w.op, metric, seq, rep, partners, ctx.w.cap),
            seq.name + "@" + eps_tag(eps) + "/");
    }
  }
  s["runs"] = std::move(runs);
  return std::move(s.body);
}

J section_blackhole(Context& ctx) {
  const Universe& u = ctx.w.universe;
  Section s;
  if (!ctx.scenario.blackhole) {
    s["note"] = "no black-hole block";
    return std::move(s.body);
  }
  if (!ctx.w.metric || !ctx.w.metric->trusted()) {
    s["note"] = "no usable metric";
    return std::move(s.body);
  }
  const auto& metric = *ctx.w.metric;
  const auto& block = *ctx.scenario.blackhole;
  const SentenceSet space = u.set_of(block.solution_space);
  auto find_seq = [&](const std::string& name) -> const ThoughtSequence& {
    return *std::find_if(ctx.w.sequences.begin(), ctx.w.sequences.end(),
                         [&](const ThoughtSequence& q) { return q.name == name; });
  };

  J probes = J::array();
  for (const auto& p : block.probes) {
    const Measure eps = Measure::from_double(p.epsilon);
    const SentenceSet region = p.region ? u.set_of(*p.region) : space;
    const std::size_t x = u.index_of(p.x);
    const auto& seq = find_seq(p.sequence);
    const auto k = detect_black_hole(metric, seq, x, eps, region);
    J entry = {{"sequence", p.sequence},
               {"x", p.x},
               {"epsilon", num(eps)},
               {"region", labels(u, region)},
               {"ball", labels(u, ball(metric, x, eps))}};
    entry["k"] = k ? J(*k) : J(nullptr);
    probes.push_back(std::move(entry));
  }
  s["probes"] = std::move(probes);

  std::vector<Measure> grid;
  for (double e : block.epsilon_grid) grid.push_back(Measure::from_double(e));
  const CompactnessReport comp = check_compactness(metric, u, space, ctx.w.sequences, grid);
  J holes = J::array();
  for (const auto& h : comp.black_holes)
    holes.push_back({{"sequence", h.sequence}, {"x", u.label(h.x)}, {"epsilon", num(h.epsilon)}, {"k", h.onset}});
  s["solution_space"] = labels(u, space);
  s["compact"] = comp.compact;
  s["black_holes"] = std::move(holes);
  s["warnings"] = diagnostics_json(comp.warnings);
  s.add(comp.checks);
  return std::move(s.body);
}

J section_families(Context& ctx) {
  const Universe& u = ctx.w.universe;
  const auto& op = *ctx.w.op;
  const std::size_t cap = ctx.w.family_cap;
  Section s;
  if (!ctx.scenario.families) {
    s["note"] = "no families block";
    return std::move(s.body);
  }
  const auto& block = *ctx.scenario.families;

  J ideals = J::array();
  for (const auto& g : block.graphs) {
    ConnectionGraph graph(u.size());
    for (const auto& [a, b] : g.edges) graph.connect(u.index_of(a), u.index_of(b));
    const SentenceSet within = g.within ? u.set_of(*g.within) : u.cognitive();
    const std::size_t f_star = u.index_of(g.f_star);
    J entry = {{"graph", g.name}, {"f_star", g.f_star}, {"within", labels(u, within)}};
    try {
      const SetFamily ideal = build_connection_ideal(graph, f_star, within, cap);
      entry["reachable"] = labels(u, graph.reachable(f_star, within));
      entry["members"] = sets(u, ideal.members);
      s.add(check_family_axioms(u, ideal, FamilyKind::classic_ideal, &op, cap), g.name + "/ideal/");
      if (block.truths) {
        const SetFamily truth = build_truth_ideal(graph, f_star, within, u.set_of(*block.truths), cap);
        entry["truth_members"] = sets(u, truth.members);
        CheckReport r = check_family_axioms(u, truth, FamilyKind::consequence_ideal, &op, cap);
        for (auto& c : r.checks)
          if (c.verdict == Verdict::fail) c.verdict = Verdict::discrepancy;
        s.add(r, g.name + "/truth/");
      }
    } catch (const CapExceeded& e) {
      entry["error"] = e.what();
      s.add(Check{"construction", Verdict::not_evaluated, e.what(), {}}, g.name + "/");
    }
    ideals.push_back(std::move(entry));
  }
  s["connection_ideals"] = std::move(ideals);

  J fhat = J::array();
  for (const auto& f : block.fhat) {
    const std::string prefix = "fhat(" + f + ")/";
    try {
      const FamilyConstruction c = build_fhat_filter(op, u.index_of(f), cap);
      fhat.push_back({{"f", f}, {"members", sets(u, c.family.members)}});
      s.add(c.classic, prefix);
    } catch (const CapExceeded& e) {
      fhat.push_back({{"f", f}, {"error", e.what()}});
      s.add(Check{"construction", Verdict::not_evaluated, e.what(), {}}, prefix);
    }
  }
  s["fhat"] = std::move(fhat);

  J fd = J::array();
  for (const auto& d : block.fd) {
    const SentenceSet domain = u.set_of(d.domain);
    const std::string prefix = "fd(" + d.f + ")/";
    J entry = {{"f", d.f}, {"domain", labels(u, domain)}};
    try {
      const FamilyConstruction c = build_fd_filter(op, domain, u.index_of(d.f), cap);
      entry["members"] = sets(u, c.family.members);
      s.add(c.classic, prefix);
      if (c.consequence) s.add(*c.consequence, prefix + "consequence/");
    } catch (const CapExceeded& e) {
      entry["error"] = e.what();
      s.add(Check{"construction", Verdict::not_evaluated, e.what(), {}}, prefix);
    } catch (const std::invalid_argument& e) {
      entry["error"] = e.what();
      s.add(Check{"precondition", Verdict::fail, e.what(), {{"domain", d.domain}}}, prefix);
    }
    fd.push_back(std::move(entry));
  }
  s["fd"] = std::move(fd);

  J explicit_families = J::array();
  static const std::map<std::string, FamilyKind> kinds{
      {"classic-ideal", FamilyKind::classic_ideal},
      {"classic-filter", FamilyKind::classic_filter},
      {"consequence-ideal", FamilyKind::consequence_ideal},
      {"consequence-filter", FamilyKind::consequence_filter}};
  for (const auto& e : block.explicit_families) {
    std::vector<SentenceSet> members;
    for (const auto& m : e.members) members.push_back(u.set_of(m));
    const SetFamily family = SetFamily::make(u.set_of(e.domain), std::move(members));
    explicit_families.push_back({{"name", e.name}, {"kind", e.kind}, {"members", sets(u, family.members)}});
    try {
      s.add(check_family_axioms(u, family, kinds.at(e.kind), &op, cap), e.name + "/");
    } catch (const CapExceeded& ex) {
      s.add(Check{"axioms", Verdict::not_evaluated, ex.what(), {}}, e.name + "/");
    }
  }
  s["explicit"] = std::move(explicit_families);
  return std::move(s.body);
}

J section_environment(Context& ctx) {
  const Universe& u = ctx.w.universe;
  Section s;
  if (!ctx.w.environment) {
    s["note"] = "no environment block";
    return std::move(s.body);
  }
  const Environment& env = *ctx.w.environment;
  PracticalTopology topology;
  try {
    topology = build_practical_topology(env);
  } catch (const WitnessedError& e) {
    s.add(Check{"practical_wholes", Verdict::fail, e.what(), {{"whole", e.witness()}}});
    return std::move(s.body);
  }
  s["opens"] = point_sets(env.points, topology.opens);
  s.add(topology.checks);

  J closures = J::array();
  for (std::size_t i = 0; i < env.base.size(); ++i) {
    const auto& b = env.base[i];
    J entry = {{"name", b.name}, {"tag", std::string(to_string(b.tag))}, {"members", env.points.labels_of(b.members)}};
    try {
      const BaseClosure c = base_closure(env, i);
      entry["closure"] = env.points.labels_of(c.closure);
      entry["ambiguous"] = c.ambiguous;
      entry["multiplicity"] = c.multiplicity;
    } catch (const WitnessedError& e) {
      entry["closure"] = nullptr;
      entry["error"] = e.what();
    }
    closures.push_back(std::move(entry));
  }
  s["base_closures"] = std::move(closures);

  const auto& block = *ctx.scenario.environment;
  if (block.map.empty()) {
    s["map"] = nullptr;
    return std::move(s.body);
  }
  const CognitiveMap map = make_cognitive_map(u, env, block.map);
  J m = J::object();
  for (const auto& [from, to] : block.map) m[from] = to;
  s["map"] = std::move(m);
  s.add(check_cognitive_continuity(u, map, topology, ctx.cct()));
  const WeakTopology weak = weak_topology_clopen(u, map, topology);
  s["weak_topology"] = sets(u, weak.family);
  s.add(weak.checks);
  return std::move(s.body);
}

using SectionFn = J (*)(Context&);

const std::vector<std::pair<std::string, SectionFn>>& sections() {
  static const std::vector<std::pair<std::string, SectionFn>> all{
      {"validate", section_validate},     {"closures", section_closures},
      {"cct", section_cct},               {"theorems", section_theorems},
      {"limits", section_limits},         {"blackhole", section_blackhole},
      {"families", section_families},     {"environment", section_environment}};
  return all;
}

// Structured emission.

void write_float(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%#.9g", v);
  out += buf;
}

void write_structured(std::string& out, const J& j, int depth) {
  const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
  const std::string close_pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    out += "{\n";
    for (std::size_t i = 0; i < keys.size(); ++i) {
      out += pad + J(keys[i]).dump() + ": ";
      write_structured(out, j.at(keys[i]), depth + 1);
      out += i + 1 < keys.size() ? ",\n" : "\n";
    }
    out += close_pad + "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
      return;
    }
    const bool flat = std::all_of(j.begin(), j.end(), [](const J& e) { return e.is_primitive(); });
    if (flat) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ", ";
        write_structured(out, j[i], depth + 1);
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      write_structured(out, j[i], depth + 1);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close_pad + "]";
  } else if (j.is_number_float()) {
    write_float(out, j.get<double>());
  } else {
    out += j.dump(-1, ' ', false, nlohmann::ordered_json::error_handler_t::replace);
  }
}

// Text emission.

std::string scalar_text(const J& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  if (j.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", j.get<double>());
    return buf;
  }
  return j.dump();
}

std::string inline_text(const J& j) {
  if (!j.is_array()) return scalar_text(j);
  std::string out = "{";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) out += ", ";
    out += inline_text(j[i]);
  }
  return out + "}";
}

// prose strings get one line each
bool inline_array(const J& j) {
  return std::all_of(j.begin(), j.end(), [](const J& e) {
    if (e.is_string()) return e.get<std::string>().find(' ') == std::string::npos;
    return e.is_primitive() || (e.is_array() && inline_array(e));
  });
}

void write_text(std::string& out, const J& j, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  for (const auto& [k, v] : j.items()) {
    if (k == "witness" && v.is_array() && v.empty()) continue;
    if (v.is_object()) {
      if (v.empty()) continue;
      out += pad + k + ":\n";
      write_text(out, v, depth + 1);
    } else if (v.is_array() && !inline_array(v)) {
      out += pad + k + ":\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          std::string item;
          write_text(item, e, depth + 2);
          item.replace(static_cast<std::size_t>(depth) * 2 + 2, 2, "- ");
          out += item;
        } else {
          out += pad + "  - " + inline_text(e) + "\n";
        }
      }
    } else {
      out += pad + k + ": " + inline_text(v) + "\n";
    }
  }
}

void count_findings(const J& j, std::size_t& n) {
  if (!j.is_object()) return;
  for (const auto& [k, v] : j.items()) {
    if (k == "verdicts" && v.is_object()) {
      for (const auto& [id, verdict] : v.items())
        if (verdict == "fail" || verdict == "discrepancy") ++n;
    } else {
      count_findings(v, n);
    }
  }
}

void tally(const J& j, std::map<std::string, std::size_t>& counts) {
  if (!j.is_object()) return;
  for (const auto& [k, v] : j.items()) {
    if (k == "verdicts" && v.is_object()) {
      for (const auto& [id, verdict] : v.items()) ++counts[verdict.get<std::string>()];
    } else {
      tally(v, counts);
    }
  }
}

}  // namespace

std::size_t Report::findings() const {
  std::size_t n = 0;
  count_findings(tree, n);
  return n;
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : sections()) n.push_back(name);
    n.push_back("all");
    return n;
  }();
  return names;
}

Report build_report(std::string_view command, const Scenario& scenario, std::string_view digest,
                    const RunOptions& options) {
  const auto& all = sections();
  const bool everything = command == "all";
  if (!everything && std::none_of(all.begin(), all.end(), [&](const auto& s) { return s.first == command; }))
    throw std::invalid_argument("unknown command '" + std::string(command) + "'");

  Workspace w = resolve(scenario);
  if (options.seed) w.seed = *options.seed;
  if (options.cap) w.cap = *options.cap;
  if (options.epsilon) {
    if (!(*options.epsilon > 0.0 && *options.epsilon < 1.0))
      throw ScenarioError({"--epsilon: threshold must lie strictly between 0 and 1"});
    w.epsilons = {Measure::from_double(*options.epsilon)};
  }
  Context ctx{scenario, w, options, std::nullopt};

  Report report;
  J& t = report.tree;
  t["schema"] = std::string(kReportSchema);
  t["tool"] = std::string(kToolVersion);
  t["command"] = std::string(command);
  t["scenario"] = {{"name", scenario.name}, {"sha256", std::string(digest)}};
  t["seed"] = w.seed;
  t["cap"] = w.cap;
  t["notes"] = J::array({
      "continuity is checked on proper opens only; preimage(E) = C is never in τ",
      "timings are omitted so that reports are byte-identical across runs"});
  for (const auto& [name, fn] : all) {
    if (!everything && name != command) continue;
    try {
      t[name] = fn(ctx);
    } catch (const CapExceeded& e) {
      Section s;
      s.add(Check{"section", Verdict::not_evaluated, e.what(), {}});
      t[name] = std::move(s.body);
    }
  }
  std::map<std::string, std::size_t> counts;
  tally(t, counts);
  J summary = J::object();
  for (const char* v : {"pass", "fail", "discrepancy", "not_applicable", "not_evaluated"})
    summary[v] = counts[v];
  t["summary"] = std::move(summary);
  return report;
}

std::string emit_report(const Report& report, ReportFormat format) {
  std::string out;
  if (format == ReportFormat::structured) {
    write_structured(out, report.tree, 0);
  } else {
    write_text(out, report.tree, 0);
  }
  if (format == ReportFormat::structured) out += "\n";
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

RunResult run(std::string_view command, const std::string& scenario_path, const RunOptions& options) {
  RunResult result;
  std::ifstream in(scenario_path, std::ios::binary);
  if (!in) {
    result.exit_code = 3;
    result.error = "cannot read scenario file '" + scenario_path + "'";
    return result;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    const Scenario scenario = parse_scenario(text);
    const Report report = build_report(command, scenario, sha256_hex(text), options);
    result.output = emit_report(report, options.format);
    if (options.strict && report.findings() > 0) {
      result.exit_code = 2;
      result.error = std::to_string(report.findings()) + " failed check(s) or discrepancies";
    }
  } catch (const ScenarioError& e) {
    result.exit_code = 1;
    result.error = e.what();
  } catch (const std::invalid_argument& e) {
    result.exit_code = 1;
    result.error = e.what();
  } catch (const std::length_error& e) {
    result.exit_code = 1;
    result.error = e.what();
  }
  return result;
}

}  // namespace ccspace
