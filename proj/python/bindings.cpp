#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccspace/closure_lattice.hpp"
#include "ccspace/error.hpp"
#include "ccspace/cognition_metric.hpp"
#include "ccspace/families.hpp"
#include "ccspace/report.hpp"

namespace py = pybind11;
using namespace ccspace;

namespace {

using Labels = std::vector<std::string>;

py::dict to_dict(const Check& c) {
  py::dict d;
  d["verdict"] = std::string(to_string(c.verdict));
  d["note"] = c.note;
  py::list w;
  for (const auto& n : c.witness) w.append(py::make_tuple(n.role, n.labels));
  d["witness"] = w;
  return d;
}

py::dict to_dict(const CheckReport& r) {
  py::dict d;
  for (const auto& c : r.checks) d[py::str(c.id)] = to_dict(c);
  return d;
}

// Universe plus a Horn rule system, addressed by labels.
class System {
 public:
  System(Labels symbols, const Labels& cognitive, const Labels& logic_base,
         const std::vector<std::pair<Labels, std::string>>& rules)
      : universe_(make_universe(std::move(symbols), cognitive, logic_base)),
        op_(universe_, convert(rules)) {}

  Labels symbols() const { return universe_.symbols().labels(); }
  Labels cognitive() const { return universe_.labels_of(universe_.cognitive()); }
  Labels logic_base() const { return universe_.labels_of(universe_.logic_base()); }

  Labels close(const Labels& a) const { return universe_.labels_of(op_.close(universe_.set_of(a))); }
  bool is_deductive(const Labels& a) const { return ccspace::is_deductive(op_, universe_.set_of(a)); }
  Labels cognitive_closure(const Labels& a, std::size_t cap) const {
    return universe_.labels_of(ccspace::cognitive_closure(op_, universe_.set_of(a), cap));
  }

  std::vector<Labels> deductive_sets(const std::optional<Labels>& within, std::size_t cap) const {
    const SentenceSet w = within ? universe_.set_of(*within) : universe_.full_set();
    return labels(enumerate_deductive(op_, w, cap).members);
  }

  std::vector<Labels> cct(std::size_t cap) const { return labels(build_cct(op_, cap).members); }

  py::dict validate(std::size_t samples, std::uint64_t seed) const {
    ValidationOptions o;
    o.samples = samples;
    o.seed = seed;
    const AxiomReport r = validate_operator(op_, {}, o);
    py::dict d = to_dict(r.axioms);
    for (const auto& c : r.cognitive.checks) d[py::str(c.id)] = to_dict(c);
    return d;
  }

  py::dict theorems(std::size_t cap) const {
    TheoremOptions o;
    o.cap = cap;
    return to_dict(check_structure_theorems(op_, build_cct(op_, cap), o));
  }

  py::dict fhat(const std::string& f, std::size_t cap) const {
    return construction(build_fhat_filter(op_, universe_.index_of(f), cap));
  }

  py::dict fd(const Labels& domain, const std::string& f, std::size_t cap) const {
    return construction(build_fd_filter(op_, universe_.set_of(domain), universe_.index_of(f), cap));
  }

  py::dict family_axioms(const Labels& domain, const std::vector<Labels>& members,
                         const std::string& kind, std::size_t cap) const {
    static const std::map<std::string, FamilyKind> kinds = {
        {"classic-ideal", FamilyKind::classic_ideal},
        {"classic-filter", FamilyKind::classic_filter},
        {"consequence-ideal", FamilyKind::consequence_ideal},
        {"consequence-filter", FamilyKind::consequence_filter}};
    const auto it = kinds.find(kind);
    if (it == kinds.end()) throw std::invalid_argument("unknown family kind: " + kind);
    std::vector<SentenceSet> sets;
    for (const auto& m : members) sets.push_back(universe_.set_of(m));
    const SetFamily family = SetFamily::make(universe_.set_of(domain), std::move(sets));
    return to_dict(check_family_axioms(universe_, family, it->second, &op_, cap));
  }

 private:
  std::vector<Rule> convert(const std::vector<std::pair<Labels, std::string>>& rules) const {
    std::vector<Rule> out;
    for (const auto& [premises, conclusion] : rules) {
      Rule r;
      for (const auto& p : premises) r.premises.push_back(universe_.index_of(p));
      r.conclusion = universe_.index_of(conclusion);
      out.push_back(std::move(r));
    }
    return out;
  }

  std::vector<Labels> labels(const std::vector<SentenceSet>& family) const {
    std::vector<Labels> out;
    for (const auto& s : family) out.push_back(universe_.labels_of(s));
    return out;
  }

  py::dict construction(const FamilyConstruction& c) const {
    py::dict d;
    d["members"] = labels(c.family.members);
    d["classic"] = to_dict(c.classic);
    if (c.consequence) d["consequence"] = to_dict(*c.consequence);
    return d;
  }

  Universe universe_;
  RuleSystem op_;
};

// Weight metric cog(x, y) = |w(x) - w(y)| over labelled thoughts.
class WeightMetric {
 public:
  explicit WeightMetric(const std::vector<std::pair<std::string, double>>& weights)
      : space_(names(weights)), metric_(PseudoMetric::from_weights(measures(weights))) {}

  double cog(const std::string& x, const std::string& y) const {
    return metric_.cog(space_.index_of(x), space_.index_of(y)).to_double();
  }

  Labels ball(const std::string& x, double eps) const {
    return space_.labels_of(ccspace::ball(metric_, space_.index_of(x), Measure::from_double(eps)));
  }

  py::dict detect_limits(const Labels& items, double eps, std::optional<std::size_t> limit_point_min) const {
    const LimitReport r = ccspace::detect_limits(metric_, sequence(items), Measure::from_double(eps), limit_point_min);
    py::dict onsets;
    for (const auto& c : r.candidates)
      if (c.detected) onsets[py::str(space_.label(c.sentence))] = *c.onset;
    py::list points;
    for (const auto& [x, hits] : r.limit_points) points.append(py::make_tuple(space_.label(x), hits));
    py::dict d;
    d["limits"] = space_.labels_of(r.limits);
    d["onsets"] = onsets;
    d["limit_point_min"] = r.limit_point_min;
    d["limit_points"] = points;
    return d;
  }

  std::optional<std::size_t> black_hole(const Labels& items, const std::string& x, double eps,
                                        const Labels& region) const {
    return detect_black_hole(metric_, sequence(items), space_.index_of(x), Measure::from_double(eps),
                             space_.set_of(region));
  }

 private:
  static Labels names(const std::vector<std::pair<std::string, double>>& w) {
    Labels out;
    for (const auto& [k, v] : w) out.push_back(k);
    return out;
  }
  static std::vector<Measure> measures(const std::vector<std::pair<std::string, double>>& w) {
    std::vector<Measure> out;
    for (const auto& [k, v] : w) out.push_back(Measure::from_double(v));
    return out;
  }
  ThoughtSequence sequence(const Labels& items) const {
    ThoughtSequence s;
    for (const auto& i : items) s.items.push_back(space_.index_of(i));
    return s;
  }

  LabelSpace space_;
  PseudoMetric metric_;
};

}  // namespace

PYBIND11_MODULE(_ccspace, m) {
  m.doc() = "Closure operators, CWO topologies, cognition metrics and the scenario runner.";
  m.attr("__version__") = std::string(kToolVersion.substr(kToolVersion.find(' ') + 1));

  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_ValueError);
  py::register_exception<ScenarioError>(m, "ScenarioError", PyExc_ValueError);

  py::class_<System>(m, "System")
      .def(py::init<Labels, const Labels&, const Labels&, const std::vector<std::pair<Labels, std::string>>&>(),
           py::arg("symbols"), py::arg("cognitive"), py::arg("logic_base"),
           py::arg("rules") = std::vector<std::pair<Labels, std::string>>{})
      .def_property_readonly("symbols", &System::symbols)
      .def_property_readonly("cognitive", &System::cognitive)
      .def_property_readonly("logic_base", &System::logic_base)
      .def("close", &System::close, py::arg("a"))
      .def("is_deductive", &System::is_deductive, py::arg("a"))
      .def("cognitive_closure", &System::cognitive_closure, py::arg("a"),
           py::arg("cap") = kDefaultEnumerationCap)
      .def("deductive_sets", &System::deductive_sets, py::arg("within") = py::none(),
           py::arg("cap") = kDefaultEnumerationCap)
      .def("cct", &System::cct, py::arg("cap") = kDefaultEnumerationCap)
      .def("validate", &System::validate, py::arg("samples") = 1000, py::arg("seed") = 0)
      .def("theorems", &System::theorems, py::arg("cap") = kDefaultEnumerationCap)
      .def("fhat", &System::fhat, py::arg("f"), py::arg("cap") = kDefaultFamilyCap)
      .def("fd", &System::fd, py::arg("domain"), py::arg("f"), py::arg("cap") = kDefaultFamilyCap)
      .def("family_axioms", &System::family_axioms, py::arg("domain"), py::arg("members"),
           py::arg("kind"), py::arg("cap") = kDefaultFamilyCap);

  py::class_<WeightMetric>(m, "WeightMetric")
      .def(py::init<const std::vector<std::pair<std::string, double>>&>(), py::arg("weights"))
      .def("cog", &WeightMetric::cog)
      .def("ball", &WeightMetric::ball, py::arg("x"), py::arg("eps"))
      .def("detect_limits", &WeightMetric::detect_limits, py::arg("items"), py::arg("eps"),
           py::arg("limit_point_min") = py::none());

  m.def(
      "detect_black_hole",
      [](const WeightMetric& metric, const Labels& items, const std::string& x, double eps,
         const Labels& region) { return metric.black_hole(items, x, eps, region); },
      py::arg("metric"), py::arg("items"), py::arg("x"), py::arg("eps"), py::arg("region"));

  m.def(
      "run",
      [](const std::string& command, const std::string& path, const std::string& format, bool strict,
         std::optional<std::uint64_t> seed, std::optional<double> epsilon, std::optional<std::size_t> cap) {
        RunOptions o;
        if (format == "structured")
          o.format = ReportFormat::structured;
        else if (format != "text")
          throw std::invalid_argument("format must be 'text' or 'structured'");
        o.strict = strict;
        o.seed = seed;
        o.epsilon = epsilon;
        o.cap = cap;
        const RunResult r = ccspace::run(command, path, o);
        return py::make_tuple(r.exit_code, r.output, r.error);
      },
      py::arg("command"), py::arg("path"), py::arg("format") = "text", py::arg("strict") = false,
      py::arg("seed") = py::none(), py::arg("epsilon") = py::none(), py::arg("cap") = py::none());

  m.def("sha256_hex", [](const std::string& s) { return sha256_hex(s); });
}
