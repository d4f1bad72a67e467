#include "ccspace/environment.hpp"

#include <algorithm>
#include <stdexcept>

#include "ccspace/error.hpp"

namespace ccspace {

namespace {

SentenceSet union_of_base_inside(const Environment& env, const SentenceSet& whole) {
  SentenceSet u = env.points.empty_set();
  for (const auto& b : env.base)
    if (b.members.is_subset_of(whole)) u |= b.members;
  return u;
}

bool expressible(const Environment& env, const SentenceSet& whole) {
  return union_of_base_inside(env, whole) == whole;
}

}  // namespace

std::string_view to_string(BaseTag t) noexcept {
  return t == BaseTag::complete ? "complete" : "irreducible";
}

Environment make_environment(std::vector<std::string> points, const std::vector<BaseObjectSpec>& base,
                             const std::vector<std::vector<std::string>>& practical_wholes) {
  Environment env;
  env.points = LabelSpace(std::move(points));
  for (const auto& spec : base)
    env.base.push_back({spec.name, env.points.set_of(spec.members), spec.tag});
  for (const auto& pw : practical_wholes) env.practical_wholes.push_back(env.points.set_of(pw));
  return env;
}

std::vector<SentenceSet> PracticalTopology::proper_opens() const {
  std::vector<SentenceSet> out;
  for (const auto& o : opens)
    if (!o.empty() && o != points.full_set()) out.push_back(o);
  return out;
}

PracticalTopology build_practical_topology(const Environment& env) {
  if (env.base.size() > kMaxBaseObjects)
    throw CapExceeded("at most " + std::to_string(kMaxBaseObjects) + " base objects are supported");
  PracticalTopology t;
  t.points = env.points;
  const SentenceSet everything = env.points.full_set();

  std::vector<SentenceSet> proper;
  for (const auto& pw : env.practical_wholes) {
    if (!expressible(env, pw))
      throw WitnessedError("practical whole is not a union of base objects",
                           env.points.labels_of(pw));
    if (!pw.empty() && pw != everything) proper.push_back(pw);
  }
  std::sort(proper.begin(), proper.end());
  proper.erase(std::unique(proper.begin(), proper.end()), proper.end());

  t.opens.push_back(env.points.empty_set());
  if (!everything.empty()) t.opens.push_back(everything);
  t.opens.insert(t.opens.end(), proper.begin(), proper.end());

  t.checks.add({"designated_clopen", Verdict::pass,
                "every proper open is a designated practical whole, so open and closed by "
                "designation",
                {}});

  Check axioms{"topology_axioms", Verdict::pass, "opens closed under union and intersection", {}};
  auto is_open = [&](const SentenceSet& s) {
    return std::find(t.opens.begin(), t.opens.end(), s) != t.opens.end();
  };
  for (std::size_t i = 0; i < t.opens.size() && axioms.verdict == Verdict::pass; ++i)
    for (std::size_t j = i + 1; j < t.opens.size(); ++j) {
      const SentenceSet& a = t.opens[i];
      const SentenceSet& b = t.opens[j];
      for (const auto& [role, r] : {std::pair{"union", a | b}, std::pair{"intersection", a & b}}) {
        if (is_open(r)) continue;
        axioms.verdict = Verdict::discrepancy;
        axioms.note = std::string("the ") + role + " of two opens is not open";
        axioms.witness = {{"U", env.points.labels_of(a)},
                          {"V", env.points.labels_of(b)},
                          {role, env.points.labels_of(r)}};
        break;
      }
      if (axioms.verdict != Verdict::pass) break;
    }
  t.checks.add(std::move(axioms));
  return t;
}

BaseClosure base_closure(const Environment& env, std::size_t index) {
  const BaseObject& b = env.base.at(index);
  std::vector<SentenceSet> candidates;
  for (const auto& pw : env.practical_wholes)
    if (b.members.is_subset_of(pw) && expressible(env, pw)) candidates.push_back(pw);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  if (candidates.empty())
    throw WitnessedError("no practical whole contains the base object",
                         env.points.labels_of(b.members));

  auto smaller = [](const SentenceSet& x, const SentenceSet& y) {
    if (x.count() != y.count()) return x.count() < y.count();
    return x < y;
  };
  std::stable_sort(candidates.begin(), candidates.end(), smaller);
  BaseClosure out;
  out.closure = candidates.front();
  out.multiplicity = candidates.size();
  out.ambiguous = candidates.size() > 1 && candidates[1].count() == candidates[0].count();
  return out;
}

SentenceSet CognitiveMap::preimage(const SentenceSet& points, std::size_t width) const {
  SentenceSet out(width);
  for (std::size_t x = 0; x < target.size(); ++x)
    if (target[x] && points.contains(*target[x])) out.insert(x);
  return out;
}

CognitiveMap make_cognitive_map(const Universe& universe, const Environment& env,
                                const std::vector<std::pair<std::string, std::string>>& pairs) {
  CognitiveMap map;
  map.target.assign(universe.size(), std::nullopt);
  for (const auto& [from, to] : pairs) {
    const std::size_t x = universe.index_of(from);
    if (!universe.cognitive().contains(x))
      throw WitnessedError("map source outside the cognitive space", {from});
    if (map.target[x]) throw WitnessedError("sentence mapped twice", {from});
    map.target[x] = env.points.index_of(to);
  }
  std::vector<std::string> missing;
  for (auto x : universe.cognitive().elements())
    if (!map.target[x]) missing.push_back(universe.label(x));
  if (!missing.empty()) throw WitnessedError("map is not total over the cognitive space", missing);
  return map;
}

Check check_cognitive_continuity(const Universe& universe, const CognitiveMap& map,
                                 const PracticalTopology& topology, const CctFamily& tau) {
  Check c{"continuity", Verdict::pass,
          "preimage of every proper open lies in τ (∅ and E excluded: preimage(E) = C)", {}};
  std::vector<SentenceSet> opens = topology.proper_opens();
  std::sort(opens.begin(), opens.end());
  for (const auto& open : opens) {
    const SentenceSet pre = map.preimage(open, universe.size());
    if (tau.contains(pre)) continue;
    c.verdict = Verdict::fail;
    c.witness.push_back({"open", topology.points.labels_of(open)});
    c.witness.push_back({"preimage", universe.labels_of(pre)});
  }
  if (c.verdict == Verdict::fail) c.note = "some proper open has a preimage outside τ";
  return c;
}

WeakTopology weak_topology_clopen(const Universe& universe, const CognitiveMap& map,
                                  const PracticalTopology& topology) {
  WeakTopology w;
  for (const auto& open : topology.opens) w.family.push_back(map.preimage(open, universe.size()));
  std::sort(w.family.begin(), w.family.end());
  w.family.erase(std::unique(w.family.begin(), w.family.end()), w.family.end());

  const SentenceSet& c = universe.cognitive();
  Check complement{"clopen_complement", Verdict::pass,
                   "the complement in C of every preimage is again a preimage", {}};
  for (const auto& member : w.family) {
    const SentenceSet rest = complement_in(member, c);
    if (std::binary_search(w.family.begin(), w.family.end(), rest)) continue;
    complement.verdict = Verdict::discrepancy;
    complement.note = "a preimage has a complement in C that is not a preimage";
    complement.witness = {{"member", universe.labels_of(member)},
                          {"complement", universe.labels_of(rest)}};
    break;
  }
  w.checks.add(std::move(complement));
  w.checks.add({"clopen_designation", Verdict::pass,
                "opens are clopen by designation, so their preimages are too", {}});
  return w;
}

}  // namespace ccspace
