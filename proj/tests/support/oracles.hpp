#pragma once

// Brute-force reference implementations over 64-bit masks. Nothing here
// uses the library's set type or closure engine.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;

struct HornRule {
  Mask premises = 0;
  std::size_t conclusion = 0;
};

struct System {
  std::size_t n = 0;
  Mask logic = 0;
  Mask cognitive = 0;
  std::vector<HornRule> rules;
};

inline Mask full(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Re-scan every rule until nothing changes.
inline Mask close(const System& s, Mask a) {
  Mask x = a | s.logic;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : s.rules) {
      const Mask bit = Mask{1} << r.conclusion;
      if ((r.premises & ~x) == 0 && !(x & bit)) {
        x |= bit;
        changed = true;
      }
    }
  }
  return x;
}

inline bool closed(const System& s, Mask a) { return close(s, a) == a; }

// Every closed subset of `within`, in increasing integer order.
inline std::vector<Mask> closed_subsets(const System& s, Mask within) {
  std::vector<Mask> out;
  for (Mask sub = 0;; sub = (sub - within) & within) {
    if (closed(s, sub)) out.push_back(sub);
    if (sub == within) break;
  }
  std::vector<Mask> sorted(out);
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

// Intersection of all closed supersets of a.
inline Mask cognitive_closure(const System& s, Mask a) {
  const Mask all = full(s.n);
  Mask result = all;
  const Mask freeb = all & ~a;
  for (Mask extra = 0;; extra = (extra - freeb) & freeb) {
    if (closed(s, a | extra)) result &= a | extra;
    if (extra == freeb) break;
  }
  return result;
}

// CWO family: A ⊆ C with C \ A closed.
inline std::vector<Mask> cwo(const System& s) {
  std::vector<Mask> out;
  for (Mask d : closed_subsets(s, s.cognitive)) out.push_back(s.cognitive & ~d);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::size_t> bits(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i)
    if ((m >> i) & 1U) out.push_back(i);
  return out;
}

struct GenOptions {
  std::size_t min_symbols = 1;
  std::size_t max_symbols = 12;
  std::size_t max_rules = 30;
  std::size_t max_premises = 3;
  double logic_density = 0.15;
  double cognitive_density = 0.7;
};

inline System random_system(std::mt19937_64& rng, const GenOptions& o = {}) {
  System s;
  s.n = std::uniform_int_distribution<std::size_t>(o.min_symbols, o.max_symbols)(rng);
  std::bernoulli_distribution in_logic(o.logic_density), in_cog(o.cognitive_density);
  std::uniform_int_distribution<std::size_t> pos(0, s.n - 1);
  for (std::size_t i = 0; i < s.n; ++i) {
    if (in_logic(rng)) s.logic |= Mask{1} << i;
    if (in_cog(rng)) s.cognitive |= Mask{1} << i;
  }
  const std::size_t rules = std::uniform_int_distribution<std::size_t>(0, o.max_rules)(rng);
  std::uniform_int_distribution<std::size_t> premises(0, o.max_premises);
  for (std::size_t r = 0; r < rules; ++r) {
    HornRule rule;
    const std::size_t k = premises(rng);
    for (std::size_t j = 0; j < k; ++j) rule.premises |= Mask{1} << pos(rng);
    rule.conclusion = pos(rng);
    s.rules.push_back(rule);
  }
  return s;
}

inline std::string label(std::size_t i) { return "s" + std::to_string(i); }

}  // namespace oracle
