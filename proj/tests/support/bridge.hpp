#pragma once

// Builds library objects from oracle systems.

#include <algorithm>
#include <string>
#include <vector>

#include "ccspace/consequence.hpp"
#include "ccspace/universe.hpp"
#include "oracles.hpp"

namespace bridge {

inline ccspace::Universe universe_of(const oracle::System& s) {
  std::vector<std::string> symbols, cognitive, logic;
  for (std::size_t i = 0; i < s.n; ++i) {
    symbols.push_back(oracle::label(i));
    if ((s.cognitive >> i) & 1U) cognitive.push_back(oracle::label(i));
    if ((s.logic >> i) & 1U) logic.push_back(oracle::label(i));
  }
  return ccspace::make_universe(symbols, cognitive, logic);
}

inline ccspace::RuleSystem rule_system(const oracle::System& s) {
  std::vector<ccspace::Rule> rules;
  for (const auto& r : s.rules) rules.push_back({oracle::bits(r.premises), r.conclusion});
  return ccspace::RuleSystem(universe_of(s), std::move(rules));
}

inline ccspace::SentenceSet set(const oracle::System& s, oracle::Mask m) {
  return ccspace::SentenceSet::from_mask(s.n, m);
}

}  // namespace bridge
