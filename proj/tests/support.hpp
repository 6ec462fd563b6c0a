#pragma once

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "ddo/automata.hpp"
#include "ddo/oracles.hpp"
#include "ddo/words.hpp"

namespace ddo::test {

inline std::string fixture(std::string const& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

inline ExtendedBuchiAutomaton load(std::string const& name) {
  return load_automaton(fixture(name + ".json"));
}

/// The default grid over the automaton's alphabet.
inline Grid grid_for(ExtendedBuchiAutomaton const& a) {
  Grid g;
  g.alphabet = a.alphabet();
  return g;
}

struct CorpusEntry {
  std::string name;     // fixture stem; "<name>_alt" is a second automaton
  std::string display;  // human-readable language
};

inline std::vector<CorpusEntry> const& corpus() {
  static std::vector<CorpusEntry> const entries{
      {"a_gamma_inf", "aΓ^∞"},
      {"gamma_star_a", "Γ*a"},
      {"gamma_omega", "Γ^ω"},
      {"gamma_inf", "Γ^∞"},
      {"empty", "∅"},
      {"aa_star", "(aa)*"},
      {"ab_star", "(ab)*"},
      {"gamma_star_a_gamma_inf", "Γ*aΓ^∞"},
      {"inf_many_a", "(b*a)^ω"},
      {"gamma_star_b_omega", "Γ*b^ω"},
      {"ab_omega", "(ab)^ω"},
      {"a_gamma_star_or_b_gamma_omega", "aΓ* ∪ bΓ^ω"},
      {"even_b", "even number of b"},
  };
  return entries;
}

}  // namespace ddo::test

template <>
struct Catch::StringMaker<ddo::UPWord> {
  static std::string convert(ddo::UPWord const& w) { return ddo::to_string(w); }
};
