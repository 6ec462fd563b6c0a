#pragma once

// Deliberately naive reference implementations and enumerators. They share
// no code paths with the main algorithms beyond the data types, and exist to
// cross-check them.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ddo/automata.hpp"
#include "ddo/decide.hpp"
#include "ddo/langexpr.hpp"
#include "ddo/logic.hpp"
#include "ddo/words.hpp"

namespace ddo {

struct Grid {
  Alphabet alphabet{"ab"};
  std::size_t max_word_len = 6;
  std::size_t max_stem = 3;
  std::size_t max_loop = 3;
  std::size_t max_formula_depth = 3;
  std::size_t max_monomial_degree = 4;
};

/// All words of length at most max_word_len in shortlex order.
std::vector<Word> enumerate_words(Grid const& g);
/// Canonical UPWords with stem and loop within the bounds, deduplicated,
/// in order of their canonical representation.
std::vector<UPWord> enumerate_up(Grid const& g);

/// Exhaustive search over all block placements; for infinite words over
/// growing explicit prefixes until two consecutive answers agree.
bool brute_member_monomial(Monomial const& m, Word const& w);
bool brute_member_monomial(Monomial const& m, UPWord const& w);
/// The same search on raw blocks, which need not be canonical.
bool brute_member_blocks(std::vector<Word> const& blocks, Tail tail, Word const& w);
bool brute_member_blocks(std::vector<Word> const& blocks, Tail tail, UPWord const& w);

/// Full first-order semantics over the prefix window of |u| + m|v|
/// positions with max false, doubling m from 2·depth + 2 until two
/// consecutive answers agree.
bool brute_eval_up(Sentence const& s, UPWord const& w);

/// Runs on the lasso graph of (state, position in stem·loop) pairs.
bool brute_accepts_finite(ExtendedBuchiAutomaton const& a, Word const& w);
bool brute_accepts_up(ExtendedBuchiAutomaton const& a, UPWord const& w);
/// Language of the automaton through the brute-force runs.
Language brute_language(ExtendedBuchiAutomaton a);

/// First word context, by total length and linear before cyclic, that
/// separates p from q in `lang`: u and v range over words of length at most
/// max_stem, w over words of length at most max_loop (w empty gives the
/// finite context u·p·v).
std::optional<Context> brute_syntactic_separate(Language const& lang,
                                                Word const& p, Word const& q,
                                                Grid const& g);

struct AutomatonGrid {
  Alphabet alphabet{"ab"};
  std::size_t max_states = 2;
  std::vector<Mode> modes{Mode::infty};
  /// 0 enumerates everything; otherwise draws this many distinct automata.
  std::size_t sample = 0;
  std::uint64_t seed = 1;
};

/// Number of automata the grid describes (saturating).
std::size_t automaton_count(AutomatonGrid const& g);
/// Automata with 1..max_states states, a nonempty initial set and every
/// choice of transitions and final sets allowed by the mode (Büchi states
/// only outside mode star, finite final states only outside mode omega).
std::vector<ExtendedBuchiAutomaton> enumerate_automata(AutomatonGrid const& g);

/// A different automaton for the same language: every state gets a twin
/// with the same outgoing behaviour.
ExtendedBuchiAutomaton duplicate_states(ExtendedBuchiAutomaton const& a);

/// Checks on decide_all(a) that must hold for every automaton: certificates
/// re-verify against both the automaton and its brute-force language,
/// R-closed implies R⁺-closed, thm5 yes implies thm15 yes and tail
/// independence, and the verdicts survive duplicate_states. Returns one
/// message per failed check.
std::vector<std::string> pipeline_invariant_violations(ExtendedBuchiAutomaton const& a);

/// Random BΣ₁ sentences: Boolean combinations of existential and universal
/// blocks with at most max_depth variables over random atoms.
std::vector<Sentence> sample_sentences(Alphabet const& sigma,
                                       std::size_t max_depth,
                                       std::size_t count, std::uint64_t seed);

}  // namespace ddo
