#pragma once

// Extended Büchi automata: nondeterministic automata with one set of final
// states for finite words and a Büchi set for infinite words.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ddo/words.hpp"

namespace ddo {

/// Which part of Γ^∞ the automaton describes.
enum class Mode { star, omega, infty };

std::string_view to_string(Mode m);
Mode parse_mode(std::string_view s);

/// Finite or infinite part of a language.
enum class Part { finite, infinite };

struct Transition {
  std::size_t src;
  char letter;
  std::size_t dst;
  auto operator<=>(Transition const&) const = default;
};

/// Error raised while reading an automaton or homomorphism document.
/// `where()` is a JSON pointer to the offending value.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, std::string const& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what),
        where_(std::move(where)),
        message_(what) {}
  std::string const& where() const noexcept { return where_; }
  std::string const& message() const noexcept { return message_; }

 private:
  std::string where_;
  std::string message_;
};

class ExtendedBuchiAutomaton {
 public:
  /// State sets are sorted and deduplicated. Throws std::invalid_argument
  /// on dangling states or letters and on an empty initial set.
  ExtendedBuchiAutomaton(Alphabet alphabet, std::size_t states,
                         std::vector<std::size_t> initial,
                         std::vector<Transition> transitions,
                         std::vector<std::size_t> finite_final,
                         std::vector<std::size_t> buechi_final, Mode mode);

  Alphabet const& alphabet() const noexcept { return alphabet_; }
  std::size_t states() const noexcept { return states_; }
  std::vector<std::size_t> const& initial() const noexcept { return initial_; }
  std::vector<Transition> const& transitions() const noexcept {
    return transitions_;
  }
  /// As declared in the document; see is_finite_final for the effective set.
  std::vector<std::size_t> const& finite_final() const noexcept {
    return finite_final_;
  }
  std::vector<std::size_t> const& buechi_final() const noexcept {
    return buechi_final_;
  }
  Mode mode() const noexcept { return mode_; }

  /// Effective final-state tests: mode star ignores the Büchi set and mode
  /// omega ignores the finite set.
  bool is_finite_final(std::size_t q) const noexcept {
    return mode_ != Mode::omega && is_ff_[q];
  }
  bool is_buechi_final(std::size_t q) const noexcept {
    return mode_ != Mode::star && is_bf_[q];
  }

  /// Successors of q under the letter with alphabet index `a`.
  std::vector<std::size_t> const& successors(std::size_t q,
                                             std::size_t a) const noexcept {
    return succ_[q * alphabet_.size() + a];
  }

  /// The same automaton accepting only L ∩ Γ* (mode star) or L ∩ Γ^ω
  /// (mode omega).
  ExtendedBuchiAutomaton restricted(Part part) const;

  bool operator==(ExtendedBuchiAutomaton const& o) const {
    return alphabet_ == o.alphabet_ && states_ == o.states_
           && initial_ == o.initial_ && transitions_ == o.transitions_
           && finite_final_ == o.finite_final_
           && buechi_final_ == o.buechi_final_ && mode_ == o.mode_;
  }

 private:
  Alphabet alphabet_;
  std::size_t states_;
  std::vector<std::size_t> initial_;
  std::vector<Transition> transitions_;
  std::vector<std::size_t> finite_final_;
  std::vector<std::size_t> buechi_final_;
  Mode mode_;
  std::vector<char> is_ff_;
  std::vector<char> is_bf_;
  std::vector<std::vector<std::size_t>> succ_;
};

/// Membership of a finite word. Throws std::logic_error in mode omega.
bool accepts_finite(ExtendedBuchiAutomaton const& a, Word const& w);
/// Membership of stem·loop^ω. Throws std::logic_error in mode star.
bool accepts_up(ExtendedBuchiAutomaton const& a, UPWord const& w);

/// Mode-aware membership over Γ^∞: finite words are rejected in mode omega
/// and infinite words in mode star.
bool member(ExtendedBuchiAutomaton const& a, Word const& w);
bool member(ExtendedBuchiAutomaton const& a, UPWord const& w);

/// Parses the JSON automaton format; throws ParseError.
ExtendedBuchiAutomaton parse_automaton(std::string_view text);
/// Canonical JSON form: fixed field order, sorted sets, one line per field.
std::string serialize(ExtendedBuchiAutomaton const& a);

ExtendedBuchiAutomaton load_automaton(std::string const& path);

}  // namespace ddo
