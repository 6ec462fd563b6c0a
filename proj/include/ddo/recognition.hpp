#pragma once

// Recognizing homomorphisms h : Γ* → M together with the Accept table over
// linked pairs, the profile construction from an automaton, and the pure
// syntactic quotient.
//
// Accept(s, e) records whether the block [s][e]^ω lies in L. With e = 1 the
// block is the set of finite words [s]. Under strong recognition membership
// of u·v^ω depends only on (h(u)·e, e) where e is the idempotent power of
// h(v), so the syntactic congruence can quantify contexts over monoid
// elements instead of words:
//
//   p ≡ q  iff  Accept(u p v e, e) = Accept(u q v e, e)   for all u, v, w ∈ M,
//                                                         e = idem(w)
//          and  Accept(u f, f) = Accept(u f', f')        for all u, v ∈ M,
//                                  f = idem(p v), f' = idem(q v).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ddo/algebra.hpp"
#include "ddo/automata.hpp"
#include "ddo/kernels.hpp"
#include "ddo/words.hpp"

namespace ddo {

struct RecognizingHom {
  FiniteMonoid monoid;
  Alphabet alphabet;
  /// Image of each letter, indexed by alphabet position.
  std::vector<Element> generators;
  /// Only the empty word maps to the identity.
  bool epsilon_strict = true;
  /// Shortlex-least word mapping to each element.
  std::vector<Word> preimage;
  /// accept[s * size + e]; only entries at linked pairs are meaningful.
  kernels::AcceptBits accept;

  Element image(std::string_view w) const;
  bool accepts(Element s, Element e) const {
    return accept[static_cast<std::size_t>(s) * monoid.size() + e] != 0;
  }
};

/// Profile monoid of the automaton with a fresh identity. Elements are
/// numbered in shortlex order of their shortest preimages, identity first.
/// Supports automata with at most 64 states.
RecognizingHom build_pure_profile_hom(ExtendedBuchiAutomaton const& a);

/// Membership through the Accept table.
bool up_member(RecognizingHom const& h, Word const& w);
bool up_member(RecognizingHom const& h, UPWord const& w);

/// The pure syntactic homomorphism h₊ : Γ* → Synt₊(L). Class ids follow the
/// shortlex order of their shortest preimages. Throws std::invalid_argument
/// unless h is epsilon-strict.
RecognizingHom syntactic_quotient(RecognizingHom const& h);

/// Recognizes L ∩ Γ* (finite) or L ∩ Γ^ω (infinite) with the same monoid.
RecognizingHom restrict(RecognizingHom const& h, Part part);

/// JSON export. `mode` is recorded when known so that a decision run on the
/// document can select the applicable theorems.
std::string serialize(RecognizingHom const& h, std::optional<Mode> mode = {});

struct HomDocument {
  RecognizingHom hom;
  std::optional<Mode> mode;
};
/// Reads the export format; checks that generators, preimages and the
/// Accept list are consistent with the table. Throws ParseError.
HomDocument parse_hom(std::string_view text);
HomDocument load_hom(std::string const& path);

}  // namespace ddo
