#pragma once

// Decision procedures for the alternation-free fragments and dot-depth one,
// evaluated on the pure syntactic monoid Synt₊(L), with certificates for
// negative answers.
//
// Verdict keys:
//   thm5   BΣ₁[<,+1,min] over Γ^∞        B1 and R-closed
//   thm14  dot-depth one over Γ*          B1
//   thm15  BΣ₁[<,+1,min,max] over Γ^∞    B1 and R⁺-closed
//   thm17  dot-depth one over Γ^ω         B1 and R⁺-closed
//
// Conditions stated for Synt¹(L) transfer to Synt₊(L): the canonical
// surjection Synt₊(L) → Synt¹(L) maps linked pairs onto linked pairs,
// preserves R (witnesses map along) and reflects it on Synt(L), and leaves
// the Accept value of each block unchanged.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "ddo/algebra.hpp"
#include "ddo/automata.hpp"
#include "ddo/recognition.hpp"
#include "ddo/words.hpp"

namespace ddo {

/// Membership test used to confirm certificates independently of the
/// Accept table.
struct Language {
  std::function<bool(Word const&)> finite;
  std::function<bool(UPWord const&)> infinite;

  static Language of(ExtendedBuchiAutomaton a);
  static Language of(RecognizingHom h);
  /// L ∩ Γ* or L ∩ Γ^ω.
  Language restricted(Part part) const;
};

enum class Tri { yes, no, not_applicable };
std::string_view to_string(Tri t);

enum class Condition { b1, r_closed, r_plus_closed };
std::string_view to_string(Condition c);

enum class ContextVariant { linear, cyclic };
std::string_view to_string(ContextVariant v);

/// linear: u·p·v·w^ω (a finite word when w is empty); cyclic: u·(p·v)^ω.
struct Context {
  Word u, v, w;
  ContextVariant variant = ContextVariant::linear;
  bool operator==(Context const&) const = default;
};

/// Instantiates the context around `mid`.
std::variant<Word, UPWord> plug(Context const& c, Word const& mid);

struct B1Violation {
  B1Witness elements;
  std::array<Word, 6> words;  // preimages of e, f, s, t, x, y
  unsigned n = 1;
  Word p, q;
  Context context;
};

struct LinkedPairViolation {
  LinkedPair first, second;
  bool first_accepted = false;
  bool second_accepted = false;
  /// A word of [s][e]^ω (finite when e = 1), likewise for the second pair.
  std::variant<Word, UPWord> first_word, second_word;
};

using Certificate = std::variant<B1Violation, LinkedPairViolation>;

struct LinkedPairCheck {
  bool holds = true;
  std::optional<std::pair<LinkedPair, LinkedPair>> violation;
};

/// B1 on Synt(L) = M ∖ {1}. Throws unless h is epsilon-strict.
B1Result check_b1_condition(RecognizingHom const& h);
/// Accept constant on R-related linked pairs. The violation is the first
/// pair of pairs in (s, e) order.
LinkedPairCheck check_r_closed(RecognizingHom const& h);
/// As check_r_closed, restricted to pairs whose idempotents are not 1.
LinkedPairCheck check_r_plus_closed(RecognizingHom const& h);
/// Accept(s, 1) = Accept(s, e) for every linked pair (s, e): membership
/// never depends on the tail after a prefix. Necessary for thm5.
bool tail_independent(RecognizingHom const& h);

/// p = (eⁿxfⁿy)ⁿ eⁿxfⁿ (teⁿsfⁿ)ⁿ and q with eⁿsfⁿ in the middle.
/// Throws std::invalid_argument on an empty word or n = 0.
std::pair<Word, Word> b1_witness_words(Word const& e, Word const& f,
                                       Word const& s, Word const& t,
                                       Word const& x, Word const& y,
                                       unsigned n);

/// First context, by total preimage length and linear before cyclic, in
/// which exactly one of p, q yields a word of L. Throws
/// std::invalid_argument if h(p) = h(q) or no context separates them, and
/// std::logic_error if `lang` disagrees with the Accept table.
Context distinguishing_context(RecognizingHom const& h, Language const& lang,
                               Word const& p, Word const& q);

struct TheoremVerdict {
  Tri result = Tri::not_applicable;
  std::optional<Condition> reason;
  std::optional<Certificate> certificate;
};

/// The syntactic homomorphism a theorem was evaluated on, with the part of
/// L it recognizes.
struct Analysis {
  RecognizingHom hom;
  std::optional<Part> part;
};

struct Verdict {
  Mode mode = Mode::infty;
  TheoremVerdict thm5, thm14, thm15, thm17;
  /// tail_independent on the unrestricted syntactic homomorphism.
  bool tail_independent = true;
  std::size_t synt_size = 0;
  /// Homomorphism each theorem ran on; key is "thm5" and so on.
  std::vector<std::pair<std::string, Analysis>> analyses;

  Analysis const* analysis(std::string_view key) const;
};

/// Builds, minimizes and decides. `lang` must describe the language of h.
Verdict decide(RecognizingHom const& h, Mode mode, Language const& lang);
Verdict decide_all(ExtendedBuchiAutomaton const& a);

struct CertificateCheck {
  bool ok = true;
  std::string failure;
};
/// Recomputes every claim of the certificate; `lang` describes the language
/// recognized by h.
CertificateCheck verify_certificate(Certificate const& c,
                                    RecognizingHom const& h,
                                    Language const& lang);
/// Verifies every certificate in the verdict against `lang` (restricted as
/// each theorem requires).
CertificateCheck verify_verdict(Verdict const& v, Language const& lang);

std::string report_text(Verdict const& v);
std::string report_json(Verdict const& v);

}  // namespace ddo
