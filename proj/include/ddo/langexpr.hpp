#pragma once

// Monomials w₁Γ*w₂ ⋯ Γ*wₙ·T with tail T ∈ {1, Γ^∞, Γ^ω}, their Boolean
// combinations, degree-bounded fingerprints, and the translation of a
// monomial into an existential sentence.

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ddo/logic.hpp"
#include "ddo/words.hpp"

namespace ddo {

enum class Tail { finite, any_infty, omega_only };

/// Canonical monomial. Interior blocks are nonempty; with an infinite tail
/// a last block can only be empty when it is the only block, since
/// Γ*·Γ^∞ = Γ^∞ and Γ*·Γ^ω = Γ^ω.
class Monomial {
 public:
  /// Throws std::invalid_argument if the blocks are not canonical.
  Monomial(std::vector<Word> blocks, Tail tail);

  std::vector<Word> const& blocks() const noexcept { return blocks_; }
  Tail tail() const noexcept { return tail_; }

  auto operator<=>(Monomial const&) const = default;

 private:
  std::vector<Word> blocks_;
  Tail tail_;
};

/// Drops empty interior blocks and, for infinite tails, an empty last block.
Monomial canonicalize(std::vector<Word> blocks, Tail tail);

/// Total length of the blocks.
std::size_t degree(Monomial const& m);

/// Text form: blocks separated by " *", then "$" (finite), "..." (Γ^∞) or
/// "^w" (Γ^ω); e.g. "ab *a $". Parsing canonicalizes.
std::string to_string(Monomial const& m);
Monomial parse_monomial(std::string_view text);

bool member(Monomial const& m, Word const& w);
bool member(Monomial const& m, UPWord const& w);

/// Boolean combinations of monomials.
struct BoolComb {
  enum class Kind { top, mono, conj, disj, neg };
  Kind kind = Kind::top;
  std::shared_ptr<Monomial const> mono;
  std::vector<BoolComb> kids;

  static BoolComb top() { return {}; }
  static BoolComb leaf(Monomial m);
  static BoolComb conj(std::vector<BoolComb> kids);
  static BoolComb disj(std::vector<BoolComb> kids);
  static BoolComb neg(BoolComb c);
};

/// S-expressions: (and ...), (or ...), (not C), (true), (mono "ab *a $").
std::string to_string(BoolComb const& c);
BoolComb parse_boolcomb(std::string_view text);

bool boolcomb_member(BoolComb const& c, Word const& w);
bool boolcomb_member(BoolComb const& c, UPWord const& w);

/// Raised when an enumeration exceeds its configured size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default cap on the number of monomials a fingerprint may enumerate;
/// overridden by the DDO_MAX_UNIVERSE environment variable.
inline constexpr std::size_t default_max_universe = 1'000'000;
std::size_t max_universe();

/// Number of canonical monomials over `sigma` of degree at most d with one
/// of the given tails.
std::size_t universe_size(Alphabet const& sigma, std::size_t d,
                          std::set<Tail> const& tails);
/// All such monomials in a fixed order. Throws ResourceError above the cap.
std::vector<Monomial> enumerate_monomials(Alphabet const& sigma, std::size_t d,
                                          std::set<Tail> const& tails);

/// The monomials of degree at most d with the given tails that contain w.
std::set<Monomial> fingerprint(Alphabet const& sigma,
                               std::variant<Word, UPWord> const& w,
                               std::size_t d, std::set<Tail> const& tails);
/// Same, over an already enumerated universe.
std::set<Monomial> fingerprint(std::vector<Monomial> const& universe,
                               std::variant<Word, UPWord> const& w);

/// Existential sentence with quantifier depth degree(m) defining m (over
/// finite words for a finite tail, over Γ^∞ resp. Γ^ω otherwise). Throws
/// std::domain_error for {1} = (ε) with a finite tail, which is not
/// existentially definable.
Sentence compile_to_sigma1(Monomial const& m);

}  // namespace ddo
