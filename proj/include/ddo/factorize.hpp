#pragma once

// Positioned factorizations of finite and ultimately periodic words, their
// join, and the factorizations induced by Green's R and L relations along a
// homomorphism. Positions are 1-based.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ddo/langexpr.hpp"
#include "ddo/recognition.hpp"
#include "ddo/words.hpp"

namespace ddo {

struct FactorEntry {
  std::size_t pos;
  Word factor;
  auto operator<=>(FactorEntry const&) const = default;
};

/// Nonempty factors at increasing, nonoverlapping positions.
class Factorization {
 public:
  Factorization() = default;
  /// Throws std::invalid_argument if a factor is empty, a position is 0,
  /// or two factors overlap or are out of order.
  explicit Factorization(std::vector<FactorEntry> entries);

  std::vector<FactorEntry> const& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  /// The sequence of factors.
  std::vector<Word> type() const;
  /// Number of covered positions.
  std::size_t positions() const;

  auto operator<=>(Factorization const&) const = default;

 private:
  std::vector<FactorEntry> entries_;
};

/// "(pos:factor pos:factor ...)".
std::string to_string(Factorization const& f);

using AnyWord = std::variant<Word, UPWord>;

bool is_factorization_of(Factorization const& f, AnyWord const& w);

/// Merges overlapping factors of f and g. Adjacent factors stay apart.
/// Throws std::invalid_argument unless both are factorizations of w.
Factorization join(Factorization const& f, Factorization const& g,
                   AnyWord const& w);

/// Every factor of f lies, with matching content, inside a factor of g.
bool is_subfactorization(Factorization const& f, Factorization const& g);

/// Letters at which the R-class of h(prefix) drops; position 1 is always
/// included for nonempty words.
Factorization r_factorization(RecognizingHom const& h, AnyWord const& w);
/// Dual, reading right to left; the last position is always included.
/// Throws std::invalid_argument for infinite words.
Factorization l_factorization(RecognizingHom const& h, AnyWord const& w);

/// Radius-k neighbourhoods of the R- (resp. L-) factorization markers,
/// clipped to the word and joined. Throws std::invalid_argument for k = 0
/// and, in the L case, for infinite words.
Factorization rk_factorization(RecognizingHom const& h, AnyWord const& w,
                               std::size_t k);
Factorization lk_factorization(RecognizingHom const& h, AnyWord const& w,
                               std::size_t k);

/// Leftmost placement of the blocks of m in w (lexicographically minimal
/// gaps); nullopt if w is not in m. Empty blocks contribute no factor.
std::optional<Factorization> greedy_factorization(Monomial const& m,
                                                  AnyWord const& w);

/// u₁Γ*u₂ ⋯ Γ*u_ℓ followed by `tail`. Throws std::invalid_argument unless
/// f is empty or starts at position 1.
Monomial monomial_of(Factorization const& f, Tail tail);

}  // namespace ddo
