#pragma once

// Alphabets, finite words and ultimately periodic infinite words.

#include <array>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ddo {

/// A finite word. Letters are single visible characters of some Alphabet.
using Word = std::string;

/// A finite nonempty ordered alphabet of single-character symbols.
class Alphabet {
 public:
  explicit Alphabet(std::string_view letters);

  std::size_t size() const noexcept { return letters_.size(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  std::string const& letters() const noexcept { return letters_; }

  bool contains(char c) const noexcept {
    return index_[static_cast<unsigned char>(c)] >= 0;
  }
  /// Position of `c` in the alphabet order; throws std::out_of_range.
  std::size_t index(char c) const;

  /// Throws std::invalid_argument naming the first foreign letter.
  void check_word(std::string_view w) const;

  bool operator==(Alphabet const& other) const noexcept {
    return letters_ == other.letters_;
  }

 private:
  std::string letters_;
  std::array<std::int16_t, 256> index_{};
};

/// The infinite word stem·loop^ω. The loop is never empty; the empty word
/// 1 = 1^ω is a plain Word.
class UPWord {
 public:
  UPWord(Word stem, Word loop);

  Word const& stem() const noexcept { return stem_; }
  Word const& loop() const noexcept { return loop_; }

  /// Letter at 0-based position i of stem·loop^ω.
  char at(std::size_t i) const noexcept {
    return i < stem_.size() ? stem_[i]
                            : loop_[(i - stem_.size()) % loop_.size()];
  }

  /// Same representation (not same denoted word; see up_canonicalize).
  bool operator==(UPWord const&) const = default;
  auto operator<=>(UPWord const&) const = default;

 private:
  Word stem_;
  Word loop_;
};

/// "stem:loop" serialization.
std::string to_string(UPWord const& w);
/// Parses "stem:loop"; throws std::invalid_argument.
UPWord parse_upword(std::string_view text);

/// The length-k factors of w. Throws std::domain_error for k = 0.
std::set<Word> alph_k(Word const& w, std::size_t k);
std::set<Word> alph_k(UPWord const& w, std::size_t k);

/// Primitive loop, shortest stem. Two UPWords denote the same infinite
/// word iff their canonical forms are equal.
UPWord up_canonicalize(UPWord const& w);

/// Length-n prefix of stem·loop^ω.
Word up_prefix(UPWord const& w, std::size_t n);

/// Smallest p dividing |w| with w = x^(|w|/p) for |x| = p.
std::size_t primitive_root_length(std::string_view w);

}  // namespace ddo
