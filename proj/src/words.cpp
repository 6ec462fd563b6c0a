#include "ddo/words.hpp"

#include <cctype>
#include <stdexcept>

namespace ddo {

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
  index_.fill(-1);
  if (letters_.empty()) {
    throw std::invalid_argument("alphabet must be nonempty");
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    auto c = static_cast<unsigned char>(letters_[i]);
    if (!std::isgraph(c) || std::string_view(":*()$^.\"").find(letters_[i])
                                != std::string_view::npos) {
      throw std::invalid_argument(std::string("invalid alphabet symbol '")
                                  + letters_[i] + "'");
    }
    if (index_[c] >= 0) {
      throw std::invalid_argument(std::string("duplicate alphabet symbol '")
                                  + letters_[i] + "'");
    }
    index_[c] = static_cast<std::int16_t>(i);
  }
}

std::size_t Alphabet::index(char c) const {
  auto i = index_[static_cast<unsigned char>(c)];
  if (i < 0) {
    throw std::out_of_range(std::string("letter '") + c
                            + "' is not in the alphabet");
  }
  return static_cast<std::size_t>(i);
}

void Alphabet::check_word(std::string_view w) const {
  for (char c : w) {
    if (!contains(c)) {
      throw std::invalid_argument(std::string("letter '") + c
                                  + "' is not in the alphabet \"" + letters_
                                  + "\"");
    }
  }
}

UPWord::UPWord(Word stem, Word loop)
    : stem_(std::move(stem)), loop_(std::move(loop)) {
  if (loop_.empty()) {
    throw std::invalid_argument("ultimately periodic word needs a nonempty loop");
  }
}

std::string to_string(UPWord const& w) {
  return w.stem() + ":" + w.loop();
}

UPWord parse_upword(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("expected \"stem:loop\", got \""
                                + std::string(text) + "\"");
  }
  if (text.find(':', colon + 1) != std::string_view::npos) {
    throw std::invalid_argument("more than one ':' in \"" + std::string(text)
                                + "\"");
  }
  return UPWord(Word(text.substr(0, colon)), Word(text.substr(colon + 1)));
}

namespace {

void collect_factors(std::string_view w, std::size_t k, std::set<Word>& out) {
  if (w.size() < k) {
    return;
  }
  for (std::size_t i = 0; i + k <= w.size(); ++i) {
    out.emplace(w.substr(i, k));
  }
}

}  // namespace

std::set<Word> alph_k(Word const& w, std::size_t k) {
  if (k == 0) {
    throw std::domain_error("alph_k requires k >= 1");
  }
  std::set<Word> out;
  collect_factors(w, k, out);
  return out;
}

std::set<Word> alph_k(UPWord const& w, std::size_t k) {
  if (k == 0) {
    throw std::domain_error("alph_k requires k >= 1");
  }
  // Every length-k window of stem·loop^ω lies inside stem·loop^(k+1).
  std::set<Word> out;
  collect_factors(up_prefix(w, w.stem().size() + (k + 1) * w.loop().size()),
                  k, out);
  return out;
}

std::size_t primitive_root_length(std::string_view w) {
  auto n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) {
      continue;
    }
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) {
      periodic = w[i] == w[i - p];
    }
    if (periodic) {
      return p;
    }
  }
  return n;
}

UPWord up_canonicalize(UPWord const& w) {
  Word loop = w.loop().substr(0, primitive_root_length(w.loop()));
  Word stem = w.stem();
  // stem·c · (x c)^ω = stem · (c x)^ω
  while (!stem.empty() && stem.back() == loop.back()) {
    stem.pop_back();
    loop.insert(loop.begin(), loop.back());
    loop.pop_back();
  }
  return UPWord(std::move(stem), std::move(loop));
}

Word up_prefix(UPWord const& w, std::size_t n) {
  Word out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(w.at(i));
  }
  return out;
}

}  // namespace ddo
