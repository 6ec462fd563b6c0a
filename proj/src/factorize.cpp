#include "ddo/factorize.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ddo {

Factorization::Factorization(std::vector<FactorEntry> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].pos == 0) {
      throw std::invalid_argument("factor positions start at 1");
    }
    if (entries_[i].factor.empty()) {
      throw std::invalid_argument("factors must be nonempty");
    }
    if (i > 0 && entries_[i].pos < entries_[i - 1].pos + entries_[i - 1].factor.size()) {
      throw std::invalid_argument("factors overlap or are out of order at position "
                                  + std::to_string(entries_[i].pos));
    }
  }
}

std::vector<Word> Factorization::type() const {
  std::vector<Word> out;
  for (auto const& e : entries_) out.push_back(e.factor);
  return out;
}

std::size_t Factorization::positions() const {
  std::size_t n = 0;
  for (auto const& e : entries_) n += e.factor.size();
  return n;
}

std::string to_string(Factorization const& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(f.entries()[i].pos) + ":" + f.entries()[i].factor;
  }
  return out + ")";
}

namespace {

bool is_finite(AnyWord const& w) { return std::holds_alternative<Word>(w); }

std::size_t finite_length(AnyWord const& w) { return std::get<Word>(w).size(); }

// Letter at 1-based position p; '\0' past the end of a finite word.
char letter_at(AnyWord const& w, std::size_t p) {
  if (auto const* fw = std::get_if<Word>(&w)) {
    return p >= 1 && p <= fw->size() ? (*fw)[p - 1] : '\0';
  }
  return std::get<UPWord>(w).at(p - 1);
}

Word slice(AnyWord const& w, std::size_t from, std::size_t to) {
  Word out;
  for (std::size_t p = from; p <= to; ++p) out += letter_at(w, p);
  return out;
}

// Sorts closed intervals and merges those sharing a position.
Factorization merge_intervals(std::vector<std::pair<std::size_t, std::size_t>> iv,
                              AnyWord const& w) {
  std::sort(iv.begin(), iv.end());
  std::vector<FactorEntry> out;
  std::size_t lo = 0, hi = 0;
  bool open = false;
  for (auto [a, b] : iv) {
    if (open && a <= hi) {
      hi = std::max(hi, b);
      continue;
    }
    if (open) out.push_back({lo, slice(w, lo, hi)});
    lo = a;
    hi = b;
    open = true;
  }
  if (open) out.push_back({lo, slice(w, lo, hi)});
  return Factorization(std::move(out));
}

std::vector<std::pair<std::size_t, std::size_t>> intervals(Factorization const& f) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto const& e : f.entries()) {
    out.emplace_back(e.pos, e.pos + e.factor.size() - 1);
  }
  return out;
}

}  // namespace

bool is_factorization_of(Factorization const& f, AnyWord const& w) {
  for (auto const& e : f.entries()) {
    if (is_finite(w) && e.pos + e.factor.size() - 1 > finite_length(w)) {
      return false;
    }
    for (std::size_t i = 0; i < e.factor.size(); ++i) {
      if (letter_at(w, e.pos + i) != e.factor[i]) return false;
    }
  }
  return true;
}

Factorization join(Factorization const& f, Factorization const& g,
                   AnyWord const& w) {
  if (!is_factorization_of(f, w) || !is_factorization_of(g, w)) {
    throw std::invalid_argument("join needs two factorizations of the same word");
  }
  auto iv = intervals(f);
  auto ig = intervals(g);
  iv.insert(iv.end(), ig.begin(), ig.end());
  return merge_intervals(std::move(iv), w);
}

bool is_subfactorization(Factorization const& f, Factorization const& g) {
  for (auto const& e : f.entries()) {
    bool covered = std::any_of(g.entries().begin(), g.entries().end(), [&](auto const& c) {
      return c.pos <= e.pos && e.pos + e.factor.size() <= c.pos + c.factor.size()
             && c.factor.compare(e.pos - c.pos, e.factor.size(), e.factor) == 0;
    });
    if (!covered) return false;
  }
  return true;
}

namespace {

// 1-based positions where the R-class of the prefix value drops.
std::vector<std::size_t> r_markers(RecognizingHom const& h, AnyWord const& w) {
  auto const& m = h.monoid;
  auto g = green(m);
  std::vector<std::size_t> out;
  Element cur = m.identity();
  auto step = [&](std::size_t p) {
    Element next = m.mul(cur, h.generators[h.alphabet.index(letter_at(w, p))]);
    if (p == 1 || g.lt_r(next, cur)) out.push_back(p);
    cur = next;
  };
  if (auto const* fw = std::get_if<Word>(&w)) {
    h.alphabet.check_word(*fw);
    for (std::size_t p = 1; p <= fw->size(); ++p) step(p);
    return out;
  }
  auto const& uw = std::get<UPWord>(w);
  h.alphabet.check_word(uw.stem());
  h.alphabet.check_word(uw.loop());
  std::size_t p = 1;
  for (; p <= uw.stem().size(); ++p) step(p);
  // Once h(u v^i) repeats, every value in between is R-equivalent to it,
  // so no later drops occur.
  std::map<Element, std::size_t> seen;
  while (seen.emplace(cur, p).second) {
    for (std::size_t i = 0; i < uw.loop().size(); ++i, ++p) step(p);
  }
  return out;
}

std::vector<std::size_t> l_markers(RecognizingHom const& h, Word const& w) {
  h.alphabet.check_word(w);
  auto const& m = h.monoid;
  auto g = green(m);
  std::vector<std::size_t> out;
  Element cur = m.identity();
  for (std::size_t p = w.size(); p >= 1; --p) {
    Element next = m.mul(h.generators[h.alphabet.index(w[p - 1])], cur);
    if (p == w.size() || g.lt_l(next, cur)) out.push_back(p);
    cur = next;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Factorization single_letters(std::vector<std::size_t> const& ps, AnyWord const& w) {
  std::vector<FactorEntry> out;
  for (auto p : ps) out.push_back({p, Word(1, letter_at(w, p))});
  return Factorization(std::move(out));
}

Factorization neighbourhoods(std::vector<std::size_t> const& ps, AnyWord const& w,
                             std::size_t k) {
  if (k == 0) throw std::invalid_argument("context radius k must be positive");
  std::vector<std::pair<std::size_t, std::size_t>> iv;
  for (auto z : ps) {
    std::size_t lo = z > k ? z - k : 1;
    std::size_t hi = z + k;
    if (is_finite(w)) hi = std::min(hi, finite_length(w));
    iv.emplace_back(lo, hi);
  }
  return merge_intervals(std::move(iv), w);
}

Word const& require_finite(AnyWord const& w) {
  if (!is_finite(w)) {
    throw std::invalid_argument("L-factorizations are defined for finite words only");
  }
  return std::get<Word>(w);
}

}  // namespace

Factorization r_factorization(RecognizingHom const& h, AnyWord const& w) {
  return single_letters(r_markers(h, w), w);
}

Factorization l_factorization(RecognizingHom const& h, AnyWord const& w) {
  return single_letters(l_markers(h, require_finite(w)), w);
}

Factorization rk_factorization(RecognizingHom const& h, AnyWord const& w,
                               std::size_t k) {
  return neighbourhoods(r_markers(h, w), w, k);
}

Factorization lk_factorization(RecognizingHom const& h, AnyWord const& w,
                               std::size_t k) {
  return neighbourhoods(l_markers(h, require_finite(w)), w, k);
}

std::optional<Factorization> greedy_factorization(Monomial const& m,
                                                  AnyWord const& w) {
  bool in = std::visit([&](auto const& x) { return member(m, x); }, w);
  if (!in) return std::nullopt;
  auto const& b = m.blocks();
  Word text;
  std::size_t end;
  if (auto const* fw = std::get_if<Word>(&w)) {
    text = *fw;
    end = text.size();
  } else {
    auto const& uw = std::get<UPWord>(w);
    text = up_prefix(uw, uw.stem().size()
                             + (degree(m) + b.size() + 1) * uw.loop().size()
                             + degree(m));
    end = text.size();
  }
  bool fixed_last = m.tail() == Tail::finite && b.size() >= 2;
  if (fixed_last) end -= b.back().size();

  std::vector<FactorEntry> out;
  if (!b.front().empty()) out.push_back({1, b.front()});
  std::size_t pos = b.front().size();
  std::size_t stop = fixed_last ? b.size() - 1 : b.size();
  for (std::size_t i = 1; i < stop; ++i) {
    auto at = std::string_view(text).substr(0, end).find(b[i], pos);
    out.push_back({at + 1, b[i]});
    pos = at + b[i].size();
  }
  if (fixed_last && !b.back().empty()) out.push_back({end + 1, b.back()});
  return Factorization(std::move(out));
}

Monomial monomial_of(Factorization const& f, Tail tail) {
  if (f.empty()) return Monomial({""}, tail);
  if (f.entries().front().pos != 1) {
    throw std::invalid_argument("the first factor must start at position 1");
  }
  return Monomial(f.type(), tail);
}

}  // namespace ddo
