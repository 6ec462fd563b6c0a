#include "ddo/langexpr.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <optional>
#include <limits>

namespace ddo {

namespace {

bool infinite_tail(Tail t) { return t != Tail::finite; }

}  // namespace

Monomial::Monomial(std::vector<Word> blocks, Tail tail)
    : blocks_(std::move(blocks)), tail_(tail) {
  if (blocks_.empty()) {
    throw std::invalid_argument("monomial needs at least one block");
  }
  for (std::size_t i = 1; i + 1 < blocks_.size(); ++i) {
    if (blocks_[i].empty()) {
      throw std::invalid_argument("monomial has an empty interior block");
    }
  }
  if (infinite_tail(tail_) && blocks_.size() >= 2 && blocks_.back().empty()) {
    throw std::invalid_argument(
        "monomial with an infinite tail has an empty last block");
  }
}

Monomial canonicalize(std::vector<Word> blocks, Tail tail) {
  if (blocks.empty()) {
    throw std::invalid_argument("monomial needs at least one block");
  }
  std::vector<Word> out{blocks.front()};
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    bool last = i + 1 == blocks.size();
    if (!blocks[i].empty() || (last && !infinite_tail(tail))) {
      out.push_back(blocks[i]);
    }
  }
  return Monomial(std::move(out), tail);
}

std::size_t degree(Monomial const& m) {
  std::size_t d = 0;
  for (auto const& b : m.blocks()) d += b.size();
  return d;
}

std::string to_string(Monomial const& m) {
  std::string out = m.blocks().front();
  for (std::size_t i = 1; i < m.blocks().size(); ++i) {
    out += " *" + m.blocks()[i];
  }
  switch (m.tail()) {
    case Tail::finite: out += " $"; break;
    case Tail::any_infty: out += " ..."; break;
    case Tail::omega_only: out += " ^w"; break;
  }
  if (out.front() == ' ') out.erase(0, 1);
  return out;
}

Monomial parse_monomial(std::string_view text) {
  std::string t(text);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) {
    t.pop_back();
  }
  Tail tail;
  auto ends_with = [&](std::string_view s) {
    return t.size() >= s.size() && t.compare(t.size() - s.size(), s.size(), s) == 0;
  };
  if (ends_with("$")) {
    tail = Tail::finite;
    t.resize(t.size() - 1);
  } else if (ends_with("...")) {
    tail = Tail::any_infty;
    t.resize(t.size() - 3);
  } else if (ends_with("^w")) {
    tail = Tail::omega_only;
    t.resize(t.size() - 2);
  } else {
    throw std::invalid_argument("monomial \"" + std::string(text)
                                + "\" must end in $, ... or ^w");
  }
  std::string compact;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(t[i]))) continue;
    if (t.compare(i, 2, "·") == 0) {  // U+00B7 is two bytes in UTF-8
      ++i;
      continue;
    }
    compact += t[i];
  }
  std::vector<Word> blocks{""};
  for (char c : compact) {
    if (c == '*') {
      blocks.emplace_back();
    } else if (std::isgraph(static_cast<unsigned char>(c))
               && std::string_view(":()$^.\"").find(c) == std::string_view::npos) {
      blocks.back() += c;
    } else {
      throw std::invalid_argument(std::string("invalid character '") + c
                                  + "' in monomial");
    }
  }
  return canonicalize(std::move(blocks), tail);
}

namespace {

// Greedy leftmost placement of blocks[from..] in s starting at pos, every
// block ending at or before `end`. Returns the end of the last block.
std::optional<std::size_t> place(std::vector<Word> const& blocks,
                                 std::size_t from, std::size_t to,
                                 std::string_view s, std::size_t pos,
                                 std::size_t end) {
  for (std::size_t i = from; i < to; ++i) {
    auto at = s.substr(0, end).find(blocks[i], pos);
    if (at == std::string_view::npos) return std::nullopt;
    pos = at + blocks[i].size();
  }
  return pos;
}

bool starts_with(std::string_view s, std::string_view p) {
  return s.substr(0, p.size()) == p;
}

}  // namespace

bool member(Monomial const& m, Word const& w) {
  auto const& b = m.blocks();
  if (m.tail() == Tail::omega_only) return false;
  if (!starts_with(w, b.front())) return false;
  if (b.size() == 1) {
    return m.tail() == Tail::any_infty || w.size() == b.front().size();
  }
  if (m.tail() == Tail::any_infty) {
    return place(b, 1, b.size(), w, b.front().size(), w.size()).has_value();
  }
  auto const& last = b.back();
  if (w.size() < b.front().size() + last.size()
      || w.compare(w.size() - last.size(), last.size(), last) != 0) {
    return false;
  }
  return place(b, 1, b.size() - 1, w, b.front().size(), w.size() - last.size())
      .has_value();
}

bool member(Monomial const& m, UPWord const& w) {
  if (m.tail() == Tail::finite) return false;
  auto const& b = m.blocks();
  std::size_t bound = w.stem().size()
                      + (degree(m) + b.size() + 1) * w.loop().size() + degree(m);
  auto prefix = up_prefix(w, bound);
  if (!starts_with(prefix, b.front())) return false;
  return place(b, 1, b.size(), prefix, b.front().size(), prefix.size())
      .has_value();
}

BoolComb BoolComb::leaf(Monomial m) {
  BoolComb c;
  c.kind = Kind::mono;
  c.mono = std::make_shared<Monomial const>(std::move(m));
  return c;
}

BoolComb BoolComb::conj(std::vector<BoolComb> kids) {
  BoolComb c;
  c.kind = Kind::conj;
  c.kids = std::move(kids);
  return c;
}

BoolComb BoolComb::disj(std::vector<BoolComb> kids) {
  BoolComb c;
  c.kind = Kind::disj;
  c.kids = std::move(kids);
  return c;
}

BoolComb BoolComb::neg(BoolComb inner) {
  BoolComb c;
  c.kind = Kind::neg;
  c.kids.push_back(std::move(inner));
  return c;
}

std::string to_string(BoolComb const& c) {
  switch (c.kind) {
    case BoolComb::Kind::top: return "(true)";
    case BoolComb::Kind::mono: return "(mono \"" + to_string(*c.mono) + "\")";
    case BoolComb::Kind::neg: return "(not " + to_string(c.kids[0]) + ")";
    default: {
      std::string out = c.kind == BoolComb::Kind::conj ? "(and" : "(or";
      for (auto const& k : c.kids) out += " " + to_string(k);
      return out + ")";
    }
  }
}

namespace {

class CombParser {
 public:
  explicit CombParser(std::string_view t) : t_(t) {}

  BoolComb comb() {
    expect('(');
    auto head = name();
    BoolComb out;
    if (head == "true") {
      out = BoolComb::top();
    } else if (head == "mono") {
      out = BoolComb::leaf(parse_monomial(quoted()));
    } else if (head == "not") {
      out = BoolComb::neg(comb());
    } else if (head == "and" || head == "or") {
      std::vector<BoolComb> kids;
      while (peek() == '(') kids.push_back(comb());
      out = head == "and" ? BoolComb::conj(std::move(kids))
                          : BoolComb::disj(std::move(kids));
    } else {
      fail("unknown operator \"" + head + "\"");
    }
    expect(')');
    return out;
  }

  void finish() {
    if (peek() != '\0') fail("trailing input");
  }

 private:
  [[noreturn]] void fail(std::string const& what) {
    throw std::invalid_argument("combination, offset " + std::to_string(pos_)
                                + ": " + what);
  }
  char peek() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) {
      ++pos_;
    }
    return pos_ < t_.size() ? t_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string name() {
    peek();
    auto start = pos_;
    while (pos_ < t_.size() && std::isalpha(static_cast<unsigned char>(t_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected an operator");
    return std::string(t_.substr(start, pos_ - start));
  }
  std::string quoted() {
    expect('"');
    auto end = t_.find('"', pos_);
    if (end == std::string_view::npos) fail("unterminated string");
    std::string out(t_.substr(pos_, end - pos_));
    pos_ = end + 1;
    return out;
  }

  std::string_view t_;
  std::size_t pos_ = 0;
};

template <typename W>
bool comb_member(BoolComb const& c, W const& w) {
  switch (c.kind) {
    case BoolComb::Kind::top: return true;
    case BoolComb::Kind::mono: return member(*c.mono, w);
    case BoolComb::Kind::neg: return !comb_member(c.kids[0], w);
    case BoolComb::Kind::conj:
      return std::all_of(c.kids.begin(), c.kids.end(),
                         [&](auto const& k) { return comb_member(k, w); });
    case BoolComb::Kind::disj:
      return std::any_of(c.kids.begin(), c.kids.end(),
                         [&](auto const& k) { return comb_member(k, w); });
  }
  return false;
}

}  // namespace

BoolComb parse_boolcomb(std::string_view text) {
  CombParser p(text);
  auto c = p.comb();
  p.finish();
  return c;
}

bool boolcomb_member(BoolComb const& c, Word const& w) { return comb_member(c, w); }
bool boolcomb_member(BoolComb const& c, UPWord const& w) { return comb_member(c, w); }

std::size_t max_universe() {
  char const* env = std::getenv("DDO_MAX_UNIVERSE");
  if (!env || !*env) return default_max_universe;
  try {
    std::size_t used = 0;
    auto v = std::stoull(env, &used);
    if (used != std::string_view(env).size()) throw std::invalid_argument(env);
    return static_cast<std::size_t>(v);
  } catch (std::exception const&) {
    throw std::invalid_argument(std::string("DDO_MAX_UNIVERSE is not a number: ")
                                + env);
  }
}

namespace {

constexpr std::size_t saturated = std::numeric_limits<std::size_t>::max();

std::size_t sat_add(std::size_t a, std::size_t b) {
  return a > saturated - b ? saturated : a + b;
}

std::size_t sat_mul(std::size_t a, std::size_t b) {
  return a != 0 && b > saturated / a ? saturated : a * b;
}

std::size_t pow_sat(std::size_t b, std::size_t e) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < e; ++i) out = sat_mul(out, b);
  return out;
}

// Number of canonical length sequences of total D.
std::size_t shape_count(std::size_t total, Tail tail) {
  // ways[k] = sequences of blocks >= 1 summing to k (possibly none)
  std::vector<std::size_t> ways(total + 1, 0);
  ways[0] = 1;
  for (std::size_t k = 1; k <= total; ++k) ways[k] = pow_sat(2, k - 1);
  std::size_t n = 1;  // single block
  for (std::size_t first = 0; first <= total; ++first) {
    std::size_t left = total - first;
    if (tail == Tail::finite) {
      // at least one more block; the last may be empty
      for (std::size_t last = 0; last <= left; ++last) n = sat_add(n, ways[left - last]);
    } else if (left > 0) {
      n = sat_add(n, ways[left]);  // blocks >= 1, last one included
    }
  }
  return n;
}

}  // namespace

std::size_t universe_size(Alphabet const& sigma, std::size_t d,
                          std::set<Tail> const& tails) {
  std::size_t n = 0;
  for (auto t : tails) {
    for (std::size_t total = 0; total <= d; ++total) {
      n = sat_add(n, sat_mul(shape_count(total, t), pow_sat(sigma.size(), total)));
    }
  }
  return n;
}

std::vector<Monomial> enumerate_monomials(Alphabet const& sigma, std::size_t d,
                                          std::set<Tail> const& tails) {
  auto size = universe_size(sigma, d, tails);
  if (size > max_universe()) {
    throw ResourceError("monomial universe of degree " + std::to_string(d)
                        + " has " + std::to_string(size)
                        + " elements, above the cap of "
                        + std::to_string(max_universe())
                        + " (set DDO_MAX_UNIVERSE)");
  }
  std::vector<Monomial> out;
  out.reserve(size);
  for (auto tail : tails) {
    for (std::size_t total = 0; total <= d; ++total) {
      std::vector<std::vector<std::size_t>> shapes{{total}};
      // n >= 2: first >= 0, interior >= 1, last >= 0 (finite) or >= 1
      std::size_t const min_last = tail == Tail::finite ? 0 : 1;
      std::vector<std::size_t> lens;
      std::function<void(std::size_t)> rest = [&](std::size_t left) {
        if (left >= min_last) {
          lens.push_back(left);
          shapes.push_back(lens);
          lens.pop_back();
        }
        for (std::size_t mid = 1; mid + min_last <= left; ++mid) {
          lens.push_back(mid);
          rest(left - mid);
          lens.pop_back();
        }
      };
      for (std::size_t first = 0; first <= total; ++first) {
        lens = {first};
        rest(total - first);
      }
      for (auto const& shape : shapes) {
        // every filling of the shape with letters, in lexicographic order
        std::vector<std::size_t> digits(total, 0);
        for (;;) {
          std::vector<Word> blocks;
          std::size_t k = 0;
          for (auto len : shape) {
            Word b;
            for (std::size_t i = 0; i < len; ++i) b += sigma[digits[k++]];
            blocks.push_back(std::move(b));
          }
          out.emplace_back(std::move(blocks), tail);
          std::size_t i = total;
          while (i > 0 && ++digits[i - 1] == sigma.size()) digits[--i] = 0;
          if (i == 0) break;
        }
      }
    }
  }
  return out;
}

std::set<Monomial> fingerprint(std::vector<Monomial> const& universe,
                               std::variant<Word, UPWord> const& w) {
  std::set<Monomial> out;
  for (auto const& m : universe) {
    bool in = std::visit([&](auto const& x) { return member(m, x); }, w);
    if (in) out.insert(m);
  }
  return out;
}

std::set<Monomial> fingerprint(Alphabet const& sigma,
                               std::variant<Word, UPWord> const& w,
                               std::size_t d, std::set<Tail> const& tails) {
  return fingerprint(enumerate_monomials(sigma, d, tails), w);
}

Sentence compile_to_sigma1(Monomial const& m) {
  auto const& b = m.blocks();
  if (m.tail() == Tail::finite && b.size() == 1 && b[0].empty()) {
    throw std::domain_error(
        "the monomial {1} has no existential definition: it needs the "
        "absence of positions");
  }
  std::vector<FormulaPtr> atoms;
  std::vector<std::string> vars;
  std::string prev_last;  // last variable of the previous nonempty block
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].empty()) continue;
    std::string first_var;
    for (std::size_t j = 0; j < b[i].size(); ++j) {
      auto v = "x" + std::to_string(vars.size() + 1);
      if (j == 0) {
        first_var = v;
        if (i == 0) atoms.push_back(fo::min(v));
      } else {
        atoms.push_back(fo::succ(v, vars.back()));
      }
      atoms.push_back(fo::label(v, b[i][j]));
      vars.push_back(v);
    }
    if (!prev_last.empty()) atoms.push_back(fo::less(prev_last, first_var));
    prev_last = vars.back();
  }
  if (m.tail() == Tail::finite && !b.back().empty()) {
    atoms.push_back(fo::max(vars.back()));
  }
  FormulaPtr f = fo::conj(std::move(atoms));
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) f = fo::exists(*it, f);
  return Sentence(f);
}

}  // namespace ddo
