#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ddo/algebra.hpp"
#include "ddo/factorize.hpp"
#include "ddo/oracles.hpp"
#include "support.hpp"

using namespace ddo;
using ddo::test::corpus;
using ddo::test::grid_for;
using ddo::test::load;

namespace {

Factorization fz(std::vector<FactorEntry> e) { return Factorization(std::move(e)); }

RecognizingHom synt(std::string const& name) {
  return syntactic_quotient(build_pure_profile_hom(load(name)));
}

// Every placement of the blocks of a monomial with an infinite or open
// tail, as vectors of 1-based start positions.
void placements(std::vector<Word> const& b, std::size_t i, std::size_t pos,
                Word const& w, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (i == b.size()) {
    out.push_back(cur);
    return;
  }
  std::size_t lo = i == 0 ? 0 : pos;
  std::size_t hi = i == 0 ? 0 : w.size();
  for (std::size_t c = lo; c <= hi && c + b[i].size() <= w.size(); ++c) {
    if (w.compare(c, b[i].size(), b[i]) != 0) continue;
    cur.push_back(c + 1);
    placements(b, i + 1, c + b[i].size(), w, cur, out);
    cur.pop_back();
  }
}

Factorization random_factorization(Word const& w, std::mt19937& rng) {
  std::vector<FactorEntry> out;
  std::size_t p = 1;
  std::uniform_int_distribution<std::size_t> skip(0, 2), len(1, 3);
  while (true) {
    p += skip(rng);
    std::size_t l = len(rng);
    if (p + l - 1 > w.size()) break;
    out.push_back({p, w.substr(p - 1, l)});
    p += l;
  }
  return Factorization(std::move(out));
}

}  // namespace

TEST_CASE("factorization validity", "[factorize]") {
  CHECK(is_factorization_of(fz({{1, "ab"}}), Word("abb")));
  CHECK(is_factorization_of(fz({{2, "b"}}), Word("ab")));
  CHECK_FALSE(is_factorization_of(fz({{2, "b"}}), Word("aa")));
  CHECK(is_factorization_of(Factorization{}, Word("ab")));
  CHECK(is_factorization_of(fz({{2, "aba"}}), UPWord("b", "ab")));
  CHECK_THROWS(fz({{1, "ab"}, {2, "b"}}));
  CHECK_THROWS(fz({{0, "a"}}));
  CHECK_THROWS(fz({{1, ""}}));
}

TEST_CASE("join of a worked example", "[factorize]") {
  Word w = "abbabaabbabab";
  auto g = fz({{1, w.substr(0, 2)}, {6, w.substr(5, 1)}, {7, w.substr(6, 2)},
               {10, w.substr(9, 2)}});
  auto expected = fz({{1, w.substr(0, 3)}, {6, w.substr(5, 1)}, {7, w.substr(6, 5)},
                      {12, w.substr(11, 2)}});

  // With F's middle block of length 2 the blocks at 7 and 10 never meet.
  auto f_literal = fz({{1, w.substr(0, 3)}, {8, w.substr(7, 2)}, {12, w.substr(11, 2)}});
  CHECK(join(f_literal, g, w)
        == fz({{1, w.substr(0, 3)}, {6, w.substr(5, 1)}, {7, w.substr(6, 3)},
               {10, w.substr(9, 2)}, {12, w.substr(11, 2)}}));

  // A middle block of length 3 reaches position 10 and yields the caption.
  auto f_caption = fz({{1, w.substr(0, 3)}, {8, w.substr(7, 3)}, {12, w.substr(11, 2)}});
  CHECK(join(f_caption, g, w) == expected);
  // Adjacent blocks 6 and 7 stay apart; so do 11 and 12.
  CHECK(join(f_caption, g, w).size() == 4);
}

TEST_CASE("join is idempotent, commutative and associative", "[factorize]") {
  std::mt19937 rng(3);
  Word w = "abaabbabbbaababa";
  for (int i = 0; i < 200; ++i) {
    auto f = random_factorization(w, rng);
    auto g = random_factorization(w, rng);
    auto h = random_factorization(w, rng);
    CHECK(join(f, f, w) == f);
    CHECK(join(f, g, w) == join(g, f, w));
    CHECK(join(join(f, g, w), h, w) == join(f, join(g, h, w), w));
    CHECK(is_subfactorization(f, join(f, g, w)));
  }
  CHECK_THROWS(join(fz({{1, "b"}}), Factorization{}, Word("ab")));
}

TEST_CASE("subfactorizations", "[factorize]") {
  CHECK(is_subfactorization(fz({{2, "b"}}), fz({{1, "ab"}})));
  CHECK_FALSE(is_subfactorization(fz({{1, "a"}}), fz({{2, "a"}})));
}

TEST_CASE("R- and L-factorizations", "[factorize]") {
  auto trivial = synt("gamma_inf");
  CHECK(r_factorization(trivial, Word("ab")) == fz({{1, "a"}}));
  CHECK(r_factorization(trivial, Word("")).empty());
  CHECK(l_factorization(trivial, Word("ab")) == fz({{2, "b"}}));
  CHECK_THROWS(l_factorization(trivial, UPWord("", "ab")));
  CHECK_THROWS(lk_factorization(trivial, UPWord("", "ab"), 1));
  CHECK_THROWS(rk_factorization(trivial, Word("ab"), 0));

  CHECK(r_factorization(synt("a_gamma_inf"), Word("abb")) == fz({{1, "a"}}));
  auto last = l_factorization(synt("gamma_star_a"), Word("bba"));
  REQUIRE_FALSE(last.empty());
  CHECK(last.entries().back().pos == 3);

  CHECK(rk_factorization(trivial, Word("abab"), 2) == fz({{1, "aba"}}));
  CHECK(rk_factorization(trivial, Word(""), 2).empty());
}

TEST_CASE("factorization sizes are bounded by the monoid", "[factorize]") {
  for (auto const& c : corpus()) {
    auto a = load(c.name);
    auto h = syntactic_quotient(build_pure_profile_hom(a));
    auto g = grid_for(a);
    std::size_t m = h.monoid.size();
    for (auto const& w : enumerate_words(g)) {
      CHECK(r_factorization(h, w).size() <= m);
      CHECK(l_factorization(h, w).size() <= m);
      CHECK(rk_factorization(h, w, m).positions() <= 2 * m * m);
      CHECK(lk_factorization(h, w, m).positions() <= 2 * m * m);
    }
    for (auto const& w : enumerate_up(g)) CHECK(r_factorization(h, w).size() <= m);
  }
}

TEST_CASE("R-factorizations of infinite words match long explicit prefixes", "[factorize][oracle]") {
  for (auto const& c : corpus()) {
    auto a = load(c.name);
    auto h = syntactic_quotient(build_pure_profile_hom(a));
    auto g = grid_for(a);
    g.max_stem = 4;
    g.max_loop = 4;
    for (auto const& w : enumerate_up(g)) {
      auto n = w.stem().size() + 4 * h.monoid.size() * w.loop().size();
      CHECK(r_factorization(h, w) == r_factorization(h, up_prefix(w, n)));
    }
  }
}

TEST_CASE("greedy factorizations", "[factorize]") {
  auto m1 = parse_monomial("a *a ...");
  CHECK(greedy_factorization(m1, UPWord("aab", "b")) == fz({{1, "a"}, {2, "a"}}));
  auto m2 = parse_monomial("ab *ba $");
  CHECK(greedy_factorization(m2, Word("abba")) == fz({{1, "ab"}, {3, "ba"}}));
  CHECK_FALSE(greedy_factorization(m2, Word("abab")));
  CHECK(greedy_factorization(parse_monomial("*a *b $"), Word("babab"))
        == fz({{2, "a"}, {5, "b"}}));
}

TEST_CASE("greedy placement has lexicographically least gaps", "[factorize][oracle]") {
  Grid g;
  g.max_word_len = 6;
  auto words = enumerate_words(g);
  for (auto const& m : enumerate_monomials(g.alphabet, 3, {Tail::any_infty})) {
    for (auto const& w : words) {
      std::vector<std::vector<std::size_t>> all;
      std::vector<std::size_t> cur;
      placements(m.blocks(), 0, 0, w, cur, all);
      auto got = greedy_factorization(m, w);
      REQUIRE(got.has_value() == !all.empty());
      if (all.empty()) continue;
      auto best = *std::min_element(all.begin(), all.end());
      std::vector<FactorEntry> want;
      for (std::size_t i = 0; i < best.size(); ++i) {
        if (!m.blocks()[i].empty()) want.push_back({best[i], m.blocks()[i]});
      }
      CHECK(*got == Factorization(want));
    }
  }
}

TEST_CASE("monomial of a factorization", "[factorize]") {
  auto m = monomial_of(fz({{1, "a"}, {5, "b"}}), Tail::any_infty);
  CHECK(to_string(m) == "a *b ...");
  CHECK(degree(m) == 2);
  CHECK_THROWS(monomial_of(fz({{2, "a"}}), Tail::any_infty));
  Word w = "abbab";
  auto f = fz({{1, "ab"}, {4, "a"}});
  CHECK(member(monomial_of(f, Tail::any_infty), w));
}

TEST_CASE("R(k)-factorizations are greedy for their monomial", "[factorize]") {
  for (auto const& c : corpus()) {
    auto a = load(c.name);
    auto h = syntactic_quotient(build_pure_profile_hom(a));
    auto s = SubSemigroup::without_identity(h.monoid);
    if (!is_b1(s).holds) continue;
    INFO(c.name);
    auto g = grid_for(a);
    std::size_t k = h.monoid.size();
    for (auto const& w : enumerate_words(g)) {
      if (w.empty()) continue;
      auto f = rk_factorization(h, w, k);
      CHECK(greedy_factorization(monomial_of(f, Tail::any_infty), w) == f);
    }
    for (auto const& w : enumerate_up(g)) {
      auto f = rk_factorization(h, w, k);
      CHECK(greedy_factorization(monomial_of(f, Tail::any_infty), w) == f);
    }
  }
}
