#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "ddo/langexpr.hpp"
#include "ddo/oracles.hpp"
#include "support.hpp"

using namespace ddo;

namespace {

Monomial mono(std::string_view s) { return parse_monomial(s); }

std::vector<std::string> texts(std::set<Monomial> const& ms) {
  std::vector<std::string> out;
  for (auto const& m : ms) out.push_back(to_string(m));
  return out;
}

}  // namespace

TEST_CASE("degree and canonical form", "[langexpr]") {
  CHECK(degree(Monomial({"ab", "a"}, Tail::any_infty)) == 3);
  CHECK(degree(Monomial({""}, Tail::finite)) == 0);
  CHECK_THROWS(Monomial({"a", "", "b"}, Tail::finite));
  CHECK(canonicalize({"a", "", "b"}, Tail::finite) == Monomial({"a", "b"}, Tail::finite));
  CHECK(canonicalize({""}, Tail::any_infty) == Monomial({""}, Tail::any_infty));
  CHECK(canonicalize({"a", "b"}, Tail::omega_only) == Monomial({"a", "b"}, Tail::omega_only));
  // A trailing Γ* in front of an infinite tail is absorbed.
  CHECK(canonicalize({"a", ""}, Tail::any_infty) == Monomial({"a"}, Tail::any_infty));
}

TEST_CASE("monomial text form", "[langexpr]") {
  for (auto s : {"ab *ba $", "a ...", "*a ^w", "* $", "...", "$", "a *b *ab ^w"}) {
    CHECK(to_string(mono(s)) == s);
  }
  CHECK(to_string(mono("a * *b $")) == "a *b $");
  CHECK_THROWS(mono("a *b"));
  CHECK_THROWS(mono("a *b ?"));
}

TEST_CASE("monomial membership examples", "[langexpr]") {
  auto m = mono("ab *ba $");
  CHECK(member(m, Word("abba")));
  CHECK_FALSE(member(m, Word("aba")));
  // (ab)^ω starts with a and has a later a.
  CHECK(member(mono("a *a ..."), UPWord("", "ab")));
  CHECK(brute_member_monomial(mono("a *a ..."), UPWord("", "ab")));
  CHECK_FALSE(member(mono("a *a ^w"), Word("aa")));
  CHECK(brute_member_monomial(mono("ab *ba $"), Word("abba")));
  CHECK_FALSE(brute_member_monomial(mono("a ^w"), Word("a")));
}

TEST_CASE("membership agrees with exhaustive placement search", "[langexpr][oracle]") {
  Grid g;
  g.max_word_len = 5;
  auto words = enumerate_words(g);
  auto ups = enumerate_up(g);
  for (auto const& m : enumerate_monomials(g.alphabet, 3,
                                           {Tail::finite, Tail::any_infty, Tail::omega_only})) {
    for (auto const& w : words) REQUIRE(member(m, w) == brute_member_monomial(m, w));
    for (auto const& w : ups) REQUIRE(member(m, w) == brute_member_monomial(m, w));
  }
}

TEST_CASE("canonicalization preserves membership", "[langexpr]") {
  Grid g;
  g.max_word_len = 5;
  std::vector<std::vector<Word>> raw{{"a", "", "b"}, {"", "", "a"}, {"a", ""}, {"", ""}};
  for (auto const& blocks : raw) {
    for (auto tail : {Tail::finite, Tail::any_infty, Tail::omega_only}) {
      auto m = canonicalize(blocks, tail);
      for (auto const& w : enumerate_words(g)) {
        CHECK(member(m, w) == brute_member_blocks(blocks, tail, w));
      }
      for (auto const& w : enumerate_up(g)) {
        CHECK(member(m, w) == brute_member_blocks(blocks, tail, w));
      }
    }
  }
}

TEST_CASE("Boolean combinations", "[langexpr]") {
  auto a = BoolComb::leaf(mono("a ..."));
  CHECK(boolcomb_member(BoolComb::neg(a), Word("ba")));
  for (auto const& w : enumerate_words(Grid{})) {
    CHECK_FALSE(boolcomb_member(BoolComb::conj({a, BoolComb::neg(a)}), w));
  }
  // Γ^ω inside Γ^∞: neither empty nor ending in a letter.
  auto omega = BoolComb::conj({BoolComb::neg(BoolComb::leaf(mono("$"))),
                               BoolComb::neg(BoolComb::leaf(mono("*a $"))),
                               BoolComb::neg(BoolComb::leaf(mono("*b $")))});
  CHECK(boolcomb_member(omega, UPWord("", "a")));
  for (auto const& w : enumerate_words(Grid{})) CHECK_FALSE(boolcomb_member(omega, w));

  auto text = to_string(omega);
  CHECK(to_string(parse_boolcomb(text)) == text);
}

TEST_CASE("fingerprints", "[langexpr]") {
  Alphabet ab("ab");
  // Frozen from filtering the degree-1 universe with the placement oracle.
  auto fp = fingerprint(ab, Word("a"), 1, {Tail::finite, Tail::any_infty});
  CHECK(texts(fp) == std::vector<std::string>{"...", "* $", "*a $", "*a ...", "*a * $",
                                              "a $", "a ...", "a * $"});
  std::set<Monomial> oracle;
  for (auto const& m : enumerate_monomials(ab, 1, {Tail::finite, Tail::any_infty})) {
    if (brute_member_monomial(m, Word("a"))) oracle.insert(m);
  }
  CHECK(fp == oracle);

  for (auto const& w : enumerate_words(Grid{})) {
    CHECK(texts(fingerprint(ab, w, 0, {Tail::any_infty})) == std::vector<std::string>{"..."});
  }
  CHECK(fingerprint(ab, UPWord("ab", "abab"), 2, {Tail::any_infty})
        == fingerprint(ab, UPWord("", "ab"), 2, {Tail::any_infty}));
}

TEST_CASE("universe sizes", "[langexpr]") {
  Alphabet ab("ab");
  std::set<Tail> all{Tail::finite, Tail::any_infty, Tail::omega_only};
  for (std::size_t d = 0; d <= 4; ++d) {
    CHECK(universe_size(ab, d, all) == enumerate_monomials(ab, d, all).size());
  }
  CHECK(universe_size(ab, 6, {Tail::any_infty}) == 5461);
}

TEST_CASE("fingerprint universe cap", "[langexpr]") {
  ::setenv("DDO_MAX_UNIVERSE", "10", 1);
  CHECK(max_universe() == 10);
  CHECK_THROWS_AS(fingerprint(Alphabet("ab"), Word("ab"), 2, {Tail::any_infty}),
                  ResourceError);
  ::unsetenv("DDO_MAX_UNIVERSE");
  CHECK(max_universe() == default_max_universe);
}

TEST_CASE("compilation to existential sentences", "[langexpr]") {
  CHECK(to_string(compile_to_sigma1(mono("a ...")).formula())
        == "(exists x1 (and (min x1) (label x1 a)))");
  CHECK(to_string(compile_to_sigma1(mono("ab $")).formula())
        == "(exists x1 (exists x2 (and (min x1) (label x1 a) (succ x2 x1) "
           "(label x2 b) (max x2))))");
  CHECK_THROWS_AS(compile_to_sigma1(mono("$")), std::domain_error);
  CHECK(to_string(compile_to_sigma1(mono("* $")).formula()) == "(true)");

  Grid g;
  g.max_word_len = 5;
  for (auto const& m : enumerate_monomials(g.alphabet, 3, {Tail::finite, Tail::any_infty})) {
    if (m == mono("$")) continue;
    auto s = compile_to_sigma1(m);
    CHECK(s.depth() == degree(m));
    for (auto const& w : enumerate_words(g)) REQUIRE(eval_finite(s, w) == member(m, w));
  }
}
