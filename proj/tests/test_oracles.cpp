#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ddo/oracles.hpp"
#include "support.hpp"

using namespace ddo;
using ddo::test::corpus;
using ddo::test::grid_for;
using ddo::test::load;

TEST_CASE("word enumeration", "[oracles]") {
  Grid g;
  g.max_word_len = 1;
  CHECK(enumerate_words(g) == std::vector<Word>{"", "a", "b"});
  g.max_word_len = 3;
  CHECK(enumerate_words(g).size() == 15);

  Grid u;
  u.max_stem = 0;
  u.max_loop = 1;
  CHECK(enumerate_up(u) == std::vector<UPWord>{UPWord("", "a"), UPWord("", "b")});

  auto ups = enumerate_up(Grid{});
  CHECK(std::set<UPWord>(ups.begin(), ups.end()).size() == ups.size());
  for (auto const& w : ups) CHECK(up_canonicalize(w) == w);
}

TEST_CASE("reference semantics on small examples", "[oracles]") {
  CHECK(brute_member_monomial(parse_monomial("ab *ba $"), Word("abba")));
  CHECK_FALSE(brute_member_monomial(parse_monomial("a *b ^w"), Word("ab")));
  auto max = parse_sentence("(exists x (max x))");
  auto min_a = parse_sentence("(exists x (and (min x) (label x a)))");
  CHECK_FALSE(brute_eval_up(max, UPWord("a", "b")));
  CHECK(brute_eval_up(min_a, UPWord("a", "b")));
}

TEST_CASE("context search", "[oracles]") {
  auto a = load("gamma_star_a");
  auto c = brute_syntactic_separate(brute_language(a), "a", "b", grid_for(a));
  REQUIRE(c);
  CHECK(*c == Context{"", "", "", ContextVariant::linear});
  auto full = load("gamma_inf");
  CHECK_FALSE(brute_syntactic_separate(brute_language(full), "a", "b", grid_for(full)));
  CHECK_FALSE(brute_syntactic_separate(brute_language(full), "ab", "b", grid_for(full)));
}

TEST_CASE("distinguishing contexts are confirmed by the context search", "[oracles]") {
  for (auto const& cor : corpus()) {
    auto a = load(cor.name);
    auto v = decide_all(a);
    for (auto const* t : {&v.thm5, &v.thm14, &v.thm15, &v.thm17}) {
      if (!t->certificate) continue;
      auto const* b = std::get_if<B1Violation>(&*t->certificate);
      if (!b) continue;
      auto lang = brute_language(a);
      auto in = [&](std::variant<Word, UPWord> const& w) {
        if (auto const* fw = std::get_if<Word>(&w)) return lang.finite(*fw);
        return lang.infinite(std::get<UPWord>(w));
      };
      CHECK(in(plug(b->context, b->p)) != in(plug(b->context, b->q)));
      auto found = brute_syntactic_separate(lang, b->p, b->q, grid_for(a));
      REQUIRE(found);
      CHECK(*found == b->context);
    }
  }
}

TEST_CASE("automaton enumeration", "[oracles]") {
  AutomatonGrid one;
  one.alphabet = Alphabet("a");
  one.max_states = 1;
  one.modes = {Mode::infty};
  // The initial set must be nonempty, which fixes one of the four bits.
  CHECK(automaton_count(one) == 8);
  CHECK(enumerate_automata(one).size() == 8);

  AutomatonGrid two;
  two.alphabet = Alphabet("a");
  two.max_states = 2;
  two.modes = {Mode::star};
  auto all = enumerate_automata(two);
  CHECK(all.size() == automaton_count(two));
  std::set<std::string> seen;
  for (auto const& a : all) seen.insert(serialize(a));
  CHECK(seen.size() == all.size());

  Grid g;
  g.alphabet = Alphabet("a");
  auto words = enumerate_words(g);
  bool found = false;
  for (auto const& a : all) {
    if (a.states() != 2) continue;
    bool same = true;
    for (auto const& w : words) same = same && member(a, w) == (w.size() % 2 == 0);
    found = found || same;
  }
  CHECK(found);

  AutomatonGrid sampled;
  sampled.max_states = 3;
  sampled.modes = {Mode::star, Mode::omega, Mode::infty};
  sampled.sample = 50;
  auto s1 = enumerate_automata(sampled);
  CHECK(s1.size() == 50);
  CHECK(s1 == enumerate_automata(sampled));
}

TEST_CASE("state duplication preserves the language", "[oracles]") {
  for (auto const& c : corpus()) {
    auto a = load(c.name);
    auto d = duplicate_states(a);
    CHECK(d.states() == 2 * a.states());
    auto g = grid_for(a);
    for (auto const& w : enumerate_words(g)) CHECK(member(a, w) == member(d, w));
    for (auto const& w : enumerate_up(g)) CHECK(member(a, w) == member(d, w));
  }
}

TEST_CASE("sampled sentences", "[oracles]") {
  auto s = sample_sentences(Alphabet("ab"), 3, 100, 4);
  CHECK(s.size() == 100);
  std::size_t sigma1 = 0;
  for (auto const& x : s) {
    auto c = classify(x);
    CHECK(c.fragment != Fragment::other);
    sigma1 += c.fragment == Fragment::sigma1;
  }
  CHECK(sigma1 > 0);
  auto again = sample_sentences(Alphabet("ab"), 3, 100, 4);
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(to_string(s[i].formula()) == to_string(again[i].formula()));
  }
}
