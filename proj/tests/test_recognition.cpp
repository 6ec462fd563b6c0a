#include <catch2/catch_amalgamated.hpp>

#include "ddo/decide.hpp"
#include "ddo/oracles.hpp"
#include "ddo/recognition.hpp"
#include "support.hpp"

using namespace ddo;
using ddo::test::corpus;
using ddo::test::grid_for;
using ddo::test::load;

namespace {

RecognizingHom synt(std::string const& name) {
  return syntactic_quotient(build_pure_profile_hom(load(name)));
}

}  // namespace

TEST_CASE("up_member examples", "[recognition]") {
  auto h = build_pure_profile_hom(load("a_gamma_inf"));
  CHECK(up_member(h, Word("ab")));
  CHECK_FALSE(up_member(h, UPWord("b", "a")));
  CHECK(up_member(h, UPWord("a", "b")));
  CHECK(h.epsilon_strict);
  CHECK(h.monoid.label(h.monoid.identity()) == "1");
}

TEST_CASE("profile homomorphism recognizes the automaton language", "[recognition]") {
  for (auto const& c : corpus()) {
    for (auto const& name : {c.name, c.name + "_alt"}) {
      INFO(name);
      auto a = load(name);
      auto g = grid_for(a);
      auto words = enumerate_words(g);
      auto ups = enumerate_up(g);
      auto h = build_pure_profile_hom(a);
      auto q = syntactic_quotient(h);
      for (auto const& w : words) {
        CHECK(up_member(h, w) == member(a, w));
        CHECK(up_member(q, w) == member(a, w));
      }
      for (auto const& w : ups) {
        CHECK(up_member(h, w) == member(a, w));
        CHECK(up_member(q, w) == member(a, w));
      }
    }
  }
}

TEST_CASE("preimages are shortlex-least", "[recognition]") {
  for (auto const& c : corpus()) {
    auto a = load(c.name);
    auto g = grid_for(a);
    g.max_word_len = 5;
    auto words = enumerate_words(g);
    auto h = build_pure_profile_hom(a);
    std::vector<char> seen(h.monoid.size(), 0);
    for (auto const& w : words) {
      auto x = h.image(w);
      if (!seen[x]) {
        CHECK(h.preimage[x] == w);
        seen[x] = 1;
      }
    }
  }
}

TEST_CASE("syntactic quotient examples", "[recognition]") {
  auto full = synt("gamma_inf");
  CHECK(full.monoid.size() == 2);

  auto a = synt("a_gamma_inf");
  REQUIRE(a.monoid.size() == 3);
  auto s = SubSemigroup::without_identity(a.monoid);
  for (Element x : s.elements()) {
    for (Element y : s.elements()) CHECK(a.monoid.mul(x, y) == x);
  }

  auto om = synt("gamma_omega");
  REQUIRE(om.monoid.size() == 2);
  Element sigma = om.image("a");
  CHECK(om.image("b") == sigma);
  CHECK(om.accepts(sigma, sigma));
  CHECK_FALSE(om.accepts(sigma, om.monoid.identity()));
}

TEST_CASE("syntactic congruence is a congruence", "[recognition]") {
  for (auto const& c : corpus()) {
    auto h = build_pure_profile_hom(load(c.name));
    auto classes = kernels::congruence_classes(h.monoid, h.accept);
    auto const& m = h.monoid;
    for (Element p = 0; p < m.size(); ++p) {
      for (Element q = 0; q < m.size(); ++q) {
        if (classes[p] != classes[q]) continue;
        for (Element r = 0; r < m.size(); ++r) {
          CHECK(classes[m.mul(r, p)] == classes[m.mul(r, q)]);
          CHECK(classes[m.mul(p, r)] == classes[m.mul(q, r)]);
        }
      }
    }
  }
}

TEST_CASE("quotient partition agrees with context enumeration", "[recognition][oracle]") {
  for (auto const& c : corpus()) {
    INFO(c.name);
    auto a = load(c.name);
    auto g = grid_for(a);
    auto lang = brute_language(a);
    auto h = build_pure_profile_hom(a);
    auto q = syntactic_quotient(h);
    for (Element x = 0; x < h.monoid.size(); ++x) {
      for (Element y = x + 1; y < h.monoid.size(); ++y) {
        auto const& p = h.preimage[x];
        auto const& r = h.preimage[y];
        if (p.empty() || r.empty()) continue;
        if (q.image(p) == q.image(r)) {
          CHECK_FALSE(brute_syntactic_separate(lang, p, r, g));
        } else {
          auto ctx = distinguishing_context(q, lang, p, r);
          auto in = [&](std::variant<Word, UPWord> const& w) {
            return std::visit([&](auto const& v) {
              if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Word>) {
                return lang.finite(v);
              } else {
                return lang.infinite(v);
              }
            }, w);
          };
          CHECK(in(plug(ctx, p)) != in(plug(ctx, r)));
          auto found = brute_syntactic_separate(lang, p, r, g);
          REQUIRE(found);
          CHECK(in(plug(*found, p)) != in(plug(*found, r)));
        }
      }
    }
  }
}

TEST_CASE("restrict separates the two parts", "[recognition]") {
  auto h = synt("a_gamma_star_or_b_gamma_omega");
  auto f = restrict(h, Part::finite);
  auto i = restrict(h, Part::infinite);
  Grid g;
  for (auto const& w : enumerate_words(g)) {
    CHECK(up_member(f, w) == up_member(h, w));
    CHECK_FALSE(up_member(i, w));
  }
  for (auto const& w : enumerate_up(g)) {
    CHECK_FALSE(up_member(f, w));
    CHECK(up_member(i, w) == up_member(h, w));
  }
}

TEST_CASE("homomorphism JSON round trip", "[recognition]") {
  for (auto const& c : corpus()) {
    auto a = load(c.name);
    auto h = synt(c.name);
    auto text = serialize(h, a.mode());
    auto doc = parse_hom(text);
    CHECK(doc.mode == a.mode());
    CHECK(serialize(doc.hom, doc.mode) == text);
    auto lang = Language::of(doc.hom);
    CHECK(report_json(decide(doc.hom, a.mode(), lang)) == report_json(decide_all(a)));
  }
}

TEST_CASE("homomorphism documents are validated", "[recognition]") {
  auto text = serialize(synt("a_gamma_inf"));
  auto broken = text;
  broken.replace(broken.find("\"a\":1"), 5, "\"a\":0");
  CHECK_THROWS_AS(parse_hom(broken), ParseError);
  CHECK_THROWS_AS(parse_hom("{}"), ParseError);
}
