#include "ddo/decide.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ddo {

Language Language::of(ExtendedBuchiAutomaton a) {
  auto shared = std::make_shared<ExtendedBuchiAutomaton const>(std::move(a));
  return Language{[shared](Word const& w) { return member(*shared, w); },
                  [shared](UPWord const& w) { return member(*shared, w); }};
}

Language Language::of(RecognizingHom h) {
  auto shared = std::make_shared<RecognizingHom const>(std::move(h));
  return Language{[shared](Word const& w) { return up_member(*shared, w); },
                  [shared](UPWord const& w) { return up_member(*shared, w); }};
}

Language Language::restricted(Part part) const {
  Language out = *this;
  if (part == Part::finite) {
    out.infinite = [](UPWord const&) { return false; };
  } else {
    out.finite = [](Word const&) { return false; };
  }
  return out;
}

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    case Tri::not_applicable: return "n/a";
  }
  return "?";
}

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::b1: return "B1";
    case Condition::r_closed: return "R_closed";
    case Condition::r_plus_closed: return "R_plus_closed";
  }
  return "?";
}

std::string_view to_string(ContextVariant v) {
  return v == ContextVariant::linear ? "linear" : "cyclic";
}

std::variant<Word, UPWord> plug(Context const& c, Word const& mid) {
  if (c.variant == ContextVariant::cyclic) {
    return UPWord(c.u, mid + c.v);
  }
  if (c.w.empty()) {
    return c.u + mid + c.v;
  }
  return UPWord(c.u + mid + c.v, c.w);
}

namespace {

void require_strict(RecognizingHom const& h) {
  if (!h.epsilon_strict) {
    throw std::invalid_argument(
        "decision procedures need a homomorphism where only the empty word "
        "maps to the identity");
  }
}

bool in(Language const& lang, std::variant<Word, UPWord> const& w) {
  return std::visit(
      [&](auto const& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Word>) {
          return lang.finite(x);
        } else {
          return lang.infinite(x);
        }
      },
      w);
}

LinkedPairCheck linked_pair_scan(RecognizingHom const& h, bool plus) {
  auto const& m = h.monoid;
  auto g = green(m);
  auto pairs = linked_pairs(m);
  if (plus) {
    std::erase_if(pairs, [&](LinkedPair p) { return p.e == m.identity(); });
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      auto [s, e] = pairs[i];
      auto [t, f] = pairs[j];
      if (g.r_equiv(s, t) && h.accepts(s, e) != h.accepts(t, f)) {
        return {false, std::pair{pairs[i], pairs[j]}};
      }
    }
  }
  return {};
}

std::variant<Word, UPWord> block_word(RecognizingHom const& h, LinkedPair p) {
  if (p.e == h.monoid.identity()) return h.preimage[p.s];
  return UPWord(h.preimage[p.s], h.preimage[p.e]);
}

}  // namespace

B1Result check_b1_condition(RecognizingHom const& h) {
  require_strict(h);
  if (h.monoid.size() == 1) return {};  // Γ is nonempty, so unreachable
  return is_b1(SubSemigroup::without_identity(h.monoid));
}

LinkedPairCheck check_r_closed(RecognizingHom const& h) {
  return linked_pair_scan(h, false);
}

LinkedPairCheck check_r_plus_closed(RecognizingHom const& h) {
  return linked_pair_scan(h, true);
}

bool tail_independent(RecognizingHom const& h) {
  for (auto [s, e] : linked_pairs(h.monoid)) {
    if (h.accepts(s, h.monoid.identity()) != h.accepts(s, e)) return false;
  }
  return true;
}

std::pair<Word, Word> b1_witness_words(Word const& e, Word const& f,
                                       Word const& s, Word const& t,
                                       Word const& x, Word const& y,
                                       unsigned n) {
  for (auto const* w : {&e, &f, &s, &t, &x, &y}) {
    if (w->empty()) {
      throw std::invalid_argument("B1 witness words must be nonempty");
    }
  }
  if (n == 0) throw std::invalid_argument("B1 exponent must be positive");
  auto pow = [](Word const& w, unsigned k) {
    Word out;
    out.reserve(w.size() * k);
    for (unsigned i = 0; i < k; ++i) out += w;
    return out;
  };
  Word en = pow(e, n);
  Word fn = pow(f, n);
  Word left = pow(en + x + fn + y, n);
  Word right = pow(t + en + s + fn, n);
  return {left + en + x + fn + right, left + en + s + fn + right};
}

Context distinguishing_context(RecognizingHom const& h, Language const& lang,
                               Word const& p, Word const& q) {
  auto const& m = h.monoid;
  Element hp = h.image(p);
  Element hq = h.image(q);
  if (p.empty() || q.empty()) {
    throw std::invalid_argument("context search needs nonempty words");
  }
  if (hp == hq) {
    throw std::invalid_argument("\"" + p + "\" and \"" + q
                                + "\" have the same syntactic image");
  }
  std::vector<Element> order(m.size());
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    return h.preimage[a].size() < h.preimage[b].size();
  });
  auto len = [&](Element x) { return h.preimage[x].size(); };
  std::size_t max_len = len(order.back());
  Element one = m.identity();

  auto confirm = [&](Context c) {
    bool a = in(lang, plug(c, p));
    bool b = in(lang, plug(c, q));
    if (a == b) {
      throw std::logic_error("context separating \"" + p + "\" and \"" + q
                             + "\" in the monoid does not separate them in "
                               "the language");
    }
    return c;
  };

  for (std::size_t total = 0; total <= 3 * max_len; ++total) {
    for (auto u : order) {
      for (auto v : order) {
        if (len(u) + len(v) > total) continue;
        for (auto w : order) {
          if (len(u) + len(v) + len(w) != total) continue;
          bool a, b;
          if (w == one) {
            a = h.accepts(m.mul(u, hp, v), one);
            b = h.accepts(m.mul(u, hq, v), one);
          } else {
            Element e = m.idempotent_power(w);
            a = h.accepts(m.mul(u, hp, v, e), e);
            b = h.accepts(m.mul(u, hq, v, e), e);
          }
          if (a != b) {
            return confirm({h.preimage[u], h.preimage[v], h.preimage[w],
                            ContextVariant::linear});
          }
        }
      }
    }
    for (auto u : order) {
      for (auto v : order) {
        if (len(u) + len(v) != total) continue;
        Element ep = m.idempotent_power(m.mul(hp, v));
        Element eq = m.idempotent_power(m.mul(hq, v));
        if (h.accepts(m.mul(u, ep), ep) != h.accepts(m.mul(u, eq), eq)) {
          return confirm({h.preimage[u], h.preimage[v], "",
                          ContextVariant::cyclic});
        }
      }
    }
  }
  throw std::invalid_argument("no context separates \"" + p + "\" and \"" + q
                              + "\"; the homomorphism is not syntactic");
}

namespace {

B1Violation b1_certificate(RecognizingHom const& h, Language const& lang,
                           B1Witness const& w) {
  B1Violation c;
  c.elements = w;
  c.words = {h.preimage[w.e], h.preimage[w.f], h.preimage[w.s],
             h.preimage[w.t], h.preimage[w.x], h.preimage[w.y]};
  c.n = exponent(SubSemigroup::without_identity(h.monoid));
  std::tie(c.p, c.q) = b1_witness_words(c.words[0], c.words[1], c.words[2],
                                        c.words[3], c.words[4], c.words[5], c.n);
  if (h.image(c.p) == h.image(c.q)) {
    throw std::logic_error("B1 witness words have equal images");
  }
  c.context = distinguishing_context(h, lang, c.p, c.q);
  return c;
}

LinkedPairViolation pair_certificate(RecognizingHom const& h,
                                     std::pair<LinkedPair, LinkedPair> v) {
  LinkedPairViolation c;
  c.first = v.first;
  c.second = v.second;
  c.first_accepted = h.accepts(v.first.s, v.first.e);
  c.second_accepted = h.accepts(v.second.s, v.second.e);
  c.first_word = block_word(h, v.first);
  c.second_word = block_word(h, v.second);
  return c;
}

// Evaluates B1 followed by an optional linked-pair condition.
TheoremVerdict evaluate(RecognizingHom const& h, Language const& lang,
                        std::optional<Condition> pairs,
                        std::optional<B1Result> const& b1_cached = {}) {
  TheoremVerdict out;
  auto b1 = b1_cached ? *b1_cached : check_b1_condition(h);
  if (!b1.holds) {
    out.result = Tri::no;
    out.reason = Condition::b1;
    out.certificate = b1_certificate(h, lang, *b1.witness);
    return out;
  }
  if (pairs) {
    auto check = *pairs == Condition::r_closed ? check_r_closed(h)
                                               : check_r_plus_closed(h);
    if (!check.holds) {
      out.result = Tri::no;
      out.reason = pairs;
      out.certificate = pair_certificate(h, *check.violation);
      return out;
    }
  }
  out.result = Tri::yes;
  return out;
}

}  // namespace

Analysis const* Verdict::analysis(std::string_view key) const {
  for (auto const& [k, a] : analyses) {
    if (k == key) return &a;
  }
  return nullptr;
}

Verdict decide(RecognizingHom const& h0, Mode mode, Language const& lang) {
  require_strict(h0);
  Verdict v;
  v.mode = mode;
  auto h = syntactic_quotient(h0);
  v.synt_size = h.monoid.size();
  v.tail_independent = tail_independent(h);

  switch (mode) {
    case Mode::star:
      v.thm14 = evaluate(h, lang, std::nullopt);
      v.analyses.push_back({"thm14", {h, std::nullopt}});
      break;
    case Mode::omega:
      v.thm17 = evaluate(h, lang, Condition::r_plus_closed);
      v.analyses.push_back({"thm17", {h, std::nullopt}});
      break;
    case Mode::infty: {
      auto b1 = check_b1_condition(h);
      v.thm5 = evaluate(h, lang, Condition::r_closed, b1);
      v.thm15 = evaluate(h, lang, Condition::r_plus_closed, b1);
      auto hf = syntactic_quotient(restrict(h, Part::finite));
      auto hi = syntactic_quotient(restrict(h, Part::infinite));
      v.thm14 = evaluate(hf, lang.restricted(Part::finite), std::nullopt);
      v.thm17 = evaluate(hi, lang.restricted(Part::infinite),
                         Condition::r_plus_closed);
      v.analyses.push_back({"thm5", {h, std::nullopt}});
      v.analyses.push_back({"thm14", {std::move(hf), Part::finite}});
      v.analyses.push_back({"thm15", {h, std::nullopt}});
      v.analyses.push_back({"thm17", {std::move(hi), Part::infinite}});
      break;
    }
  }
  return v;
}

Verdict decide_all(ExtendedBuchiAutomaton const& a) {
  return decide(build_pure_profile_hom(a), a.mode(), Language::of(a));
}

CertificateCheck verify_certificate(Certificate const& c,
                                    RecognizingHom const& h,
                                    Language const& lang) {
  auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
  try {
    if (auto const* b = std::get_if<B1Violation>(&c)) {
      auto s = SubSemigroup::without_identity(h.monoid);
      if (b1_check_equation(s, b->elements)) {
        return fail("B1 witness satisfies the identity");
      }
      auto const& w = b->elements;
      Element els[] = {w.e, w.f, w.s, w.t, w.x, w.y};
      for (int i = 0; i < 6; ++i) {
        if (h.image(b->words[i]) != els[i]) {
          return fail("witness word \"" + b->words[i]
                      + "\" does not map to its element");
        }
      }
      auto [p, q] = b1_witness_words(b->words[0], b->words[1], b->words[2],
                                     b->words[3], b->words[4], b->words[5], b->n);
      if (p != b->p || q != b->q) return fail("word pair does not match witness");
      if (h.image(p) == h.image(q)) return fail("word pair has equal images");
      if (in(lang, plug(b->context, p)) == in(lang, plug(b->context, q))) {
        return fail("context does not separate the word pair");
      }
      return {};
    }
    auto const& lp = std::get<LinkedPairViolation>(c);
    auto const& m = h.monoid;
    for (auto pr : {lp.first, lp.second}) {
      if (pr.s >= m.size() || pr.e >= m.size() || !is_linked_pair(m, pr.s, pr.e)) {
        return fail("not a linked pair");
      }
    }
    if (!green(m).r_equiv(lp.first.s, lp.second.s)) {
      return fail("pairs are not R-related");
    }
    if (lp.first_accepted == lp.second_accepted) {
      return fail("pairs have equal acceptance");
    }
    if (h.accepts(lp.first.s, lp.first.e) != lp.first_accepted
        || h.accepts(lp.second.s, lp.second.e) != lp.second_accepted) {
      return fail("acceptance disagrees with the Accept table");
    }
    auto check_word = [&](std::variant<Word, UPWord> const& w, LinkedPair pr) {
      if (auto const* fw = std::get_if<Word>(&w)) {
        return pr.e == m.identity() && h.image(*fw) == pr.s;
      }
      auto const& uw = std::get<UPWord>(w);
      Element e = m.idempotent_power(h.image(uw.loop()));
      return pr.e != m.identity() && e == pr.e
             && m.mul(h.image(uw.stem()), e) == pr.s;
    };
    if (!check_word(lp.first_word, lp.first) || !check_word(lp.second_word, lp.second)) {
      return fail("representative word outside its block");
    }
    if (in(lang, lp.first_word) != lp.first_accepted
        || in(lang, lp.second_word) != lp.second_accepted) {
      return fail("representative membership disagrees with the certificate");
    }
    return {};
  } catch (std::exception const& e) {
    return fail(e.what());
  }
}

CertificateCheck verify_verdict(Verdict const& v, Language const& lang) {
  std::pair<char const*, TheoremVerdict const*> items[] = {
      {"thm5", &v.thm5}, {"thm14", &v.thm14}, {"thm15", &v.thm15},
      {"thm17", &v.thm17}};
  for (auto [key, tv] : items) {
    if (!tv->certificate) continue;
    auto const* a = v.analysis(key);
    if (!a) return {false, std::string(key) + ": no analysis recorded"};
    auto l = a->part ? lang.restricted(*a->part) : lang;
    auto r = verify_certificate(*tv->certificate, a->hom, l);
    if (!r.ok) return {false, std::string(key) + ": " + r.failure};
  }
  return {};
}

namespace {

using nlohmann::ordered_json;

std::string show(std::variant<Word, UPWord> const& w) {
  if (auto const* fw = std::get_if<Word>(&w)) return *fw;
  return to_string(std::get<UPWord>(w));
}

ordered_json certificate_json(Certificate const& c, RecognizingHom const& h) {
  ordered_json j;
  if (auto const* b = std::get_if<B1Violation>(&c)) {
    auto const& w = b->elements;
    j["kind"] = "B1Violation";
    j["elements"] = {{"e", w.e}, {"f", w.f}, {"s", w.s},
                     {"t", w.t}, {"x", w.x}, {"y", w.y}};
    j["words"] = {{"e", b->words[0]}, {"f", b->words[1]}, {"s", b->words[2]},
                  {"t", b->words[3]}, {"x", b->words[4]}, {"y", b->words[5]}};
    j["n"] = b->n;
    j["p"] = b->p;
    j["q"] = b->q;
    j["context"] = {{"u", b->context.u},
                    {"v", b->context.v},
                    {"w", b->context.w},
                    {"variant", std::string(to_string(b->context.variant))}};
    return j;
  }
  auto const& lp = std::get<LinkedPairViolation>(c);
  j["kind"] = "LinkedPairViolation";
  j["pairs"] = {{lp.first.s, lp.first.e}, {lp.second.s, lp.second.e}};
  // Explicit arrays: a braced list of string pairs would become an object.
  j["labels"] = ordered_json::array(
      {ordered_json::array({h.monoid.label(lp.first.s), h.monoid.label(lp.first.e)}),
       ordered_json::array({h.monoid.label(lp.second.s), h.monoid.label(lp.second.e)})});
  j["accepted"] = {lp.first_accepted, lp.second_accepted};
  j["witnesses"] = {show(lp.first_word), show(lp.second_word)};
  return j;
}

constexpr std::pair<char const*, char const*> theorem_names[] = {
    {"thm5", "BSigma1[<,+1,min] on finite and infinite words"},
    {"thm14", "dot-depth one on finite words"},
    {"thm15", "BSigma1[<,+1,min,max] on finite and infinite words"},
    {"thm17", "dot-depth one on infinite words"},
};

TheoremVerdict const& get(Verdict const& v, std::string_view key) {
  if (key == "thm5") return v.thm5;
  if (key == "thm14") return v.thm14;
  if (key == "thm15") return v.thm15;
  return v.thm17;
}

}  // namespace

std::string report_json(Verdict const& v) {
  ordered_json j;
  j["mode"] = std::string(to_string(v.mode));
  ordered_json verdicts, reasons, certs;
  for (auto [key, name] : theorem_names) {
    auto const& tv = get(v, key);
    verdicts[key] = std::string(to_string(tv.result));
    if (tv.reason) reasons[key] = std::string(to_string(*tv.reason));
    if (tv.certificate) {
      certs[key] = certificate_json(*tv.certificate, v.analysis(key)->hom);
    }
  }
  j["verdicts"] = verdicts;
  j["reasons"] = reasons.is_null() ? ordered_json::object() : reasons;
  j["certificate"] = certs.is_null() ? ordered_json::object() : certs;
  j["synt_size"] = v.synt_size;
  j["tail_independent"] = v.tail_independent;
  return j.dump(2) + "\n";
}

std::string report_text(Verdict const& v) {
  std::ostringstream os;
  os << "mode: " << to_string(v.mode) << "\n"
     << "syntactic monoid: " << v.synt_size << " elements\n";
  for (auto [key, name] : theorem_names) {
    auto const& tv = get(v, key);
    if (tv.result == Tri::not_applicable) continue;
    os << key << " (" << name << "): " << to_string(tv.result);
    if (tv.reason) os << ", fails " << to_string(*tv.reason);
    os << "\n";
    if (!tv.certificate) continue;
    auto const& h = v.analysis(key)->hom;
    if (auto const* b = std::get_if<B1Violation>(&*tv.certificate)) {
      os << "  B1 witness (e f s t x y) = (" << b->words[0] << " " << b->words[1]
         << " " << b->words[2] << " " << b->words[3] << " " << b->words[4] << " "
         << b->words[5] << "), n = " << b->n << "\n"
         << "  p = " << b->p << "\n  q = " << b->q << "\n"
         << "  separated by " << to_string(b->context.variant) << " context u = \""
         << b->context.u << "\", v = \"" << b->context.v << "\", w = \""
         << b->context.w << "\"\n";
    } else {
      auto const& lp = std::get<LinkedPairViolation>(*tv.certificate);
      auto pair = [&](LinkedPair p) {
        return "(" + h.monoid.label(p.s) + ", " + h.monoid.label(p.e) + ")";
      };
      os << "  R-related linked pairs " << pair(lp.first) << " "
         << (lp.first_accepted ? "accepted" : "rejected") << " and "
         << pair(lp.second) << " " << (lp.second_accepted ? "accepted" : "rejected")
         << "\n  witnesses: " << show(lp.first_word) << " vs "
         << show(lp.second_word) << "\n";
    }
  }
  os << "tail independent: " << (v.tail_independent ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace ddo
