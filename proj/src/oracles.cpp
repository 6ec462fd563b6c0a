#include "ddo/oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <set>
#include <tuple>
#include <stdexcept>

namespace ddo {

std::vector<Word> enumerate_words(Grid const& g) {
  std::vector<Word> out{""};
  std::size_t layer_start = 0;
  for (std::size_t len = 1; len <= g.max_word_len; ++len) {
    std::size_t layer_end = out.size();
    for (std::size_t i = layer_start; i < layer_end; ++i) {
      for (char c : g.alphabet.letters()) out.push_back(out[i] + c);
    }
    layer_start = layer_end;
  }
  return out;
}

std::vector<UPWord> enumerate_up(Grid const& g) {
  Grid stems = g;
  stems.max_word_len = std::max(g.max_stem, g.max_loop);
  auto words = enumerate_words(stems);
  std::set<UPWord> seen;
  for (auto const& u : words) {
    if (u.size() > g.max_stem) continue;
    for (auto const& v : words) {
      if (v.empty() || v.size() > g.max_loop) continue;
      seen.insert(up_canonicalize(UPWord(u, v)));
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

// Every placement of blocks[i..] at or after pos.
bool place_all(std::vector<Word> const& b, std::size_t i, std::size_t pos,
               std::string const& s, bool exact_end) {
  if (i == b.size()) return !exact_end || pos == s.size();
  if (b[i].size() > s.size()) return false;
  std::size_t first = i == 0 ? 0 : pos;
  std::size_t last = i == 0 ? 0 : s.size() - b[i].size();
  for (std::size_t c = first; c <= last; ++c) {
    if (c + b[i].size() <= s.size() && s.compare(c, b[i].size(), b[i]) == 0
        && place_all(b, i + 1, c + b[i].size(), s, exact_end)) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool brute_member_blocks(std::vector<Word> const& blocks, Tail tail, Word const& w) {
  if (tail == Tail::omega_only) return false;
  return place_all(blocks, 0, 0, w, tail == Tail::finite);
}

bool brute_member_blocks(std::vector<Word> const& blocks, Tail tail, UPWord const& w) {
  if (tail == Tail::finite) return false;
  std::size_t deg = 0;
  for (auto const& b : blocks) deg += b.size();
  auto at = [&](std::size_t copies) {
    return place_all(blocks, 0, 0,
                     up_prefix(w, w.stem().size() + copies * w.loop().size()),
                     false);
  };
  std::size_t copies = deg + 1;
  bool prev = at(copies);
  for (;;) {
    copies *= 2;
    bool cur = at(copies);
    if (cur == prev) return cur;
    prev = cur;
  }
}

bool brute_member_monomial(Monomial const& m, Word const& w) {
  return brute_member_blocks(m.blocks(), m.tail(), w);
}

bool brute_member_monomial(Monomial const& m, UPWord const& w) {
  return brute_member_blocks(m.blocks(), m.tail(), w);
}

namespace {

using K = Formula::Kind;
using Env = std::vector<std::pair<std::string, std::size_t>>;

std::size_t find_var(Env const& env, std::string const& x) {
  for (auto it = env.rbegin(); it != env.rend(); ++it) {
    if (it->first == x) return it->second;
  }
  throw std::logic_error("unbound variable " + x);
}

bool window_eval(Formula const& f, Env& env, UPWord const& w, std::size_t size) {
  switch (f.kind) {
    case K::top: return true;
    case K::label: return w.at(find_var(env, f.x) - 1) == f.letter;
    case K::min: return find_var(env, f.x) == 1;
    case K::max: return false;
    case K::less: return find_var(env, f.x) < find_var(env, f.y);
    case K::succ: return find_var(env, f.x) == find_var(env, f.y) + 1;
    case K::neg: return !window_eval(*f.kids[0], env, w, size);
    case K::conj:
      for (auto const& k : f.kids) {
        if (!window_eval(*k, env, w, size)) return false;
      }
      return true;
    case K::disj:
      for (auto const& k : f.kids) {
        if (window_eval(*k, env, w, size)) return true;
      }
      return false;
    case K::exists:
    case K::forall: {
      bool want = f.kind == K::exists;
      for (std::size_t p = 1; p <= size; ++p) {
        env.emplace_back(f.x, p);
        bool r = window_eval(*f.kids[0], env, w, size);
        env.pop_back();
        if (r == want) return want;
      }
      return !want;
    }
  }
  return false;
}

}  // namespace

bool brute_eval_up(Sentence const& s, UPWord const& w) {
  auto at = [&](std::size_t copies) {
    Env env;
    return window_eval(s.formula(), env, w,
                       w.stem().size() + copies * w.loop().size());
  };
  std::size_t copies = 2 * s.depth() + 2;
  bool prev = at(copies);
  for (;;) {
    copies *= 2;
    bool cur = at(copies);
    if (cur == prev) return cur;
    prev = cur;
  }
}

bool brute_accepts_finite(ExtendedBuchiAutomaton const& a, Word const& w) {
  if (a.mode() == Mode::omega) return false;
  // depth-first over (state, consumed letters)
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::function<bool(std::size_t, std::size_t)> run = [&](std::size_t q, std::size_t i) {
    if (!seen.insert({q, i}).second) return false;
    if (i == w.size()) return a.is_finite_final(q);
    for (auto const& t : a.transitions()) {
      if (t.src == q && t.letter == w[i] && run(t.dst, i + 1)) return true;
    }
    return false;
  };
  for (auto q : a.initial()) {
    if (run(q, 0)) return true;
  }
  return false;
}

bool brute_accepts_up(ExtendedBuchiAutomaton const& a, UPWord const& w) {
  if (a.mode() == Mode::star) return false;
  std::size_t const len = w.stem().size() + w.loop().size();
  std::size_t const n = a.states();
  auto next_phase = [&](std::size_t i) { return i + 1 < len ? i + 1 : w.stem().size(); };
  auto node = [&](std::size_t q, std::size_t i) { return q * len + i; };

  // Edges of the lasso product; `hot` marks edges entering a Büchi state.
  std::vector<std::vector<std::pair<std::size_t, bool>>> adj(n * len);
  for (auto const& t : a.transitions()) {
    for (std::size_t i = 0; i < len; ++i) {
      if (w.at(i) == t.letter) {
        adj[node(t.src, i)].push_back({node(t.dst, next_phase(i)), a.is_buechi_final(t.dst)});
      }
    }
  }
  auto reach_from = [&](std::vector<std::size_t> const& starts) {
    std::vector<char> seen(n * len, 0);
    std::deque<std::size_t> todo(starts.begin(), starts.end());
    for (auto s : starts) seen[s] = 1;
    while (!todo.empty()) {
      auto x = todo.front();
      todo.pop_front();
      for (auto [y, hot] : adj[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          todo.push_back(y);
        }
      }
    }
    return seen;
  };
  std::vector<std::size_t> starts;
  for (auto q : a.initial()) starts.push_back(node(q, 0));
  auto reachable = reach_from(starts);
  for (std::size_t x = 0; x < n * len; ++x) {
    if (!reachable[x]) continue;
    for (auto [y, hot] : adj[x]) {
      if (hot && reach_from({y})[x]) return true;
    }
  }
  return false;
}

Language brute_language(ExtendedBuchiAutomaton a) {
  auto shared = std::make_shared<ExtendedBuchiAutomaton const>(std::move(a));
  return Language{[shared](Word const& w) { return brute_accepts_finite(*shared, w); },
                  [shared](UPWord const& w) { return brute_accepts_up(*shared, w); }};
}

std::optional<Context> brute_syntactic_separate(Language const& lang,
                                                Word const& p, Word const& q,
                                                Grid const& g) {
  Grid bounds = g;
  bounds.max_word_len = std::max(g.max_stem, g.max_loop);
  auto words = enumerate_words(bounds);
  std::size_t const max_total = 2 * g.max_stem + g.max_loop;
  for (std::size_t total = 0; total <= max_total; ++total) {
    for (auto const& u : words) {
      if (u.size() > g.max_stem) continue;
      for (auto const& v : words) {
        if (v.size() > g.max_stem || u.size() + v.size() > total) continue;
        for (auto const& w : words) {
          if (w.size() > g.max_loop || u.size() + v.size() + w.size() != total) continue;
          bool a = w.empty() ? lang.finite(u + p + v)
                             : lang.infinite(UPWord(u + p + v, w));
          bool b = w.empty() ? lang.finite(u + q + v)
                             : lang.infinite(UPWord(u + q + v, w));
          if (a != b) return Context{u, v, w, ContextVariant::linear};
        }
      }
    }
    for (auto const& u : words) {
      if (u.size() > g.max_stem) continue;
      for (auto const& v : words) {
        if (v.size() > g.max_stem || u.size() + v.size() != total) continue;
        if (lang.infinite(UPWord(u, p + v)) != lang.infinite(UPWord(u, q + v))) {
          return Context{u, v, "", ContextVariant::cyclic};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

constexpr std::size_t saturated = std::numeric_limits<std::size_t>::max();

std::size_t sat_mul(std::size_t a, std::size_t b) {
  return a != 0 && b > saturated / a ? saturated : a * b;
}

std::size_t pow2(std::size_t e) {
  return e >= 63 ? saturated : std::size_t{1} << e;
}

struct Layer {
  std::size_t states;
  Mode mode;
  std::size_t count;
};

std::vector<Layer> layers(AutomatonGrid const& g) {
  std::vector<Layer> out;
  auto k = g.alphabet.size();
  for (std::size_t n = 1; n <= g.max_states; ++n) {
    for (auto mode : g.modes) {
      std::size_t c = sat_mul(pow2(n) - 1, pow2(n * k * n));
      if (mode != Mode::omega) c = sat_mul(c, pow2(n));
      if (mode != Mode::star) c = sat_mul(c, pow2(n));
      out.push_back({n, mode, c});
    }
  }
  return out;
}

ExtendedBuchiAutomaton decode(AutomatonGrid const& g, Layer const& l,
                              std::size_t index) {
  auto n = l.states;
  auto k = g.alphabet.size();
  auto take = [&](std::size_t radix) {
    auto digit = index % radix;
    index /= radix;
    return digit;
  };
  auto bits = [&](std::size_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < n; ++q) {
      if (mask >> q & 1) out.push_back(q);
    }
    return out;
  };
  auto initial = bits(take(pow2(n) - 1) + 1);
  std::vector<std::size_t> ff, bf;
  if (l.mode != Mode::omega) ff = bits(take(pow2(n)));
  if (l.mode != Mode::star) bf = bits(take(pow2(n)));
  std::vector<Transition> ts;
  for (std::size_t bit = 0; bit < n * k * n; ++bit) {
    if (take(2)) {
      ts.push_back({bit / (k * n), g.alphabet[bit / n % k], bit % n});
    }
  }
  return ExtendedBuchiAutomaton(g.alphabet, n, initial, ts, ff, bf, l.mode);
}

}  // namespace

std::size_t automaton_count(AutomatonGrid const& g) {
  std::size_t total = 0;
  for (auto const& l : layers(g)) {
    total = total > saturated - l.count ? saturated : total + l.count;
  }
  return total;
}

std::vector<ExtendedBuchiAutomaton> enumerate_automata(AutomatonGrid const& g) {
  auto ls = layers(g);
  auto total = automaton_count(g);
  std::vector<std::size_t> picks;
  if (g.sample == 0 || g.sample >= total) {
    if (total > 10'000'000) {
      throw std::length_error("automaton grid has " + std::to_string(total)
                              + " members; sample it instead");
    }
    picks.resize(total);
    for (std::size_t i = 0; i < total; ++i) picks[i] = i;
  } else {
    std::mt19937_64 rng(g.seed);
    std::uniform_int_distribution<std::size_t> dist(0, total - 1);
    std::set<std::size_t> chosen;
    while (chosen.size() < g.sample) chosen.insert(dist(rng));
    picks.assign(chosen.begin(), chosen.end());
  }
  std::vector<ExtendedBuchiAutomaton> out;
  out.reserve(picks.size());
  for (auto idx : picks) {
    for (auto const& l : ls) {
      if (idx < l.count) {
        out.push_back(decode(g, l, idx));
        break;
      }
      idx -= l.count;
    }
  }
  return out;
}

ExtendedBuchiAutomaton duplicate_states(ExtendedBuchiAutomaton const& a) {
  auto n = a.states();
  std::vector<Transition> ts;
  for (auto const& t : a.transitions()) {
    for (std::size_t from : {t.src, t.src + n}) {
      ts.push_back({from, t.letter, t.dst});
      ts.push_back({from, t.letter, t.dst + n});
    }
  }
  auto twin = [&](std::vector<std::size_t> xs) {
    auto m = xs.size();
    for (std::size_t i = 0; i < m; ++i) xs.push_back(xs[i] + n);
    return xs;
  };
  return ExtendedBuchiAutomaton(a.alphabet(), 2 * n, a.initial(), ts,
                                twin(a.finite_final()), twin(a.buechi_final()),
                                a.mode());
}

namespace {

bool same_verdicts(Verdict const& x, Verdict const& y) {
  auto key = [](Verdict const& v) {
    return std::tuple{v.thm5.result, v.thm5.reason, v.thm14.result, v.thm14.reason,
                      v.thm15.result, v.thm15.reason, v.thm17.result, v.thm17.reason,
                      v.tail_independent, v.synt_size};
  };
  return key(x) == key(y);
}

}  // namespace

std::vector<std::string> pipeline_invariant_violations(ExtendedBuchiAutomaton const& a) {
  std::vector<std::string> out;
  auto v = decide_all(a);
  if (auto c = verify_verdict(v, Language::of(a)); !c.ok) {
    out.push_back("certificate rejected by the automaton: " + c.failure);
  }
  if (auto c = verify_verdict(v, brute_language(a)); !c.ok) {
    out.push_back("certificate rejected by the brute-force language: " + c.failure);
  }
  for (auto const& [key, an] : v.analyses) {
    if (check_r_closed(an.hom).holds && !check_r_plus_closed(an.hom).holds) {
      out.push_back(key + ": R-closed but not R+-closed");
    }
  }
  if (v.thm5.result == Tri::yes && v.thm15.result != Tri::yes) {
    out.push_back("thm5 yes but thm15 not yes");
  }
  if (v.thm5.result == Tri::yes && !v.tail_independent) {
    out.push_back("thm5 yes but not tail independent");
  }
  if (!same_verdicts(v, decide_all(duplicate_states(a)))) {
    out.push_back("verdicts change under state duplication");
  }
  return out;
}

std::vector<Sentence> sample_sentences(Alphabet const& sigma,
                                       std::size_t max_depth,
                                       std::size_t count, std::uint64_t seed) {
  if (max_depth == 0) throw std::invalid_argument("max_depth must be positive");
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  auto atom = [&](std::vector<std::string> const& vars) -> FormulaPtr {
    auto x = vars[pick(vars.size())];
    auto y = vars[pick(vars.size())];
    switch (pick(6)) {
      case 0:
      case 1: return fo::label(x, sigma[pick(sigma.size())]);
      case 2: return fo::min(x);
      case 3: return fo::max(x);
      case 4: return fo::less(x, y);
      default: return fo::succ(x, y);
    }
  };
  auto block = [&]() -> FormulaPtr {
    std::size_t k = 1 + pick(max_depth);
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < k; ++i) vars.push_back("x" + std::to_string(i + 1));
    std::vector<FormulaPtr> lits;
    std::size_t n = 1 + pick(2 * k + 1);
    for (std::size_t i = 0; i < n; ++i) {
      auto a = atom(vars);
      lits.push_back(pick(4) == 0 ? fo::neg(a) : a);
    }
    FormulaPtr body = pick(5) == 0 ? fo::disj(std::move(lits)) : fo::conj(std::move(lits));
    bool universal = pick(4) == 0;
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
      body = universal ? fo::forall(*it, body) : fo::exists(*it, body);
    }
    return body;
  };
  std::function<FormulaPtr(int)> comb = [&](int level) -> FormulaPtr {
    if (level == 0 || pick(2) == 0) return block();
    switch (pick(3)) {
      case 0: return fo::neg(comb(level - 1));
      case 1: return fo::conj({comb(level - 1), comb(level - 1)});
      default: return fo::disj({comb(level - 1), comb(level - 1)});
    }
  };
  std::vector<Sentence> out;
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(comb(2));
  return out;
}

}  // namespace ddo
