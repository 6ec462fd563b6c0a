#include "ddo/logic.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace ddo {

std::string_view to_string(Pred p) {
  switch (p) {
    case Pred::less: return "<";
    case Pred::succ: return "+1";
    case Pred::min: return "min";
    case Pred::max: return "max";
  }
  return "?";
}

std::string_view to_string(Fragment f) {
  switch (f) {
    case Fragment::sigma1: return "Sigma1";
    case Fragment::bsigma1: return "BSigma1";
    case Fragment::other: return "Other";
  }
  return "?";
}

namespace fo {

namespace {
using K = Formula::Kind;
FormulaPtr make(K k, std::string x = {}, std::string y = {}, char a = 0,
                std::vector<FormulaPtr> kids = {}) {
  return std::make_shared<Formula const>(
      Formula{k, std::move(x), std::move(y), a, std::move(kids)});
}
}  // namespace

FormulaPtr top() { return make(K::top); }
FormulaPtr label(std::string x, char a) { return make(K::label, std::move(x), {}, a); }
FormulaPtr min(std::string x) { return make(K::min, std::move(x)); }
FormulaPtr max(std::string x) { return make(K::max, std::move(x)); }
FormulaPtr less(std::string x, std::string y) {
  return make(K::less, std::move(x), std::move(y));
}
FormulaPtr succ(std::string x, std::string y) {
  return make(K::succ, std::move(x), std::move(y));
}
FormulaPtr conj(std::vector<FormulaPtr> fs) {
  if (fs.empty()) return top();
  if (fs.size() == 1) return fs.front();
  return make(K::conj, {}, {}, 0, std::move(fs));
}
FormulaPtr disj(std::vector<FormulaPtr> fs) {
  if (fs.empty()) return neg(top());
  if (fs.size() == 1) return fs.front();
  return make(K::disj, {}, {}, 0, std::move(fs));
}
FormulaPtr neg(FormulaPtr f) { return make(K::neg, {}, {}, 0, {std::move(f)}); }
FormulaPtr exists(std::string x, FormulaPtr f) {
  return make(K::exists, std::move(x), {}, 0, {std::move(f)});
}
FormulaPtr forall(std::string x, FormulaPtr f) {
  return make(K::forall, std::move(x), {}, 0, {std::move(f)});
}

}  // namespace fo

using K = Formula::Kind;

std::string to_string(Formula const& f) {
  switch (f.kind) {
    case K::top: return "(true)";
    case K::label: return "(label " + f.x + " " + f.letter + ")";
    case K::min: return "(min " + f.x + ")";
    case K::max: return "(max " + f.x + ")";
    case K::less: return "(less " + f.x + " " + f.y + ")";
    case K::succ: return "(succ " + f.x + " " + f.y + ")";
    case K::neg: return "(not " + to_string(*f.kids[0]) + ")";
    case K::exists: return "(exists " + f.x + " " + to_string(*f.kids[0]) + ")";
    case K::forall: return "(forall " + f.x + " " + to_string(*f.kids[0]) + ")";
    case K::conj:
    case K::disj: {
      std::string out = f.kind == K::conj ? "(and" : "(or";
      for (auto const& k : f.kids) out += " " + to_string(*k);
      return out + ")";
    }
  }
  return "?";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view t) : t_(t) {}

  FormulaPtr formula() {
    expect('(');
    auto head = atom();
    FormulaPtr out;
    if (head == "true") {
      out = fo::top();
    } else if (head == "label") {
      auto x = atom();
      auto a = atom();
      if (a.size() != 1) fail("label expects a single letter");
      out = fo::label(x, a[0]);
    } else if (head == "min") {
      out = fo::min(atom());
    } else if (head == "max") {
      out = fo::max(atom());
    } else if (head == "less" || head == "succ") {
      auto x = atom();
      auto y = atom();
      out = head == "less" ? fo::less(x, y) : fo::succ(x, y);
    } else if (head == "not") {
      out = fo::neg(formula());
    } else if (head == "and" || head == "or") {
      std::vector<FormulaPtr> kids;
      while (peek() == '(') kids.push_back(formula());
      if (kids.empty()) fail(head + " needs at least one operand");
      out = std::make_shared<Formula const>(
          Formula{head == "and" ? K::conj : K::disj, {}, {}, 0, std::move(kids)});
    } else if (head == "exists" || head == "forall") {
      auto x = atom();
      auto body = formula();
      out = head == "exists" ? fo::exists(x, body) : fo::forall(x, body);
    } else {
      fail("unknown operator \"" + head + "\"");
    }
    expect(')');
    return out;
  }

  void finish() {
    skip();
    if (pos_ != t_.size()) fail("trailing input");
  }

 private:
  [[noreturn]] void fail(std::string const& what) {
    throw std::invalid_argument("formula, offset " + std::to_string(pos_) + ": "
                                + what);
  }
  void skip() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) {
      ++pos_;
    }
  }
  char peek() {
    skip();
    return pos_ < t_.size() ? t_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string atom() {
    skip();
    auto start = pos_;
    while (pos_ < t_.size() && t_[pos_] != '(' && t_[pos_] != ')'
           && !std::isspace(static_cast<unsigned char>(t_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected a name");
    return std::string(t_.substr(start, pos_ - start));
  }

  std::string_view t_;
  std::size_t pos_ = 0;
};

void free_vars(Formula const& f, std::vector<std::string>& bound,
               std::set<std::string>& out) {
  auto check = [&](std::string const& v) {
    if (std::find(bound.begin(), bound.end(), v) == bound.end()) out.insert(v);
  };
  switch (f.kind) {
    case K::top: return;
    case K::label:
    case K::min:
    case K::max: check(f.x); return;
    case K::less:
    case K::succ: check(f.x); check(f.y); return;
    case K::exists:
    case K::forall:
      bound.push_back(f.x);
      free_vars(*f.kids[0], bound, out);
      bound.pop_back();
      return;
    default:
      for (auto const& k : f.kids) free_vars(*k, bound, out);
  }
}

std::size_t depth_of(Formula const& f) {
  std::size_t d = 0;
  for (auto const& k : f.kids) d = std::max(d, depth_of(*k));
  return d + (f.kind == K::exists || f.kind == K::forall ? 1 : 0);
}

void collect_signature(Formula const& f, std::set<Pred>& out) {
  switch (f.kind) {
    case K::min: out.insert(Pred::min); break;
    case K::max: out.insert(Pred::max); break;
    case K::less: out.insert(Pred::less); break;
    case K::succ: out.insert(Pred::succ); break;
    default: break;
  }
  for (auto const& k : f.kids) collect_signature(*k, out);
}

bool quantifier_free(Formula const& f) {
  if (f.kind == K::exists || f.kind == K::forall) return false;
  return std::all_of(f.kids.begin(), f.kids.end(),
                     [](auto const& k) { return quantifier_free(*k); });
}

// Body below a maximal prefix of quantifiers of the given kind.
Formula const& strip(Formula const& f, K kind) {
  Formula const* cur = &f;
  while (cur->kind == kind) cur = cur->kids[0].get();
  return *cur;
}

bool is_sigma1(Formula const& f) { return quantifier_free(strip(f, K::exists)); }

bool is_bsigma1(Formula const& f) {
  if (is_sigma1(f)) return true;
  if (f.kind == K::forall) return quantifier_free(strip(f, K::forall));
  if (f.kind == K::neg || f.kind == K::conj || f.kind == K::disj) {
    return std::all_of(f.kids.begin(), f.kids.end(),
                       [](auto const& k) { return is_bsigma1(*k); });
  }
  return false;
}

// Variable environment: innermost binding last.
using Env = std::vector<std::pair<std::string, std::size_t>>;

std::size_t lookup(Env const& env, std::string const& x) {
  for (auto it = env.rbegin(); it != env.rend(); ++it) {
    if (it->first == x) return it->second;
  }
  throw std::logic_error("unbound variable " + x);
}

// Atom semantics shared by both evaluators; `at` reads 1-based positions.
template <typename At>
bool atom_holds(Formula const& f, Env const& env, At const& at,
                std::size_t last) {
  switch (f.kind) {
    case K::top: return true;
    case K::label: return at(lookup(env, f.x)) == f.letter;
    case K::min: return lookup(env, f.x) == 1;
    case K::max: return last != 0 && lookup(env, f.x) == last;
    case K::less: return lookup(env, f.x) < lookup(env, f.y);
    case K::succ: return lookup(env, f.x) == lookup(env, f.y) + 1;
    default: throw std::logic_error("not an atom");
  }
}

bool eval_rec(Formula const& f, Env& env, Word const& w) {
  auto at = [&](std::size_t i) { return w[i - 1]; };
  switch (f.kind) {
    case K::neg: return !eval_rec(*f.kids[0], env, w);
    case K::conj:
      for (auto const& k : f.kids) {
        if (!eval_rec(*k, env, w)) return false;
      }
      return true;
    case K::disj:
      for (auto const& k : f.kids) {
        if (eval_rec(*k, env, w)) return true;
      }
      return false;
    case K::exists:
    case K::forall: {
      bool want = f.kind == K::exists;
      for (std::size_t i = 1; i <= w.size(); ++i) {
        env.emplace_back(f.x, i);
        bool r = eval_rec(*f.kids[0], env, w);
        env.pop_back();
        if (r == want) return want;
      }
      return !want;
    }
    default: return atom_holds(f, env, at, w.size());
  }
}

enum class Tv { f, t, u };

// Three-valued evaluation of a quantifier-free body; unassigned variables
// (position 0) make atoms unknown.
template <typename At>
Tv eval3(Formula const& f, Env const& env, At const& at) {
  switch (f.kind) {
    case K::neg: {
      auto r = eval3(*f.kids[0], env, at);
      return r == Tv::u ? Tv::u : (r == Tv::t ? Tv::f : Tv::t);
    }
    case K::conj: {
      Tv acc = Tv::t;
      for (auto const& k : f.kids) {
        auto r = eval3(*k, env, at);
        if (r == Tv::f) return Tv::f;
        if (r == Tv::u) acc = Tv::u;
      }
      return acc;
    }
    case K::disj: {
      Tv acc = Tv::f;
      for (auto const& k : f.kids) {
        auto r = eval3(*k, env, at);
        if (r == Tv::t) return Tv::t;
        if (r == Tv::u) acc = Tv::u;
      }
      return acc;
    }
    case K::top: return Tv::t;
    case K::max: return Tv::f;
    default: {
      if (lookup(env, f.x) == 0) return Tv::u;
      if ((f.kind == K::less || f.kind == K::succ) && lookup(env, f.y) == 0) {
        return Tv::u;
      }
      return atom_holds(f, env, at, 0) ? Tv::t : Tv::f;
    }
  }
}

// Is there an assignment of `vars` within positions 1..bound satisfying
// the quantifier-free body?
bool search_block(std::vector<std::string> const& vars, Formula const& body,
                  UPWord const& w, std::size_t bound) {
  auto at = [&](std::size_t i) { return w.at(i - 1); };
  Env env;
  for (auto const& v : vars) env.emplace_back(v, 0);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    auto r = eval3(body, env, at);
    if (r != Tv::u) return r == Tv::t;
    if (i == vars.size()) return false;
    for (std::size_t p = 1; p <= bound; ++p) {
      env[i].second = p;
      if (go(i + 1)) return true;
    }
    env[i].second = 0;
    return false;
  };
  return go(0);
}

bool eval_up_rec(Formula const& f, UPWord const& w) {
  switch (f.kind) {
    case K::neg: return !eval_up_rec(*f.kids[0], w);
    case K::conj:
      return std::all_of(f.kids.begin(), f.kids.end(),
                         [&](auto const& k) { return eval_up_rec(*k, w); });
    case K::disj:
      return std::any_of(f.kids.begin(), f.kids.end(),
                         [&](auto const& k) { return eval_up_rec(*k, w); });
    case K::exists:
    case K::forall: {
      std::vector<std::string> vars;
      Formula const* cur = &f;
      while (cur->kind == f.kind) {
        vars.push_back(cur->x);
        cur = cur->kids[0].get();
      }
      std::size_t k = vars.size();
      std::size_t bound = w.stem().size() + (k + 1) * (k + w.loop().size() + 1);
      if (f.kind == K::exists) return search_block(vars, *cur, w, bound);
      auto negated = fo::neg(std::shared_ptr<Formula const>(cur, [](auto*) {}));
      return !search_block(vars, *negated, w, bound);
    }
    default: {
      Env env;
      auto at = [&](std::size_t i) { return w.at(i - 1); };
      return eval3(f, env, at) == Tv::t;
    }
  }
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) {
  Parser p(text);
  auto f = p.formula();
  p.finish();
  return f;
}

Sentence::Sentence(FormulaPtr f) : f_(std::move(f)) {
  std::vector<std::string> bound;
  std::set<std::string> free;
  free_vars(*f_, bound, free);
  if (!free.empty()) {
    throw std::invalid_argument("free variable " + *free.begin()
                                + " in sentence");
  }
  collect_signature(*f_, signature_);
  depth_ = depth_of(*f_);
}

Sentence parse_sentence(std::string_view text) {
  return Sentence(parse_formula(text));
}

Classification classify(Sentence const& s) {
  Fragment fr = is_sigma1(s.formula())    ? Fragment::sigma1
                : is_bsigma1(s.formula()) ? Fragment::bsigma1
                                          : Fragment::other;
  return {fr, s.signature()};
}

bool eval_finite(Sentence const& s, Word const& w) {
  Env env;
  return eval_rec(s.formula(), env, w);
}

bool eval_up(Sentence const& s, UPWord const& w) {
  if (classify(s).fragment == Fragment::other) {
    throw std::invalid_argument("sentence is not in BSigma1: "
                                + to_string(s.formula()));
  }
  return eval_up_rec(s.formula(), w);
}

}  // namespace ddo
