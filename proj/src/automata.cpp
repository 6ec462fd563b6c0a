#include "ddo/automata.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ddo {

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::star: return "star";
    case Mode::omega: return "omega";
    case Mode::infty: return "infty";
  }
  return "?";
}

Mode parse_mode(std::string_view s) {
  if (s == "star") return Mode::star;
  if (s == "omega") return Mode::omega;
  if (s == "infty") return Mode::infty;
  throw std::invalid_argument("unknown mode \"" + std::string(s)
                              + "\" (expected star, omega or infty)");
}

namespace {

void normalize(std::vector<std::size_t>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

void check_states(std::vector<std::size_t> const& xs, std::size_t n,
                  char const* what) {
  for (auto q : xs) {
    if (q >= n) {
      throw std::invalid_argument(std::string(what) + " references undeclared state "
                                  + std::to_string(q));
    }
  }
}

}  // namespace

ExtendedBuchiAutomaton::ExtendedBuchiAutomaton(
    Alphabet alphabet, std::size_t states, std::vector<std::size_t> initial,
    std::vector<Transition> transitions, std::vector<std::size_t> finite_final,
    std::vector<std::size_t> buechi_final, Mode mode)
    : alphabet_(std::move(alphabet)),
      states_(states),
      initial_(std::move(initial)),
      transitions_(std::move(transitions)),
      finite_final_(std::move(finite_final)),
      buechi_final_(std::move(buechi_final)),
      mode_(mode) {
  normalize(initial_);
  normalize(finite_final_);
  normalize(buechi_final_);
  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()),
                     transitions_.end());
  if (initial_.empty()) {
    throw std::invalid_argument("automaton needs at least one initial state");
  }
  check_states(initial_, states_, "initial set");
  check_states(finite_final_, states_, "finite_final set");
  check_states(buechi_final_, states_, "buechi_final set");
  succ_.assign(states_ * alphabet_.size(), {});
  for (auto const& t : transitions_) {
    if (t.src >= states_ || t.dst >= states_) {
      throw std::invalid_argument(
          "transition references undeclared state "
          + std::to_string(t.src >= states_ ? t.src : t.dst));
    }
    if (!alphabet_.contains(t.letter)) {
      throw std::invalid_argument(std::string("transition uses letter '")
                                  + t.letter + "' outside the alphabet");
    }
    succ_[t.src * alphabet_.size() + alphabet_.index(t.letter)].push_back(t.dst);
  }
  is_ff_.assign(states_, 0);
  is_bf_.assign(states_, 0);
  for (auto q : finite_final_) is_ff_[q] = 1;
  for (auto q : buechi_final_) is_bf_[q] = 1;
}

ExtendedBuchiAutomaton ExtendedBuchiAutomaton::restricted(Part part) const {
  auto ff = finite_final_;
  auto bf = buechi_final_;
  if (mode_ == Mode::omega) ff.clear();
  if (mode_ == Mode::star) bf.clear();
  return ExtendedBuchiAutomaton(alphabet_, states_, initial_, transitions_,
                                part == Part::finite ? ff : std::vector<std::size_t>{},
                                part == Part::infinite ? bf : std::vector<std::size_t>{},
                                part == Part::finite ? Mode::star : Mode::omega);
}

namespace {

using StateSet = std::vector<char>;

StateSet step(ExtendedBuchiAutomaton const& a, StateSet const& from, char c) {
  StateSet to(a.states(), 0);
  auto li = a.alphabet().index(c);
  for (std::size_t q = 0; q < a.states(); ++q) {
    if (from[q]) {
      for (auto r : a.successors(q, li)) to[r] = 1;
    }
  }
  return to;
}

StateSet run(ExtendedBuchiAutomaton const& a, Word const& w) {
  StateSet cur(a.states(), 0);
  for (auto q : a.initial()) cur[q] = 1;
  for (char c : w) cur = step(a, cur, c);
  return cur;
}

}  // namespace

bool accepts_finite(ExtendedBuchiAutomaton const& a, Word const& w) {
  if (a.mode() == Mode::omega) {
    throw std::logic_error("accepts_finite: automaton has mode omega");
  }
  a.alphabet().check_word(w);
  auto end = run(a, w);
  for (std::size_t q = 0; q < a.states(); ++q) {
    if (end[q] && a.is_finite_final(q)) return true;
  }
  return false;
}

bool accepts_up(ExtendedBuchiAutomaton const& a, UPWord const& w) {
  if (a.mode() == Mode::star) {
    throw std::logic_error("accepts_up: automaton has mode star");
  }
  a.alphabet().check_word(w.stem());
  a.alphabet().check_word(w.loop());
  auto const n = a.states();

  // One copy of the loop read from p: reach[p][q], and through[p][q] when
  // some such run visits a Büchi state after leaving p.
  std::vector<StateSet> reach(n, StateSet(n, 0)), through(n, StateSet(n, 0));
  for (std::size_t p = 0; p < n; ++p) {
    StateSet plain(n, 0), marked(n, 0);
    plain[p] = 1;
    for (char c : w.loop()) {
      auto np = step(a, plain, c);
      auto nm = step(a, marked, c);
      for (std::size_t q = 0; q < n; ++q) {
        if (np[q] && a.is_buechi_final(q)) {
          nm[q] = 1;
          np[q] = 0;
        } else if (nm[q]) {
          np[q] = 0;
        }
        if (nm[q] && a.is_buechi_final(q)) nm[q] = 1;
      }
      plain = std::move(np);
      marked = std::move(nm);
    }
    for (std::size_t q = 0; q < n; ++q) {
      reach[p][q] = plain[q] || marked[q];
      through[p][q] = marked[q];
    }
  }

  // closure[p][q]: q reachable from p by zero or more loop copies
  auto closure = reach;
  for (std::size_t p = 0; p < n; ++p) closure[p][p] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!closure[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (closure[k][j]) closure[i][j] = 1;
      }
    }
  }

  auto after_stem = run(a, w.stem());
  for (std::size_t q = 0; q < n; ++q) {
    bool reachable = false;
    for (std::size_t r = 0; r < n && !reachable; ++r) {
      reachable = after_stem[r] && closure[r][q];
    }
    if (!reachable) continue;
    // a cycle q ->* p1 =>(Büchi) p2 ->* q
    for (std::size_t p1 = 0; p1 < n; ++p1) {
      if (!closure[q][p1]) continue;
      for (std::size_t p2 = 0; p2 < n; ++p2) {
        if (through[p1][p2] && closure[p2][q]) return true;
      }
    }
  }
  return false;
}

bool member(ExtendedBuchiAutomaton const& a, Word const& w) {
  return a.mode() != Mode::omega && accepts_finite(a, w);
}

bool member(ExtendedBuchiAutomaton const& a, UPWord const& w) {
  return a.mode() != Mode::star && accepts_up(a, w);
}

namespace {

using nlohmann::json;

std::vector<std::size_t> state_list(json const& j, std::string const& where,
                                    std::size_t n) {
  if (!j.is_array()) throw ParseError(where, "expected an array of states");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto const& v = j[i];
    auto at = where + "/" + std::to_string(i);
    if (!v.is_number_unsigned()) throw ParseError(at, "expected a state index");
    auto q = v.get<std::size_t>();
    if (q >= n) throw ParseError(at, "undeclared state " + std::to_string(q));
    out.push_back(q);
  }
  return out;
}

}  // namespace

ExtendedBuchiAutomaton parse_automaton(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (json::parse_error const& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object()) throw ParseError("", "expected a JSON object");
  static constexpr std::string_view known[] = {
      "alphabet", "states", "initial", "transitions", "finite_final",
      "buechi_final", "mode"};
  for (auto const& [key, value] : doc.items()) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw ParseError("/" + key, "unknown field \"" + key + "\"");
    }
  }
  for (auto const* key : {"alphabet", "states", "initial", "transitions", "mode"}) {
    if (!doc.contains(key)) {
      throw ParseError("", std::string("missing field \"") + key + "\"");
    }
  }

  auto const& ja = doc["alphabet"];
  if (!ja.is_array() || ja.empty()) {
    throw ParseError("/alphabet", "alphabet must be a nonempty array");
  }
  std::string letters;
  for (std::size_t i = 0; i < ja.size(); ++i) {
    if (!ja[i].is_string() || ja[i].get<std::string>().size() != 1) {
      throw ParseError("/alphabet/" + std::to_string(i),
                       "alphabet symbols must be one-character strings");
    }
    letters += ja[i].get<std::string>();
  }
  std::optional<Alphabet> alphabet;
  try {
    alphabet.emplace(letters);
  } catch (std::invalid_argument const& e) {
    throw ParseError("/alphabet", e.what());
  }

  if (!doc["states"].is_number_unsigned()) {
    throw ParseError("/states", "expected a nonnegative state count");
  }
  auto n = doc["states"].get<std::size_t>();
  auto initial = state_list(doc["initial"], "/initial", n);
  if (initial.empty()) throw ParseError("/initial", "initial set is empty");

  auto const& jt = doc["transitions"];
  if (!jt.is_array()) throw ParseError("/transitions", "expected an array");
  std::vector<Transition> transitions;
  for (std::size_t i = 0; i < jt.size(); ++i) {
    auto at = "/transitions/" + std::to_string(i);
    auto const& t = jt[i];
    if (!t.is_array() || t.size() != 3) {
      throw ParseError(at, "expected [src, letter, dst]");
    }
    for (std::size_t k : {0u, 2u}) {
      if (!t[k].is_number_unsigned()) {
        throw ParseError(at + "/" + std::to_string(k), "expected a state index");
      }
      auto q = t[k].get<std::size_t>();
      if (q >= n) {
        throw ParseError(at + "/" + std::to_string(k),
                         "undeclared state " + std::to_string(q));
      }
    }
    if (!t[1].is_string() || t[1].get<std::string>().size() != 1
        || !alphabet->contains(t[1].get<std::string>()[0])) {
      throw ParseError(at + "/1", "expected a letter of the alphabet");
    }
    transitions.push_back({t[0].get<std::size_t>(), t[1].get<std::string>()[0],
                           t[2].get<std::size_t>()});
  }
  std::vector<std::size_t> ff, bf;
  if (doc.contains("finite_final")) ff = state_list(doc["finite_final"], "/finite_final", n);
  if (doc.contains("buechi_final")) bf = state_list(doc["buechi_final"], "/buechi_final", n);
  if (!doc["mode"].is_string()) throw ParseError("/mode", "expected a string");
  Mode mode;
  try {
    mode = parse_mode(doc["mode"].get<std::string>());
  } catch (std::invalid_argument const& e) {
    throw ParseError("/mode", e.what());
  }
  return ExtendedBuchiAutomaton(*alphabet, n, std::move(initial),
                                std::move(transitions), std::move(ff),
                                std::move(bf), mode);
}

std::string serialize(ExtendedBuchiAutomaton const& a) {
  json letters = json::array();
  for (char c : a.alphabet().letters()) letters.push_back(std::string(1, c));
  json transitions = json::array();
  for (auto const& t : a.transitions()) {
    transitions.push_back(json::array({t.src, std::string(1, t.letter), t.dst}));
  }
  std::ostringstream os;
  os << "{\n"
     << "  \"alphabet\": " << letters.dump() << ",\n"
     << "  \"states\": " << a.states() << ",\n"
     << "  \"initial\": " << json(a.initial()).dump() << ",\n"
     << "  \"transitions\": " << transitions.dump() << ",\n"
     << "  \"finite_final\": " << json(a.finite_final()).dump() << ",\n"
     << "  \"buechi_final\": " << json(a.buechi_final()).dump() << ",\n"
     << "  \"mode\": \"" << to_string(a.mode()) << "\"\n"
     << "}\n";
  return os.str();
}

ExtendedBuchiAutomaton load_automaton(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_automaton(buf.str());
  } catch (ParseError const& e) {
    throw ParseError(path + (e.where().empty() ? "" : ":" + e.where()),
                     e.message());
  } catch (std::invalid_argument const& e) {
    throw ParseError(path, e.what());
  }
}

}  // namespace ddo
