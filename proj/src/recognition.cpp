#include "ddo/recognition.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ddo {

Element RecognizingHom::image(std::string_view w) const {
  alphabet.check_word(w);
  Element x = monoid.identity();
  for (char c : w) {
    x = monoid.mul(x, generators[alphabet.index(c)]);
  }
  return x;
}

namespace {

constexpr std::size_t max_profile_states = 64;
constexpr std::size_t max_profile_elements = 4096;

// Two boolean state relations: r[p] holds every q reachable by the word,
// b[p] those reachable by a run that visits a Büchi state after leaving p.
struct Profile {
  std::vector<std::uint64_t> r;
  std::vector<std::uint64_t> b;
  auto operator<=>(Profile const&) const = default;
};

Profile compose(Profile const& x, Profile const& y) {
  auto n = x.r.size();
  Profile z{std::vector<std::uint64_t>(n, 0), std::vector<std::uint64_t>(n, 0)};
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      auto bit = std::uint64_t{1} << q;
      if (x.r[p] & bit) {
        z.r[p] |= y.r[q];
        z.b[p] |= y.b[q];
      }
      if (x.b[p] & bit) {
        z.b[p] |= y.r[q];
      }
    }
  }
  return z;
}

bool shortlex_less(Word const& a, Word const& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

RecognizingHom build_pure_profile_hom(ExtendedBuchiAutomaton const& a) {
  auto const n = a.states();
  if (n > max_profile_states) {
    throw std::length_error("profile construction supports at most "
                            + std::to_string(max_profile_states) + " states");
  }
  auto const& sigma = a.alphabet();

  std::vector<Profile> letters(sigma.size());
  for (std::size_t li = 0; li < sigma.size(); ++li) {
    letters[li].r.assign(n, 0);
    letters[li].b.assign(n, 0);
    for (std::size_t p = 0; p < n; ++p) {
      for (auto q : a.successors(p, li)) {
        letters[li].r[p] |= std::uint64_t{1} << q;
        if (a.is_buechi_final(q)) letters[li].b[p] |= std::uint64_t{1} << q;
      }
    }
  }

  // Element 0 is the fresh identity; profiles follow in breadth-first order.
  std::vector<Profile> elems(1);
  std::vector<Word> pre{""};
  std::map<Profile, Element> index;
  auto intern = [&](Profile p, Word w) {
    auto [it, fresh] = index.try_emplace(p, static_cast<Element>(elems.size()));
    if (fresh) {
      if (elems.size() >= max_profile_elements) {
        throw std::length_error("profile monoid exceeds "
                                + std::to_string(max_profile_elements)
                                + " elements");
      }
      elems.push_back(std::move(p));
      pre.push_back(std::move(w));
    }
    return it->second;
  };
  std::vector<Element> gens(sigma.size());
  for (std::size_t li = 0; li < sigma.size(); ++li) {
    gens[li] = intern(letters[li], Word(1, sigma[li]));
  }
  for (std::size_t i = 1; i < elems.size(); ++i) {
    for (std::size_t li = 0; li < sigma.size(); ++li) {
      intern(compose(elems[i], letters[li]), pre[i] + sigma[li]);
    }
  }

  auto const size = elems.size();
  std::vector<Element> table(size * size);
  for (Element x = 0; x < size; ++x) {
    for (Element y = 0; y < size; ++y) {
      table[x * size + y] = x == 0 ? y
                            : y == 0 ? x
                                     : index.at(compose(elems[x], elems[y]));
    }
  }
  std::vector<std::string> labels(pre);
  labels[0] = "1";
  FiniteMonoid m(FiniteMonoid::Trusted{}, size, 0, std::move(table),
                 std::move(labels));

  kernels::AcceptBits accept(size * size, 0);
  for (Element s = 0; s < size; ++s) {
    for (Element e = 0; e < size; ++e) {
      if (!is_linked_pair(m, s, e)) continue;
      accept[s * size + e] = e == 0 ? member(a, pre[s])
                                    : member(a, UPWord(pre[s], pre[e]));
    }
  }
  return RecognizingHom{std::move(m), sigma, std::move(gens), true,
                        std::move(pre), std::move(accept)};
}

bool up_member(RecognizingHom const& h, Word const& w) {
  return h.accepts(h.image(w), h.monoid.identity());
}

bool up_member(RecognizingHom const& h, UPWord const& w) {
  Element e = h.monoid.idempotent_power(h.image(w.loop()));
  return h.accepts(h.monoid.mul(h.image(w.stem()), e), e);
}

RecognizingHom syntactic_quotient(RecognizingHom const& h) {
  if (!h.epsilon_strict) {
    throw std::invalid_argument(
        "syntactic quotient needs a homomorphism where only the empty word "
        "maps to the identity");
  }
  auto const& m = h.monoid;
  auto cls = kernels::congruence_classes(m, h.accept);
  std::uint32_t k = *std::max_element(cls.begin(), cls.end()) + 1;

  // Representative of a class: member with the shortlex-least preimage.
  std::vector<Element> rep(k, UINT32_MAX);
  for (Element x = 0; x < m.size(); ++x) {
    auto& r = rep[cls[x]];
    if (r == UINT32_MAX || shortlex_less(h.preimage[x], h.preimage[r])) r = x;
  }
  std::vector<std::uint32_t> order(k);
  for (std::uint32_t c = 0; c < k; ++c) order[c] = c;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    return shortlex_less(h.preimage[rep[a]], h.preimage[rep[b]]);
  });
  std::vector<Element> renum(k);
  for (std::uint32_t i = 0; i < k; ++i) renum[order[i]] = i;
  auto q = [&](Element x) { return renum[cls[x]]; };

  std::vector<Element> table(std::size_t{k} * k);
  std::vector<Word> pre(k);
  std::vector<std::string> labels(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    Element ri = rep[order[i]];
    pre[i] = h.preimage[ri];
    labels[i] = pre[i].empty() ? "1" : pre[i];
    for (std::uint32_t j = 0; j < k; ++j) {
      table[i * k + j] = q(m.mul(ri, rep[order[j]]));
    }
  }
  FiniteMonoid qm(FiniteMonoid::Trusted{}, k, q(m.identity()),
                  std::move(table), std::move(labels));

  std::vector<Element> gens;
  for (auto g : h.generators) gens.push_back(q(g));

  kernels::AcceptBits accept(std::size_t{k} * k, 0);
  for (Element s = 0; s < k; ++s) {
    for (Element e = 0; e < k; ++e) {
      if (!is_linked_pair(qm, s, e)) continue;
      Element rs = rep[order[s]];
      Element re = rep[order[e]];
      if (e == qm.identity()) {
        accept[s * k + e] = h.accepts(rs, m.identity());
      } else {
        Element ie = m.idempotent_power(re);
        accept[s * k + e] = h.accepts(m.mul(rs, ie), ie);
      }
    }
  }
  return RecognizingHom{std::move(qm), h.alphabet, std::move(gens), true,
                        std::move(pre), std::move(accept)};
}

RecognizingHom restrict(RecognizingHom const& h, Part part) {
  if (!h.epsilon_strict) {
    throw std::invalid_argument(
        "restriction needs a homomorphism where only the empty word maps to "
        "the identity");
  }
  RecognizingHom out = h;
  auto n = h.monoid.size();
  for (Element s = 0; s < n; ++s) {
    for (Element e = 0; e < n; ++e) {
      bool keep = (e == h.monoid.identity()) == (part == Part::finite);
      if (!keep) out.accept[s * n + e] = 0;
    }
  }
  return out;
}

namespace {

using nlohmann::json;

}  // namespace

std::string serialize(RecognizingHom const& h, std::optional<Mode> mode) {
  auto const& m = h.monoid;
  json letters = json::array();
  for (char c : h.alphabet.letters()) letters.push_back(std::string(1, c));
  // ordered by alphabet position
  std::string gens = "{";
  for (std::size_t i = 0; i < h.generators.size(); ++i) {
    if (i) gens += ",";
    gens += json(std::string(1, h.alphabet[i])).dump() + ":"
            + std::to_string(h.generators[i]);
  }
  gens += "}";
  json accept = json::array();
  for (auto [s, e] : linked_pairs(m)) {
    if (h.accepts(s, e)) accept.push_back(json::array({s, e}));
  }
  std::string pre = "{";
  for (Element x = 0; x < m.size(); ++x) {
    if (x) pre += ",";
    pre += "\"" + std::to_string(x) + "\":" + json(h.preimage[x]).dump();
  }
  pre += "}";

  std::ostringstream os;
  os << "{\n"
     << "  \"size\": " << m.size() << ",\n"
     << "  \"identity\": " << m.identity() << ",\n"
     << "  \"table\": " << json(m.table()).dump() << ",\n";
  if (!m.labels().empty()) {
    os << "  \"labels\": " << json(m.labels()).dump() << ",\n";
  }
  os << "  \"alphabet\": " << letters.dump() << ",\n"
     << "  \"generators\": " << gens << ",\n"
     << "  \"epsilon_strict\": " << (h.epsilon_strict ? "true" : "false") << ",\n"
     << "  \"accept\": " << accept.dump() << ",\n"
     << "  \"preimage\": " << pre;
  if (mode) os << ",\n  \"mode\": \"" << to_string(*mode) << "\"";
  os << "\n}\n";
  return os.str();
}

HomDocument parse_hom(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (json::parse_error const& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object()) throw ParseError("", "expected a JSON object");
  static constexpr std::string_view known[] = {
      "size",           "identity", "table",    "labels", "alphabet",
      "generators",     "epsilon_strict", "accept", "preimage", "mode"};
  for (auto const& [key, value] : doc.items()) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw ParseError("/" + key, "unknown field \"" + key + "\"");
    }
  }
  for (auto const* key : {"size", "identity", "table", "alphabet", "generators",
                          "epsilon_strict", "accept", "preimage"}) {
    if (!doc.contains(key)) {
      throw ParseError("", std::string("missing field \"") + key + "\"");
    }
  }
  json mj = json::object();
  for (auto const* key : {"size", "identity", "table", "labels"}) {
    if (doc.contains(key)) mj[key] = doc[key];
  }
  std::optional<FiniteMonoid> m;
  try {
    m.emplace(FiniteMonoid::from_json(mj));
  } catch (std::invalid_argument const& e) {
    throw ParseError("/table", e.what());
  }
  auto const n = m->size();

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
  std::optional<Alphabet> sigma;
  try {
    sigma.emplace(letters);
  } catch (std::invalid_argument const& e) {
    throw ParseError("/alphabet", e.what());
  }

  auto const& jg = doc["generators"];
  if (!jg.is_object()) throw ParseError("/generators", "expected an object");
  std::vector<Element> gens(sigma->size(), UINT32_MAX);
  for (auto const& [key, value] : jg.items()) {
    if (key.size() != 1 || !sigma->contains(key[0])) {
      throw ParseError("/generators/" + key, "not a letter of the alphabet");
    }
    if (!value.is_number_unsigned() || value.get<std::size_t>() >= n) {
      throw ParseError("/generators/" + key, "expected an element index");
    }
    gens[sigma->index(key[0])] = value.get<Element>();
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i] == UINT32_MAX) {
      throw ParseError("/generators",
                       std::string("no image for letter '") + (*sigma)[i] + "'");
    }
  }
  if (!doc["epsilon_strict"].is_boolean()) {
    throw ParseError("/epsilon_strict", "expected a boolean");
  }
  bool strict = doc["epsilon_strict"].get<bool>();

  RecognizingHom h{*m, *sigma, gens, strict, std::vector<Word>(n),
                   kernels::AcceptBits(n * n, 0)};

  auto const& jp = doc["preimage"];
  if (!jp.is_object()) throw ParseError("/preimage", "expected an object");
  std::vector<char> seen(n, 0);
  for (auto const& [key, value] : jp.items()) {
    auto at = "/preimage/" + key;
    std::size_t x = n;
    try {
      std::size_t used = 0;
      x = std::stoul(key, &used);
      if (used != key.size()) x = n;
    } catch (std::exception const&) {
    }
    if (x >= n) throw ParseError(at, "not an element index");
    if (!value.is_string()) throw ParseError(at, "expected a word");
    auto w = value.get<std::string>();
    try {
      if (h.image(w) != x) {
        throw ParseError(at, "word \"" + w + "\" does not map to element " + key);
      }
    } catch (std::invalid_argument const& e) {
      throw ParseError(at, e.what());
    }
    h.preimage[x] = w;
    seen[x] = 1;
  }
  for (Element x = 0; x < n; ++x) {
    if (!seen[x]) {
      throw ParseError("/preimage", "no preimage for element " + std::to_string(x));
    }
  }
  if (strict) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i] == m->identity()) {
        throw ParseError("/generators", "epsilon_strict but a letter maps to the identity");
      }
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (x != m->identity() && y != m->identity()
            && m->mul(x, y) == m->identity()) {
          throw ParseError("/epsilon_strict",
                           "epsilon_strict but a nonempty word maps to the identity");
        }
      }
    }
  }

  auto const& jacc = doc["accept"];
  if (!jacc.is_array()) throw ParseError("/accept", "expected an array");
  for (std::size_t i = 0; i < jacc.size(); ++i) {
    auto at = "/accept/" + std::to_string(i);
    auto const& p = jacc[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned()
        || !p[1].is_number_unsigned()) {
      throw ParseError(at, "expected [s, e]");
    }
    auto s = p[0].get<std::size_t>();
    auto e = p[1].get<std::size_t>();
    if (s >= n || e >= n
        || !is_linked_pair(*m, static_cast<Element>(s), static_cast<Element>(e))) {
      throw ParseError(at, "not a linked pair");
    }
    h.accept[s * n + e] = 1;
  }

  HomDocument out{std::move(h), std::nullopt};
  if (doc.contains("mode")) {
    try {
      out.mode = parse_mode(doc["mode"].get<std::string>());
    } catch (std::exception const& e) {
      throw ParseError("/mode", e.what());
    }
  }
  return out;
}

HomDocument load_hom(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_hom(buf.str());
  } catch (ParseError const& e) {
    throw ParseError(path + (e.where().empty() ? "" : ":" + e.where()),
                     e.message());
  }
}

}  // namespace ddo
