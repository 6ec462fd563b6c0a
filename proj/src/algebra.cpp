#include "ddo/algebra.hpp"

#include <numeric>
#include <stdexcept>

#include "ddo/kernels.hpp"

namespace ddo {

namespace {

// Index m and period p of the cyclic semigroup generated by x:
// x^m = x^(m+p) with m, p minimal.
std::pair<unsigned, unsigned> index_and_period(FiniteMonoid const& m,
                                               Element x) {
  std::vector<int> seen(m.size(), -1);
  Element cur = x;
  for (unsigned k = 1;; ++k) {
    if (seen[cur] >= 0) {
      auto first = static_cast<unsigned>(seen[cur]);
      return {first, k - first};
    }
    seen[cur] = static_cast<int>(k);
    cur = m.mul(cur, x);
  }
}

unsigned exponent_of(FiniteMonoid const& m, std::vector<Element> const& xs) {
  unsigned lcm = 1;
  unsigned max_index = 1;
  for (auto x : xs) {
    auto [index, period] = index_and_period(m, x);
    lcm = std::lcm(lcm, period);
    max_index = std::max(max_index, index);
  }
  // smallest multiple of lcm that is >= max_index
  return ((max_index + lcm - 1) / lcm) * lcm;
}

}  // namespace

FiniteMonoid::FiniteMonoid(std::size_t size, Element identity,
                           std::vector<Element> table,
                           std::vector<std::string> labels)
    : size_(size),
      identity_(identity),
      table_(std::move(table)),
      labels_(std::move(labels)) {
  validate(true);
}

FiniteMonoid::FiniteMonoid(Trusted, std::size_t size, Element identity,
                           std::vector<Element> table,
                           std::vector<std::string> labels)
    : size_(size),
      identity_(identity),
      table_(std::move(table)),
      labels_(std::move(labels)) {
  validate(false);
}

void FiniteMonoid::validate(bool check_associativity) {
  if (size_ == 0) {
    throw std::invalid_argument("monoid must have at least one element");
  }
  if (table_.size() != size_ * size_) {
    throw std::invalid_argument("multiplication table must have size*size = "
                                + std::to_string(size_ * size_) + " entries, got "
                                + std::to_string(table_.size()));
  }
  if (identity_ >= size_) {
    throw std::invalid_argument("identity index out of range");
  }
  if (!labels_.empty() && labels_.size() != size_) {
    throw std::invalid_argument("labels must have one entry per element");
  }
  for (auto v : table_) {
    if (v >= size_) {
      throw std::invalid_argument("table entry " + std::to_string(v)
                                  + " out of range");
    }
  }
  for (Element x = 0; x < size_; ++x) {
    if (mul(identity_, x) != x || mul(x, identity_) != x) {
      throw std::invalid_argument("element " + std::to_string(identity_)
                                  + " is not a two-sided identity (fails on "
                                  + std::to_string(x) + ")");
    }
  }
  for (Element a = 0; a < size_ && check_associativity; ++a) {
    for (Element b = 0; b < size_; ++b) {
      Element ab = mul(a, b);
      for (Element c = 0; c < size_; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) {
          throw std::invalid_argument(
              "table is not associative: (" + std::to_string(a) + "*"
              + std::to_string(b) + ")*" + std::to_string(c));
        }
      }
    }
  }
  idem_.resize(size_);
  for (Element x = 0; x < size_; ++x) {
    Element cur = x;
    while (!is_idempotent(cur)) {
      cur = mul(cur, x);
    }
    idem_[x] = cur;
  }
}

std::string FiniteMonoid::label(Element x) const {
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

std::vector<Element> FiniteMonoid::idempotents() const {
  std::vector<Element> out;
  for (Element x = 0; x < size_; ++x) {
    if (is_idempotent(x)) {
      out.push_back(x);
    }
  }
  return out;
}

nlohmann::json FiniteMonoid::to_json() const {
  nlohmann::json j;
  j["size"] = size_;
  j["identity"] = identity_;
  j["table"] = table_;
  if (!labels_.empty()) {
    j["labels"] = labels_;
  }
  return j;
}

FiniteMonoid FiniteMonoid::from_json(nlohmann::json const& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("monoid: expected a JSON object");
  }
  for (auto const& [key, value] : j.items()) {
    if (key != "size" && key != "identity" && key != "table"
        && key != "labels") {
      throw std::invalid_argument("monoid: unknown field \"" + key + "\"");
    }
  }
  try {
    auto size = j.at("size").get<std::size_t>();
    auto identity = j.at("identity").get<Element>();
    auto table = j.at("table").get<std::vector<Element>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = j.at("labels").get<std::vector<std::string>>();
    }
    return FiniteMonoid(size, identity, std::move(table), std::move(labels));
  } catch (nlohmann::json::exception const& e) {
    throw std::invalid_argument(std::string("monoid: ") + e.what());
  }
}

unsigned exponent(FiniteMonoid const& m) {
  std::vector<Element> all(m.size());
  std::iota(all.begin(), all.end(), Element{0});
  return exponent_of(m, all);
}

SubSemigroup::SubSemigroup(FiniteMonoid const& parent,
                           std::vector<Element> elements)
    : parent_(&parent), elements_(std::move(elements)),
      member_(parent.size(), 0) {
  if (elements_.empty()) {
    throw std::invalid_argument("subsemigroup must be nonempty");
  }
  for (auto x : elements_) {
    if (x >= parent.size()) {
      throw std::invalid_argument("subsemigroup element out of range");
    }
    if (member_[x]) {
      throw std::invalid_argument("duplicate subsemigroup element");
    }
    member_[x] = 1;
  }
  for (auto a : elements_) {
    for (auto b : elements_) {
      if (!member_[parent.mul(a, b)]) {
        throw std::invalid_argument("subset is not closed under multiplication");
      }
    }
  }
}

SubSemigroup SubSemigroup::whole(FiniteMonoid const& parent) {
  std::vector<Element> all(parent.size());
  std::iota(all.begin(), all.end(), Element{0});
  return SubSemigroup(parent, std::move(all));
}

SubSemigroup SubSemigroup::without_identity(FiniteMonoid const& parent) {
  std::vector<Element> rest;
  for (Element x = 0; x < parent.size(); ++x) {
    if (x != parent.identity()) {
      rest.push_back(x);
    }
  }
  return SubSemigroup(parent, std::move(rest));
}

std::vector<Element> SubSemigroup::idempotents() const {
  std::vector<Element> out;
  for (auto x : elements_) {
    if (parent_->is_idempotent(x)) {
      out.push_back(x);
    }
  }
  return out;
}

unsigned exponent(SubSemigroup const& s) {
  return exponent_of(s.parent(), s.elements());
}

namespace {

std::vector<std::uint32_t> classes_from_preorder(std::vector<char> const& leq,
                                                 std::size_t n,
                                                 std::vector<Element> const& xs) {
  std::vector<std::uint32_t> cls(n, UINT32_MAX);
  std::uint32_t next = 0;
  for (auto x : xs) {
    if (cls[x] != UINT32_MAX) {
      continue;
    }
    cls[x] = next;
    for (auto y : xs) {
      if (leq[x * n + y] && leq[y * n + x]) {
        cls[y] = next;
      }
    }
    ++next;
  }
  return cls;
}

GreenData green_over(FiniteMonoid const& m, std::vector<Element> const& xs,
                     std::vector<Element> const& ones) {
  auto n = m.size();
  GreenData g;
  g.n = n;
  g.leq_r_table.assign(n * n, 0);
  g.leq_l_table.assign(n * n, 0);
  for (auto y : xs) {
    for (auto z : ones) {
      g.leq_r_table[m.mul(y, z) * n + y] = 1;
      g.leq_l_table[m.mul(z, y) * n + y] = 1;
    }
  }
  g.r_class = classes_from_preorder(g.leq_r_table, n, xs);
  g.l_class = classes_from_preorder(g.leq_l_table, n, xs);
  return g;
}

}  // namespace

GreenData green(FiniteMonoid const& m) {
  auto whole = SubSemigroup::whole(m);
  return green_over(m, whole.elements(), whole.elements());
}

GreenData green(SubSemigroup const& s) {
  auto ones = s.elements();
  if (!s.contains(s.parent().identity())) {
    ones.push_back(s.parent().identity());
  }
  return green_over(s.parent(), s.elements(), ones);
}

std::vector<LinkedPair> linked_pairs(FiniteMonoid const& m) {
  std::vector<LinkedPair> out;
  for (Element s = 0; s < m.size(); ++s) {
    for (Element e = 0; e < m.size(); ++e) {
      if (is_linked_pair(m, s, e)) {
        out.push_back({s, e});
      }
    }
  }
  return out;
}

B1Result is_b1(SubSemigroup const& s) {
  B1Result r;
  r.witness = kernels::find_b1_violation(s);
  r.holds = !r.witness.has_value();
  return r;
}

bool is_aperiodic(SubSemigroup const& s) {
  auto const& m = s.parent();
  for (auto x : s.elements()) {
    // x^n = x^(n+1) for some n iff the idempotent power absorbs x
    Element e = m.idempotent_power(x);
    if (m.mul(e, x) != e) {
      return false;
    }
  }
  return true;
}

B1Sides b1_sides(SubSemigroup const& s, B1Witness const& w) {
  auto const& m = s.parent();
  for (auto v : {w.e, w.f, w.s, w.t, w.x, w.y}) {
    if (v >= m.size() || !s.contains(v)) {
      throw std::invalid_argument("B1 argument " + std::to_string(v)
                                  + " is not in the semigroup");
    }
  }
  if (!m.is_idempotent(w.e) || !m.is_idempotent(w.f)) {
    throw std::invalid_argument("B1 arguments e and f must be idempotent");
  }
  Element p = m.idempotent_power(m.mul(w.e, w.x, w.f, w.y));
  Element q = m.idempotent_power(m.mul(w.t, w.e, w.s, w.f));
  return {m.mul(p, m.mul(w.e, w.x, w.f), q), m.mul(p, m.mul(w.e, w.s, w.f), q)};
}

bool b1_check_equation(SubSemigroup const& s, B1Witness const& w) {
  auto sides = b1_sides(s, w);
  return sides.lhs == sides.rhs;
}

}  // namespace ddo
