#pragma once

// Finite monoids given by multiplication tables, and the semigroup-theoretic
// machinery built on them: idempotent powers, Green's R and L preorders,
// linked pairs, aperiodicity and the B1 identity
//
//   (exfy)^n exf (tesf)^n = (exfy)^n esf (tesf)^n   (e, f idempotent).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace ddo {

using Element = std::uint32_t;

class FiniteMonoid {
 public:
  /// `table` is row-major, size*size entries. Validates ranges, the
  /// identity and associativity; throws std::invalid_argument.
  FiniteMonoid(std::size_t size, Element identity, std::vector<Element> table,
               std::vector<std::string> labels = {});

  /// Tag for tables that are associative by construction (composition of
  /// relations, quotients); skips the cubic associativity scan.
  struct Trusted {};
  FiniteMonoid(Trusted, std::size_t size, Element identity,
               std::vector<Element> table, std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return size_; }
  Element identity() const noexcept { return identity_; }
  Element mul(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * size_ + b];
  }
  template <typename... Rest>
  Element mul(Element a, Element b, Rest... rest) const noexcept {
    return mul(mul(a, b), rest...);
  }
  std::vector<Element> const& table() const noexcept { return table_; }
  std::vector<std::string> const& labels() const noexcept { return labels_; }
  /// labels()[x] if labels were given, otherwise the index.
  std::string label(Element x) const;

  bool is_idempotent(Element x) const noexcept { return mul(x, x) == x; }
  /// The unique idempotent among the powers x, x^2, x^3, ...
  Element idempotent_power(Element x) const noexcept {
    return idem_[x];
  }
  std::vector<Element> idempotents() const;

  nlohmann::json to_json() const;
  /// Reads { "size", "identity", "table", optional "labels" }; throws
  /// std::invalid_argument on malformed input.
  static FiniteMonoid from_json(nlohmann::json const& j);

  bool operator==(FiniteMonoid const& other) const {
    return size_ == other.size_ && identity_ == other.identity_
           && table_ == other.table_;
  }

 private:
  void validate(bool check_associativity);

  std::size_t size_;
  Element identity_;
  std::vector<Element> table_;
  std::vector<std::string> labels_;
  std::vector<Element> idem_;
};

inline Element idempotent_power(FiniteMonoid const& m, Element x) {
  return m.idempotent_power(x);
}

/// Smallest n >= 1 such that x^n is idempotent for every element x.
unsigned exponent(FiniteMonoid const& m);

/// A nonempty subset of a monoid closed under multiplication.
class SubSemigroup {
 public:
  /// Throws std::invalid_argument if empty, out of range or not closed.
  SubSemigroup(FiniteMonoid const& parent, std::vector<Element> elements);

  /// The whole monoid viewed as a semigroup.
  static SubSemigroup whole(FiniteMonoid const& parent);
  /// All elements except the identity; the image of nonempty words under
  /// a homomorphism that maps only the empty word to 1.
  static SubSemigroup without_identity(FiniteMonoid const& parent);

  FiniteMonoid const& parent() const noexcept { return *parent_; }
  std::vector<Element> const& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Element x) const noexcept { return member_[x] != 0; }
  std::vector<Element> idempotents() const;

 private:
  FiniteMonoid const* parent_;
  std::vector<Element> elements_;
  std::vector<char> member_;
};

unsigned exponent(SubSemigroup const& s);

/// Green's R and L preorders. Indexed by parent-monoid elements; entries
/// are meaningful for members of the semigroup the data was computed for.
struct GreenData {
  std::size_t n = 0;
  std::vector<char> leq_r_table;  // [x*n+y]: x <=_R y, i.e. x in yS^1
  std::vector<char> leq_l_table;  // [x*n+y]: x <=_L y, i.e. x in S^1y
  std::vector<std::uint32_t> r_class;
  std::vector<std::uint32_t> l_class;

  bool leq_r(Element x, Element y) const { return leq_r_table[x * n + y]; }
  bool leq_l(Element x, Element y) const { return leq_l_table[x * n + y]; }
  bool r_equiv(Element x, Element y) const { return r_class[x] == r_class[y]; }
  bool l_equiv(Element x, Element y) const { return l_class[x] == l_class[y]; }
  bool lt_r(Element x, Element y) const {
    return leq_r(x, y) && !r_equiv(x, y);
  }
  bool lt_l(Element x, Element y) const {
    return leq_l(x, y) && !l_equiv(x, y);
  }
};

/// Green data of a monoid (S^1 = M).
GreenData green(FiniteMonoid const& m);
/// Green data of S with witnesses ranging over S ∪ {identity}.
GreenData green(SubSemigroup const& s);

struct LinkedPair {
  Element s;
  Element e;
  auto operator<=>(LinkedPair const&) const = default;
};

inline bool is_linked_pair(FiniteMonoid const& m, Element s, Element e) {
  return m.is_idempotent(e) && m.mul(s, e) == s;
}

/// All (s, e) with e idempotent and se = s, ordered by (s, e).
std::vector<LinkedPair> linked_pairs(FiniteMonoid const& m);

/// An assignment violating the B1 identity.
struct B1Witness {
  Element e, f, s, t, x, y;
  bool operator==(B1Witness const&) const = default;
};

struct B1Result {
  bool holds = true;
  std::optional<B1Witness> witness;
};

/// Exhaustive B1 membership test. On failure the witness is the first
/// violating assignment in lexicographic (e, f, x, y, s, t) order, with
/// elements compared by their position in s.elements().
B1Result is_b1(SubSemigroup const& s);

bool is_aperiodic(SubSemigroup const& s);

/// Both sides of the B1 identity for one assignment.
struct B1Sides {
  Element lhs;
  Element rhs;
};
/// Throws std::invalid_argument unless e and f are idempotents of s and
/// the remaining arguments lie in s.
B1Sides b1_sides(SubSemigroup const& s, B1Witness const& w);
/// True iff the identity holds for this assignment.
bool b1_check_equation(SubSemigroup const& s, B1Witness const& w);

}  // namespace ddo
