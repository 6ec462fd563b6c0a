#pragma once

// Data-parallel kernels behind the decision procedure. Each kernel has an
// OpenMP implementation used by the library and a plain serial reference
// that follows the mathematical definition literally; tests check that the
// two agree and the benchmark compares them.

#include <cstdint>
#include <optional>
#include <vector>

#include "ddo/algebra.hpp"

namespace ddo::kernels {

/// First violation of the B1 identity in (e, f, x, y, s, t) order, or none.
std::optional<B1Witness> find_b1_violation(SubSemigroup const& s);
std::optional<B1Witness> find_b1_violation_serial(SubSemigroup const& s);

/// Accept table of a monoid: accept[s * n + e] for the linked pair (s, e).
using AcceptBits = std::vector<char>;

/// The syntactic congruence on M \ {1} induced by an accept table: p and q
/// are congruent iff for all u, v, w in M
///   Accept(u p v e, e) = Accept(u q v e, e)        with e = idem(w), and
///   Accept(u e', e')   = Accept(u e'', e'')        with e' = idem(pv),
///                                                       e'' = idem(qv).
/// Returns one class label per element; the identity gets a label of its
/// own. Labels are numbered by first occurrence in element order.
std::vector<std::uint32_t> congruence_classes(FiniteMonoid const& m,
                                              AcceptBits const& accept);
std::vector<std::uint32_t> congruence_classes_serial(FiniteMonoid const& m,
                                                     AcceptBits const& accept);

}  // namespace ddo::kernels
