#pragma once

// First-order formulas over words with the predicates λ(x) = a, min, max,
// < and +1, and their evaluation on finite and ultimately periodic words.
// Positions are numbered from 1.

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ddo/words.hpp"

namespace ddo {

enum class Pred { less, succ, min, max };
std::string_view to_string(Pred p);

struct Formula;
using FormulaPtr = std::shared_ptr<Formula const>;

struct Formula {
  enum class Kind { top, label, min, max, less, succ, conj, disj, neg, exists, forall };
  Kind kind;
  std::string x;  // variable of atoms and quantifiers
  std::string y;  // second variable of less and succ
  char letter = 0;
  std::vector<FormulaPtr> kids;
};

/// Smart constructors. succ(x, y) means x = y + 1.
namespace fo {
FormulaPtr top();
FormulaPtr label(std::string x, char a);
FormulaPtr min(std::string x);
FormulaPtr max(std::string x);
FormulaPtr less(std::string x, std::string y);
FormulaPtr succ(std::string x, std::string y);
FormulaPtr conj(std::vector<FormulaPtr> fs);
FormulaPtr disj(std::vector<FormulaPtr> fs);
FormulaPtr neg(FormulaPtr f);
FormulaPtr exists(std::string x, FormulaPtr f);
FormulaPtr forall(std::string x, FormulaPtr f);
}  // namespace fo

/// S-expression form, e.g. (exists x (and (label x a) (min x))).
std::string to_string(Formula const& f);
/// Throws std::invalid_argument with the offending offset.
FormulaPtr parse_formula(std::string_view text);

/// A formula without free variables.
class Sentence {
 public:
  /// Throws std::invalid_argument naming a free variable.
  explicit Sentence(FormulaPtr f);

  Formula const& formula() const noexcept { return *f_; }
  FormulaPtr const& ptr() const noexcept { return f_; }
  std::set<Pred> const& signature() const noexcept { return signature_; }
  std::size_t depth() const noexcept { return depth_; }

 private:
  FormulaPtr f_;
  std::set<Pred> signature_;
  std::size_t depth_ = 0;
};

Sentence parse_sentence(std::string_view text);

enum class Fragment { sigma1, bsigma1, other };
std::string_view to_string(Fragment f);

struct Classification {
  Fragment fragment;
  std::set<Pred> signature;
};

/// sigma1: existential prefix over a quantifier-free body. bsigma1: Boolean
/// combination of sigma1 sentences and universal prefixes over
/// quantifier-free bodies.
Classification classify(Sentence const& s);

bool eval_finite(Sentence const& s, Word const& w);

/// Exact for sigma1 and bsigma1 sentences; throws std::invalid_argument
/// otherwise. An existential block with k variables is searched over the
/// first |u| + (k+1)(k+|v|+1) positions. Shrinking by |v| every gap longer
/// than |v| + 1 that ends inside the loop part preserves labels, order,
/// successors and min, and leaves all positions below |u| + k(|v|+1).
bool eval_up(Sentence const& s, UPWord const& w);

}  // namespace ddo
