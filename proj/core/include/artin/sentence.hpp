#pragma once

#include <string>
#include <utility>
#include <vector>

#include "artin/caps.hpp"
#include "artin/coxgroup.hpp"

namespace artin {

enum class Quantifier { ForAll, Exists };
enum class Notation { Unicode, Ascii };

/// One factor of a group word: variable^exponent. `explicit_power` keeps the
/// exponent visible when rendering even if it is 1 (as in y¹).
struct Factor {
  char variable = 'x';
  int exponent = 1;
  bool explicit_power = false;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Product of factors; empty means the identity.
using Term = std::vector<Factor>;

/// Quantifier-free formula. Equal/NotEqual are atoms lhs = rhs (resp. its
/// negation written with ≠); Not, And and Or are the connectives.
struct Formula {
  enum class Kind { Equal, NotEqual, Not, And, Or };

  Kind kind = Kind::Equal;
  Term lhs;
  Term rhs;
  std::vector<Formula> children;

  static Formula equal(Term lhs, Term rhs);
  static Formula not_equal(Term lhs, Term rhs);
  static Formula negation(Formula inner);
  static Formula conjunction(std::vector<Formula> parts);
  static Formula disjunction(std::vector<Formula> parts);

  bool is_atom() const { return kind == Kind::Equal || kind == Kind::NotEqual; }

  friend bool operator==(const Formula&, const Formula&) = default;
};

/// Prenex sentence in the language of groups.
struct Sentence {
  std::vector<std::pair<Quantifier, char>> prefix;
  Formula matrix;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

/// Atom lhs = rhs rewritten as x1^e1 ⋯ xm^em = 1 with every e = ±1.
std::vector<std::pair<char, int>> atomic_word(const Formula& atom);

/// Prefix variables distinct, every matrix variable bound, connectives have
/// the right arity.
bool is_well_formed(const Sentence& sentence);

std::string render(const Sentence& sentence, Notation notation = Notation::Unicode);

/// ∀x.∃y.∀z.(¬(xz = zx) ∨ (x = yᵏ)): every central element has a k-th root.
Sentence phi(int k);
/// ∃x.((xⁿ = 1) ∧ (x¹ ≠ 1) ∧ … ∧ (xⁿ⁻¹ ≠ 1)): an element of order exactly n.
Sentence psi(int n);

/// Prefix is exactly ∀∃∀.
bool is_kahr(const Sentence& sentence);

/// Truth value by exhaustive expansion of the quantifiers over the table.
/// Throws CapExceeded when order^(#quantifiers) exceeds caps.assignments.
bool eval_on_finite_group(const Sentence& sentence, const GroupTable& table, const Caps& caps = {});

}  // namespace artin
