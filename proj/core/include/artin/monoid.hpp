#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "artin/caps.hpp"
#include "artin/coxgroup.hpp"

namespace artin {

/// Positive word: 1-based generator indices. The empty word is the identity.
using Word = std::vector<int>;

/// Parses whitespace-separated 1-based indices (`"1 2 1"`); the empty string
/// is the identity. Throws ParseError for non-numeric tokens and RangeError
/// for indices outside 1..rank.
Word parse_word(std::string_view text, int rank);
std::string render_word(std::span<const int> word);

/// Length homomorphism: every generator counts 1.
inline std::size_t lambda_length(std::span<const int> word) { return word.size(); }
GeneratorSet support(std::span<const int> word);
Word power(std::span<const int> word, int k);
Word concat(std::span<const int> a, std::span<const int> b);

/// Left-greedy form Δ^p · s_1 ⋯ s_r. Every factor is a simple element other
/// than 1 and Δ, and each adjacent pair is left-weighted.
struct NormalForm {
  long delta_power = 0;
  std::vector<CoxElement> factors;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Δ^z · s_1 ⋯ s_r with the same factor conditions; z may be negative. Equal
/// group elements have identical fields.
struct GroupElement {
  long delta_exponent = 0;
  std::vector<CoxElement> factors;

  bool is_identity() const { return delta_exponent == 0 && factors.empty(); }
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

/// Artin monoid and its group of fractions for one diagram. Simple elements
/// are Coxeter group elements of the underlying model.
class ArtinMonoid {
 public:
  explicit ArtinMonoid(const FamilySpec& spec);
  explicit ArtinMonoid(CoxeterGroup group);

  const CoxeterGroup& coxeter() const { return group_; }
  const FamilySpec& spec() const { return group_.spec(); }
  int rank() const { return group_.rank(); }

  /// Lexicographically least positive word for Δ.
  const Word& delta_word() const { return delta_word_; }
  /// σ with x_i·Δ = Δ·x_σ(i); entry i-1 holds σ(i).
  const std::vector<int>& tau() const { return tau_; }

  NormalForm normal_form(std::span<const int> word) const;
  bool equal_positive(std::span<const int> a, std::span<const int> b) const;
  /// Rewriting-closure oracle: breadth-first search over all words reachable
  /// from `a` by applying a defining relation at any position. Throws
  /// CapExceeded when the words are longer than `max_length`.
  bool equal_positive_bfs(std::span<const int> a, std::span<const int> b,
                          std::size_t max_length = Caps{}.bfs_length) const;

  /// Δ's word repeated p times followed by reduced words of the factors.
  Word to_word(const NormalForm& nf) const;
  /// `D^p | f1 ; f2 ; ...` with each factor as its reduced word.
  std::string render(const NormalForm& nf) const;
  std::string render(const GroupElement& g) const;
  /// Checks the factor conditions (no 1 or Δ factors, left-weighted pairs).
  bool is_left_weighted(std::span<const CoxElement> factors) const;

  GroupElement element(std::span<const int> word) const;
  GroupElement delta_power(long p) const { return GroupElement{p, {}}; }
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& g) const;
  GroupElement power(const GroupElement& g, long k) const;
  /// a ≼ b in the prefix order, i.e. a⁻¹b lies in the monoid.
  bool left_divides(const GroupElement& a, const GroupElement& b) const;

  /// Image of a simple element under σ^times (Δ-conjugation).
  CoxElement apply_tau(const CoxElement& s, long times = 1) const;

 private:
  /// Right-multiplies Δ^delta·factors by the simple element s and restores the
  /// normal-form conditions.
  void append_simple(long& delta, std::vector<CoxElement>& factors, const CoxElement& s) const;
  std::vector<int> solve_tau() const;

  CoxeterGroup group_;
  CoxElement identity_;
  Word delta_word_;
  std::vector<int> tau_;
};

}  // namespace artin
