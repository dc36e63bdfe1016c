#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "artin/caps.hpp"
#include "artin/coxeter.hpp"

namespace artin {

/// An element of the finite Coxeter group in its family model. The meaning
/// of `image` depends on the owning CoxeterGroup:
///   A_n   one-line notation of a permutation of {1..n+1};
///   B_n   signed permutation window w(1..n);
///   D_n   signed permutation window with an even number of negative entries;
///   I2(m) {sign, offset}: the affine map k -> sign*k + offset on Z/m.
/// Products compose as functions: (u*v)(k) = u(v(k)).
struct CoxElement {
  std::vector<int> image;

  friend bool operator==(const CoxElement&, const CoxElement&) = default;
  friend auto operator<=>(const CoxElement&, const CoxElement&) = default;
};

struct CoxElementHash {
  std::size_t operator()(const CoxElement& e) const noexcept;
};

enum class DescentSide { Left, Right };

/// Faithful model of the Coxeter group of one of the four infinite families,
/// with generators numbered as in build_diagram.
class CoxeterGroup {
 public:
  /// Throws UnsupportedGroup for sporadic specs.
  explicit CoxeterGroup(const FamilySpec& spec);
  /// Recognizes the matrix via identify_family; UnsupportedGroup otherwise.
  static CoxeterGroup from_matrix(const CoxeterMatrix& matrix);

  const FamilySpec& spec() const { return spec_; }
  const CoxeterMatrix& matrix() const { return matrix_; }
  int rank() const { return rank_; }

  CoxElement identity() const;
  const CoxElement& generator(int i) const { return generators_[static_cast<std::size_t>(i - 1)]; }
  CoxElement multiply(const CoxElement& a, const CoxElement& b) const;
  CoxElement inverse(const CoxElement& e) const;
  /// Image of a word in the generators (1-based letters).
  CoxElement product(std::span<const int> word) const;

  bool is_right_descent(const CoxElement& e, int i) const;
  bool is_left_descent(const CoxElement& e, int i) const;
  GeneratorSet descents(const CoxElement& e, DescentSide side) const;

  /// Coxeter length, computed by stripping left descents until the identity.
  int length(const CoxElement& e) const;
  /// Lexicographically least reduced word (smallest left descent first).
  std::vector<int> reduced_word(const CoxElement& e) const;

  const CoxElement& longest() const { return longest_; }
  int element_order(const CoxElement& e) const;

  /// Product of all generators in bipartition order (J1 then J2, ascending).
  CoxElement coxeter_element() const;
  /// Order of the Coxeter element.
  int coxeter_number() const;

 private:
  enum class Model { Permutation, Signed, Dihedral };

  bool right_descent_impl(const CoxElement& e, int i) const;
  int dihedral_length(const CoxElement& e) const;

  FamilySpec spec_;
  CoxeterMatrix matrix_;
  int rank_ = 0;
  Model model_ = Model::Permutation;
  std::vector<CoxElement> generators_;
  CoxElement longest_;
};

// Free-function forms bound to a diagram; each builds the model on demand.
CoxElement cox_product(const CoxeterMatrix& matrix, std::span<const int> word);
int cox_length(const CoxeterMatrix& matrix, const CoxElement& e);
std::vector<int> descents(const CoxeterMatrix& matrix, const CoxElement& e, DescentSide side);
int element_order(const CoxeterMatrix& matrix, const CoxElement& e);
int derive_coxeter_number(const CoxeterMatrix& matrix);

/// Breadth-first closure from the identity under right multiplication by
/// generators. Element 0 is the identity. Throws CapExceeded past `cap`.
std::vector<CoxElement> enumerate_elements(const CoxeterGroup& group, std::size_t cap);

/// Dense multiplication table of a finite group. Index 0 is the identity.
class GroupTable {
 public:
  static constexpr std::uint32_t kIdentity = 0;

  /// `products` is row-major: products[a*order + b] = a*b. Throws
  /// InvalidArgument on shape or range errors.
  GroupTable(std::size_t order, std::vector<std::uint32_t> products);

  std::size_t order() const { return order_; }
  std::uint32_t product(std::uint32_t a, std::uint32_t b) const {
    return products_[static_cast<std::size_t>(a) * order_ + b];
  }
  std::uint32_t inverse(std::uint32_t a) const { return inverses_[a]; }
  std::uint32_t power(std::uint32_t a, long exponent) const;
  const std::vector<std::uint32_t>& products() const { return products_; }

  /// Exhaustive check of identity, inverses and associativity (O(order^3)).
  bool satisfies_group_axioms() const;

  /// {"order": n, "products": [row-major indices]}
  nlohmann::json to_json() const;
  static GroupTable from_json(const nlohmann::json& j);

 private:
  std::size_t order_;
  std::vector<std::uint32_t> products_;
  std::vector<std::uint32_t> inverses_;
};

/// Multiplication table of the Coxeter group of `matrix`. Throws
/// UnsupportedGroup for diagrams without a model and CapExceeded when the
/// group has more than caps.table_elements elements.
GroupTable enumerate_group(const CoxeterMatrix& matrix, const Caps& caps = {});
GroupTable enumerate_group(const CoxeterGroup& group, const Caps& caps = {});

}  // namespace artin
