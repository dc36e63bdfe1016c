#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace artin {

/// Irreducible finite-type families. The four infinite families carry a
/// parameter; the sporadic diagrams are supported for construction only.
enum class Family { A, B, D, I2, E6, E7, E8, F4, H3, H4 };

std::string_view family_name(Family family);

/// A named standard diagram: A_n, B_n, D_n (param = rank) or I2(m) (param =
/// edge label). Sporadic specs keep param = 0.
struct FamilySpec {
  Family family = Family::A;
  int param = 0;

  bool is_sporadic() const;
  int rank() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Largest rank supported anywhere in the library (generator sets are 64-bit
/// masks).
inline constexpr int kMaxRank = 64;

/// Bitmask of generator indices: bit (i-1) is set for generator i.
using GeneratorSet = std::uint64_t;

inline constexpr GeneratorSet generator_bit(int i) { return GeneratorSet{1} << (i - 1); }
inline constexpr GeneratorSet all_generators(int rank) {
  return rank >= 64 ? ~GeneratorSet{0} : (GeneratorSet{1} << rank) - 1;
}
std::vector<int> to_indices(GeneratorSet set);

/// Checked constructor. Throws RangeError when the parameter is outside
/// A >= 1, B >= 2, D >= 4, I2 >= 3 (or above kMaxRank).
FamilySpec make_spec(Family family, int param = 0);

/// Parses `A3`, `b 5`, ` I2(7) ` etc. Case-insensitive, surrounding
/// whitespace ignored. Throws ParseError on malformed text and RangeError when
/// the parameter is out of range.
FamilySpec parse_group_spec(std::string_view text);

/// Inverse of parse_group_spec for the infinite families; sporadics render as
/// their names (`E6`, `H4`, ...).
std::string render(const FamilySpec& spec);

/// Symmetric Coxeter matrix with 1-based accessors. Entries are stored
/// unchecked so that validate() can report what is wrong with them; kInfinity
/// stands for m = infinity.
class CoxeterMatrix {
 public:
  static constexpr int kInfinity = 0;

  CoxeterMatrix() = default;
  /// Rank-n matrix with every generator pair commuting (m_ij = 2).
  explicit CoxeterMatrix(int rank);
  /// Row-major entries, rank*rank of them.
  CoxeterMatrix(int rank, std::vector<int> entries);

  int rank() const { return rank_; }
  int operator()(int i, int j) const { return entries_[index(i, j)]; }
  /// Sets m_ij and m_ji.
  void set(int i, int j, int m);

  const std::vector<int>& entries() const { return entries_; }

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(rank_) +
           static_cast<std::size_t>(j - 1);
  }

  int rank_ = 0;
  std::vector<int> entries_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool connected = false;
  bool tree = false;
  /// False when some entry is infinity (the group cannot be of finite type).
  bool finite_entries = true;

  bool valid() const { return violations.empty(); }
  bool irreducible() const { return valid() && connected; }
};

/// Checks every Coxeter-matrix invariant and reports connectivity and
/// tree shape of the diagram graph (edges where m_ij >= 3 or infinity).
ValidationReport validate(const CoxeterMatrix& matrix);

/// Standard diagram for a spec. Numbering: A_n and B_n are paths 1..n with
/// B's label-4 edge between n-1 and n; D_n is the path 1..n-2 with n-1 and n
/// both attached to n-2; I2(m) has m_12 = m.
CoxeterMatrix build_diagram(const FamilySpec& spec);

/// Recognizes a matrix that equals build_diagram(spec) for one of the four
/// infinite families, under this library's numbering. No isomorphism search.
std::optional<FamilySpec> identify_family(const CoxeterMatrix& matrix);

/// Two-colouring of a tree diagram; generator 1 lands in J1. Both parts are
/// sorted ascending and pairwise commuting (m_ij = 2) within each part.
struct Bipartition {
  std::vector<int> J1;
  std::vector<int> J2;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Throws InvalidArgument for invalid, disconnected or non-tree diagrams.
Bipartition bipartition(const CoxeterMatrix& matrix);

}  // namespace artin
