#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "artin/coxeter.hpp"
#include "artin/monoid.hpp"

namespace artin {

/// Throws UnsupportedGroup unless `spec` is in one of A, B, D, I2.
void require_infinite_family(const FamilySpec& spec);

/// Concrete words for the bipartition products, Δ and the center generator.
struct CenterData {
  FamilySpec spec;
  int rank = 0;
  int h = 0;  ///< Coxeter number, derived as the order of the Coxeter element.
  Word J1word;
  Word J2word;
  Word Jword;
  Word delta;
  Word cG;
  /// True when the center is generated by Δ² (A_n, D_odd, I2(odd)).
  bool cG_is_delta_squared = false;

  std::size_t lambda_cG() const { return cG.size(); }
};

/// Δ from the bipartition: J^{h/2} for even h, J^{(h-1)/2}·J1 for odd h.
Word fundamental_element(const FamilySpec& spec);

/// Generator of the center and whether it is Δ² (rather than Δ).
std::pair<Word, bool> center_generator(const FamilySpec& spec);

CenterData center_data(const FamilySpec& spec);

/// True when x_i·w = w·x_i for every generator.
bool check_central(const ArtinMonoid& monoid, std::span<const int> word);

/// A_1 is the infinite cyclic group; its center is generated by Δ = x_1, yet
/// the tabulated word length 2 corresponds to Δ². Output for A_1 follows the
/// table and carries this note.
bool has_rank_one_caveat(const FamilySpec& spec);
inline constexpr const char* kRankOneCaveat =
    "A1 is infinite cyclic: its full center is generated by x1 = Delta; the "
    "tabulated generator Delta^2 (length 2) is kept for uniformity";

struct DeltaIdentityReport {
  FamilySpec spec;
  /// Δ·Δ equals J^h in the monoid.
  bool delta_squared_is_j_power = false;
  /// The center generator commutes with every generator.
  bool center_generator_central = false;
  /// Present only when the center generator is Δ: h is even and Δ = J^{h/2}.
  std::optional<bool> delta_is_j_half_power;

  bool passed() const {
    return delta_squared_is_j_power && center_generator_central &&
           delta_is_j_half_power.value_or(true);
  }
};

DeltaIdentityReport verify_delta_identities(const FamilySpec& spec);

}  // namespace artin
