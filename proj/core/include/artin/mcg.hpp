#pragma once

#include "artin/theory.hpp"

namespace artin {

/// Genus of a closed orientable surface; only g >= 2 is meaningful here.
struct Genus {
  int g = 2;

  friend bool operator==(const Genus&, const Genus&) = default;
};

/// Throws RangeError for g < 2.
Genus make_genus(int g);

/// Largest order of a finite cyclic subgroup of Mod(S_g): 4g + 2.
long max_cyclic_order(Genus genus);

/// Ψ_{4·max(g,h)+2} holds in the larger genus only. Same genus gives SameSpec.
EquivalenceVerdict distinguish_mcg(Genus left, Genus right);

}  // namespace artin
