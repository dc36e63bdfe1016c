#include "artin/mcg.hpp"

#include <algorithm>
#include <string>

#include "artin/error.hpp"

namespace artin {

Genus make_genus(int g) {
  if (g < 2) throw RangeError("genus must be at least 2, got " + std::to_string(g));
  return Genus{g};
}

long max_cyclic_order(Genus genus) {
  if (genus.g < 2) throw RangeError("genus must be at least 2, got " + std::to_string(genus.g));
  return 4L * genus.g + 2;
}

EquivalenceVerdict distinguish_mcg(Genus left, Genus right) {
  EquivalenceVerdict verdict;
  verdict.basis = VerdictBasis::Formula;
  verdict.exponents = {max_cyclic_order(left), max_cyclic_order(right)};
  verdict.groups = {"Mod(S_" + std::to_string(left.g) + ")", "Mod(S_" + std::to_string(right.g) + ")"};
  if (left == right) {
    verdict.kind = VerdictKind::SameSpec;
    return verdict;
  }
  verdict.kind = VerdictKind::Distinguished;
  verdict.sentence = psi(static_cast<int>(std::max(verdict.exponents[0], verdict.exponents[1])));
  verdict.holds_in = left.g > right.g ? VerdictSide::Left : VerdictSide::Right;
  return verdict;
}

}  // namespace artin
