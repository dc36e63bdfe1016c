#include "artin/theory.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "artin/error.hpp"

namespace artin {

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Distinguished: return "Distinguished";
    case VerdictKind::SameSpec: return "SameSpec";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view to_string(VerdictSide side) {
  return side == VerdictSide::Left ? "left" : "right";
}

std::string_view to_string(VerdictBasis basis) {
  return basis == VerdictBasis::Formula ? "formula" : "search";
}

bool holds_phi(const FamilySpec& spec, int k, const RootOptions& options) {
  RootAnswer answer = has_kth_root(spec, k, options);
  if (answer.decision == RootDecision::UndecidedByCap) {
    throw CapExceeded("Phi_" + std::to_string(k) + " on " + render(spec) +
                      " is undecided within the search cap");
  }
  return answer.decision == RootDecision::Yes;
}

EquivalenceVerdict distinguish(const FamilySpec& left, const FamilySpec& right,
                               const RootOptions& options) {
  EquivalenceVerdict verdict;
  verdict.groups = {render(left), render(right)};
  const int k_left = max_root_exponent(left);
  const int k_right = max_root_exponent(right);
  verdict.exponents = {k_left, k_right};

  if (left == right) {
    verdict.kind = VerdictKind::SameSpec;
    return verdict;
  }

  if (k_left != k_right) {
    const int k = std::max(k_left, k_right);
    verdict.kind = VerdictKind::Distinguished;
    verdict.sentence = phi(k);
    verdict.holds_in = k_left > k_right ? VerdictSide::Left : VerdictSide::Right;
    verdict.basis = VerdictBasis::Formula;
    return verdict;
  }

  verdict.basis = VerdictBasis::Search;
  bool capped = false;
  for (int k = 1; k <= k_left; ++k) {
    RootAnswer a = has_kth_root(left, k, options);
    RootAnswer b = has_kth_root(right, k, options);
    if (a.decision == RootDecision::UndecidedByCap || b.decision == RootDecision::UndecidedByCap) {
      capped = true;
      continue;
    }
    if (a.decision != b.decision) {
      verdict.kind = VerdictKind::Distinguished;
      verdict.sentence = phi(k);
      verdict.holds_in = a.decision == RootDecision::Yes ? VerdictSide::Left : VerdictSide::Right;
      return verdict;
    }
  }
  if (capped) {
    throw CapExceeded("cannot compare root spectra of " + verdict.groups[0] + " and " +
                      verdict.groups[1] + " within the search cap");
  }
  verdict.kind = VerdictKind::Unknown;
  return verdict;
}

nlohmann::json to_json(const EquivalenceVerdict& verdict) {
  nlohmann::json j{{"kind", to_string(verdict.kind)},
                   {"basis", to_string(verdict.basis)},
                   {"exponents", verdict.exponents},
                   {"groups", verdict.groups}};
  if (verdict.sentence) {
    j["sentence"] = render(*verdict.sentence, Notation::Unicode);
    j["sentenceAscii"] = render(*verdict.sentence, Notation::Ascii);
  }
  if (verdict.holds_in) j["holdsIn"] = to_string(*verdict.holds_in);
  return j;
}

}  // namespace artin
