#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "artin/coxeter.hpp"
#include "artin/roots.hpp"
#include "artin/sentence.hpp"

namespace artin {

enum class VerdictKind { Distinguished, SameSpec, Unknown };
enum class VerdictSide { Left, Right };
enum class VerdictBasis { Formula, Search };

std::string_view to_string(VerdictKind kind);
std::string_view to_string(VerdictSide side);
std::string_view to_string(VerdictBasis basis);

/// Outcome of comparing two groups through explicit sentences. A
/// Distinguished verdict names a sentence true on `holds_in` and false on the
/// other side. Unknown never claims the theories coincide.
struct EquivalenceVerdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::optional<Sentence> sentence;
  std::optional<VerdictSide> holds_in;
  VerdictBasis basis = VerdictBasis::Formula;
  /// Per-side invariant the verdict was computed from (maximal root exponent
  /// for Artin groups, maximal finite cyclic order for mapping class groups).
  std::array<long, 2> exponents{0, 0};
  std::array<std::string, 2> groups;
};

/// Reduction of Φ_k to a k-th root of c_G, printed by `distinguish --verbose`.
inline constexpr const char* kPhiReduction =
    "Phi_k holds iff every central element has a k-th root; the center is infinite "
    "cyclic generated by c_G, and if y^k = c_G then (y^m)^k = c_G^m for all integers m, "
    "so Phi_k holds iff c_G has a k-th root";

/// Φ_k in the Artin group of `spec`. Throws CapExceeded if undecided.
bool holds_phi(const FamilySpec& spec, int k, const RootOptions& options = {});

/// Separates two specs with a Φ sentence: by the maximal root exponents when
/// they differ (basis formula), otherwise by the first k ≤ the common
/// exponent where the root spectra disagree (basis search).
EquivalenceVerdict distinguish(const FamilySpec& left, const FamilySpec& right,
                               const RootOptions& options = {});

/// {kind, sentence?, sentenceAscii?, holdsIn?, basis, exponents, groups}
nlohmann::json to_json(const EquivalenceVerdict& verdict);

}  // namespace artin
