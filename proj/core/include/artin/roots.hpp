#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "artin/caps.hpp"
#include "artin/coxeter.hpp"
#include "artin/monoid.hpp"

namespace artin {

enum class RootDecision { Yes, No, UndecidedByCap };
enum class RootMethod { Formula, Divisibility, SupportPrune, Search };

std::string_view to_string(RootDecision decision);
std::string_view to_string(RootMethod method);

/// Answer to "does the center generator c_G have a k-th root?".
struct RootAnswer {
  FamilySpec spec;
  int k = 1;
  RootDecision decision = RootDecision::No;
  /// Present exactly when decision is Yes; witness^k equals c_G.
  std::optional<Word> witness;
  RootMethod method = RootMethod::Search;
};

struct RootOptions {
  Caps caps;
  /// Try the closed-form witnesses (powers of J, and Δ when c_G = Δ²) before
  /// searching. Disable to force every positive answer through the search.
  bool formula_witnesses = true;
  /// Restrict the search to left divisors of c_G (every root is one).
  /// Disable to enumerate all full-support classes of the candidate length.
  bool prune_to_divisors = true;
};

/// Largest k with a k-th root of c_G: A_n n+1, B_n n, D_n n-1 (n even) or
/// 2n-2 (n odd), I2(n) n/2 (n even) or n (n odd).
int max_root_exponent(const FamilySpec& spec);

/// (J, max_root_exponent) with J^exponent = c_G.
std::pair<Word, int> explicit_root(const FamilySpec& spec);

/// Complete decision procedure for k-th roots of c_G:
///   k = 1 always; k must divide λ(c_G); a root has length L = λ(c_G)/k and
///   contains every generator, so L < rank rules it out; otherwise the
///   full-support positive classes of length L are searched in lexicographic
///   order of their least representative. UndecidedByCap when L exceeds
///   caps.search_length and no closed-form witness applies.
RootAnswer has_kth_root(const FamilySpec& spec, int k, const RootOptions& options = {});

struct RootSpectrum {
  FamilySpec spec;
  std::vector<int> members;
  /// Largest k examined.
  int search_bound = 0;

  int max() const { return members.empty() ? 0 : members.back(); }
  bool contains(int k) const;
};

/// {k <= kmax : c_G has a k-th root}; kmax defaults to max_root_exponent.
/// Throws CapExceeded if some k is undecided.
RootSpectrum root_spectrum(const FamilySpec& spec, std::optional<int> kmax = std::nullopt,
                           const RootOptions& options = {});

/// {decision, witness?, method, k, group}
nlohmann::json to_json(const RootAnswer& answer);
/// {group, members, max, searchBound}
nlohmann::json to_json(const RootSpectrum& spectrum);

}  // namespace artin
