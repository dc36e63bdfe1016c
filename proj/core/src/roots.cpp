#include "artin/roots.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "artin/center.hpp"
#include "artin/error.hpp"

namespace artin {

std::string_view to_string(RootDecision decision) {
  switch (decision) {
    case RootDecision::Yes: return "yes";
    case RootDecision::No: return "no";
    case RootDecision::UndecidedByCap: return "undecided-by-cap";
  }
  return "?";
}

std::string_view to_string(RootMethod method) {
  switch (method) {
    case RootMethod::Formula: return "formula";
    case RootMethod::Divisibility: return "divisibility";
    case RootMethod::SupportPrune: return "support-prune";
    case RootMethod::Search: return "search";
  }
  return "?";
}

int max_root_exponent(const FamilySpec& spec) {
  require_infinite_family(spec);
  const int n = spec.param;
  switch (spec.family) {
    case Family::A: return n + 1;
    case Family::B: return n;
    case Family::D: return n % 2 == 0 ? n - 1 : 2 * n - 2;
    case Family::I2: return n % 2 == 0 ? n / 2 : n;
    default: return 0;
  }
}

std::pair<Word, int> explicit_root(const FamilySpec& spec) {
  return {center_data(spec).Jword, max_root_exponent(spec)};
}

namespace {

class RootSearch {
 public:
  RootSearch(const ArtinMonoid& monoid, const GroupElement& target, int k, std::size_t length)
      : monoid_(monoid),
        target_(target),
        k_(k),
        length_(length),
        full_(all_generators(monoid.rank())) {}

  // Depth-first over prefixes in lexicographic order. A prefix is skipped
  // when an earlier (hence lexicographically smaller) word reached the same
  // element, so each visited word is the least representative of its class.
  std::optional<Word> pruned() {
    visited_.clear();
    Word prefix;
    return descend(prefix, GroupElement{});
  }

  // Every word of the candidate length, deduplicated by normal form.
  std::optional<Word> exhaustive() {
    const int n = monoid_.rank();
    Word word(length_, 1);
    std::unordered_set<GroupElement, GroupElementHash> seen;
    for (;;) {
      if (support(word) == full_) {
        GroupElement candidate = monoid_.element(word);
        if (seen.insert(candidate).second && is_root(candidate)) return word;
      }
      std::size_t pos = length_;
      while (pos > 0 && word[pos - 1] == n) word[--pos] = 1;
      if (pos == 0) return std::nullopt;
      ++word[pos - 1];
    }
  }

 private:
  bool is_root(const GroupElement& candidate) const {
    return monoid_.power(candidate, k_) == target_;
  }

  std::optional<Word> descend(Word& prefix, const GroupElement& element) {
    if (prefix.size() == length_) {
      if (support(prefix) == full_ && is_root(element)) return prefix;
      return std::nullopt;
    }
    const auto missing = static_cast<std::size_t>(std::popcount(full_ & ~support(prefix)));
    if (missing > length_ - prefix.size()) return std::nullopt;

    for (int g = 1; g <= monoid_.rank(); ++g) {
      GroupElement next = monoid_.multiply(element, GroupElement{0, {monoid_.coxeter().generator(g)}});
      if (!visited_.insert(next).second) continue;
      if (!monoid_.left_divides(next, target_)) continue;
      prefix.push_back(g);
      if (auto found = descend(prefix, next)) return found;
      prefix.pop_back();
    }
    return std::nullopt;
  }

  const ArtinMonoid& monoid_;
  const GroupElement& target_;
  int k_;
  std::size_t length_;
  GeneratorSet full_;
  std::unordered_set<GroupElement, GroupElementHash> visited_;
};

}  // namespace

RootAnswer has_kth_root(const FamilySpec& spec, int k, const RootOptions& options) {
  require_infinite_family(spec);
  if (k < 1) throw RangeError("root exponent must be positive, got " + std::to_string(k));

  CenterData data = center_data(spec);
  RootAnswer answer{spec, k, RootDecision::No, std::nullopt, RootMethod::Search};
  const std::size_t lambda = data.lambda_cG();

  if (k == 1) {
    answer.decision = RootDecision::Yes;
    answer.witness = data.cG;
    answer.method = RootMethod::Formula;
    return answer;
  }
  if (lambda % static_cast<std::size_t>(k) != 0) {
    answer.method = RootMethod::Divisibility;
    return answer;
  }
  const std::size_t length = lambda / static_cast<std::size_t>(k);
  if (length < static_cast<std::size_t>(data.rank)) {
    answer.method = RootMethod::SupportPrune;
    return answer;
  }

  ArtinMonoid monoid(spec);
  const GroupElement target = monoid.element(data.cG);

  if (options.formula_witnesses) {
    std::optional<Word> candidate;
    const int top = max_root_exponent(spec);
    if (top % k == 0) {
      candidate = power(data.Jword, top / k);
    } else if (data.cG_is_delta_squared && k == 2) {
      candidate = data.delta;
    }
    if (candidate) {
      if (monoid.element(power(*candidate, k)) != target) {
        throw Error("closed-form root of " + render(spec) + " failed verification");
      }
      answer.decision = RootDecision::Yes;
      answer.witness = std::move(candidate);
      answer.method = RootMethod::Formula;
      return answer;
    }
  }

  answer.method = RootMethod::Search;
  if (length > options.caps.search_length) {
    answer.decision = RootDecision::UndecidedByCap;
    return answer;
  }
  RootSearch search(monoid, target, k, length);
  std::optional<Word> witness = options.prune_to_divisors ? search.pruned() : search.exhaustive();
  if (witness) {
    answer.decision = RootDecision::Yes;
    answer.witness = std::move(witness);
  }
  return answer;
}

bool RootSpectrum::contains(int k) const {
  return std::binary_search(members.begin(), members.end(), k);
}

RootSpectrum root_spectrum(const FamilySpec& spec, std::optional<int> kmax,
                           const RootOptions& options) {
  RootSpectrum spectrum;
  spectrum.spec = spec;
  spectrum.search_bound = kmax.value_or(max_root_exponent(spec));
  for (int k = 1; k <= spectrum.search_bound; ++k) {
    RootAnswer answer = has_kth_root(spec, k, options);
    if (answer.decision == RootDecision::UndecidedByCap) {
      throw CapExceeded("root spectrum of " + render(spec) + ": k = " + std::to_string(k) +
                        " needs a search beyond length " +
                        std::to_string(options.caps.search_length));
    }
    if (answer.decision == RootDecision::Yes) spectrum.members.push_back(k);
  }
  return spectrum;
}

nlohmann::json to_json(const RootAnswer& answer) {
  nlohmann::json j{{"decision", to_string(answer.decision)},
                   {"method", to_string(answer.method)},
                   {"k", answer.k},
                   {"group", render(answer.spec)}};
  if (answer.witness) j["witness"] = render_word(*answer.witness);
  return j;
}

nlohmann::json to_json(const RootSpectrum& spectrum) {
  return nlohmann::json{{"group", render(spectrum.spec)},
                        {"members", spectrum.members},
                        {"max", spectrum.max()},
                        {"searchBound", spectrum.search_bound}};
}

}  // namespace artin
