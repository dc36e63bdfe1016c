#include "artin/monoid.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <deque>
#include <string>
#include <unordered_set>

#include "artin/error.hpp"

namespace artin {

Word parse_word(std::string_view text, int rank) {
  Word word;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string_view token = text.substr(start, pos - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.front() == '-') {
      throw ParseError("bad generator index '" + std::string(token) + "' in word");
    }
    if (value < 1 || value > rank) {
      throw RangeError("generator index " + std::to_string(value) + " out of range 1.." +
                       std::to_string(rank));
    }
    word.push_back(value);
  }
  return word;
}

std::string render_word(std::span<const int> word) {
  std::string out;
  for (int letter : word) {
    if (!out.empty()) out += ' ';
    out += std::to_string(letter);
  }
  return out;
}

GeneratorSet support(std::span<const int> word) {
  GeneratorSet set = 0;
  for (int letter : word) set |= generator_bit(letter);
  return set;
}

Word power(std::span<const int> word, int k) {
  Word out;
  out.reserve(word.size() * static_cast<std::size_t>(std::max(k, 0)));
  for (int i = 0; i < k; ++i) out.insert(out.end(), word.begin(), word.end());
  return out;
}

Word concat(std::span<const int> a, std::span<const int> b) {
  Word out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
  std::size_t seed = std::hash<long>{}(g.delta_exponent);
  CoxElementHash h;
  for (const CoxElement& f : g.factors) seed ^= h(f) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

ArtinMonoid::ArtinMonoid(const FamilySpec& spec) : ArtinMonoid(CoxeterGroup(spec)) {}

ArtinMonoid::ArtinMonoid(CoxeterGroup group)
    : group_(std::move(group)),
      identity_(group_.identity()),
      delta_word_(group_.reduced_word(group_.longest())) {
  tau_ = solve_tau();
}

std::vector<int> ArtinMonoid::solve_tau() const {
  std::vector<int> sigma;
  for (int i = 1; i <= rank(); ++i) {
    Word left = concat(Word{i}, delta_word_);
    int found = 0;
    for (int j = 1; j <= rank() && found == 0; ++j) {
      if (equal_positive(left, concat(delta_word_, Word{j}))) found = j;
    }
    if (found == 0) {
      throw Error("no j with x_" + std::to_string(i) + "*Delta = Delta*x_j in " +
                  artin::render(spec()));
    }
    sigma.push_back(found);
  }
  return sigma;
}

CoxElement ArtinMonoid::apply_tau(const CoxElement& s, long times) const {
  if (times % 2 == 0) return s;
  // While σ is still being solved, conjugate by the longest element directly.
  if (tau_.empty()) return group_.multiply(group_.multiply(group_.longest(), s), group_.longest());
  bool trivial = true;
  for (int i = 1; i <= rank(); ++i) trivial = trivial && tau_[i - 1] == i;
  if (trivial) return s;
  Word word = group_.reduced_word(s);
  for (int& letter : word) letter = tau_[letter - 1];
  return group_.product(word);
}

void ArtinMonoid::append_simple(long& delta, std::vector<CoxElement>& factors,
                                const CoxElement& s) const {
  if (s == identity_) return;
  factors.push_back(s);

  for (;;) {
    // Slide descent generators leftwards until every pair is left-weighted.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t j = factors.size() - 1; j-- > 0;) {
        CoxElement& a = factors[j];
        CoxElement& b = factors[j + 1];
        for (;;) {
          GeneratorSet bad = group_.descents(b, DescentSide::Left) &
                             ~group_.descents(a, DescentSide::Right);
          if (bad == 0) break;
          const int i = std::countr_zero(bad) + 1;
          a = group_.multiply(a, group_.generator(i));
          b = group_.multiply(group_.generator(i), b);
          changed = true;
        }
      }
    }

    // Drop trivial factors and pull Δ factors to the front.
    bool removed = false;
    for (std::size_t j = 0; j < factors.size();) {
      if (factors[j] == identity_) {
        factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(j));
        removed = true;
      } else if (factors[j] == group_.longest()) {
        // s_1..s_{j-1} Δ = Δ σ(s_1)..σ(s_{j-1})
        for (std::size_t t = 0; t < j; ++t) factors[t] = apply_tau(factors[t]);
        factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(j));
        ++delta;
        removed = true;
        j = 0;
      } else {
        ++j;
      }
    }
    if (!removed || factors.size() < 2) break;
  }
}

NormalForm ArtinMonoid::normal_form(std::span<const int> word) const {
  NormalForm nf;
  for (int letter : word) {
    if (letter < 1 || letter > rank()) {
      throw RangeError("generator index " + std::to_string(letter) + " out of range 1.." +
                       std::to_string(rank()));
    }
    append_simple(nf.delta_power, nf.factors, group_.generator(letter));
  }
  return nf;
}

bool ArtinMonoid::equal_positive(std::span<const int> a, std::span<const int> b) const {
  if (a.size() != b.size()) return false;
  return normal_form(a) == normal_form(b);
}

bool ArtinMonoid::equal_positive_bfs(std::span<const int> a, std::span<const int> b,
                                     std::size_t max_length) const {
  if (a.size() != b.size()) return false;
  if (a.size() > max_length) {
    throw CapExceeded("rewriting closure limited to words of length " +
                      std::to_string(max_length) + ", got " + std::to_string(a.size()));
  }
  auto encode = [this](std::span<const int> w) {
    std::string s;
    for (int letter : w) {
      if (letter < 1 || letter > rank()) {
        throw RangeError("generator index " + std::to_string(letter) + " out of range");
      }
      s.push_back(static_cast<char>(letter));
    }
    return s;
  };
  const std::string start = encode(a);
  const std::string target = encode(b);
  if (start == target) return true;

  // Both sides of every braid relation <x_i,x_j>^m = <x_j,x_i>^m.
  std::vector<std::pair<std::string, std::string>> rewrites;
  const CoxeterMatrix& m = group_.matrix();
  for (int i = 1; i <= rank(); ++i) {
    for (int j = i + 1; j <= rank(); ++j) {
      const int len = m(i, j);
      if (len == CoxeterMatrix::kInfinity) continue;
      std::string lhs, rhs;
      for (int t = 0; t < len; ++t) {
        lhs.push_back(static_cast<char>(t % 2 == 0 ? i : j));
        rhs.push_back(static_cast<char>(t % 2 == 0 ? j : i));
      }
      rewrites.emplace_back(lhs, rhs);
      rewrites.emplace_back(rhs, lhs);
    }
  }

  std::unordered_set<std::string> seen{start};
  std::deque<std::string> frontier{start};
  while (!frontier.empty()) {
    std::string current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& [from, to] : rewrites) {
      if (from.size() > current.size()) continue;
      for (std::size_t pos = 0; pos + from.size() <= current.size(); ++pos) {
        if (current.compare(pos, from.size(), from) != 0) continue;
        std::string next = current;
        next.replace(pos, from.size(), to);
        if (next == target) return true;
        if (seen.insert(next).second) frontier.push_back(std::move(next));
      }
    }
  }
  return false;
}

Word ArtinMonoid::to_word(const NormalForm& nf) const {
  Word out = artin::power(delta_word_, static_cast<int>(nf.delta_power));
  for (const CoxElement& f : nf.factors) {
    Word part = group_.reduced_word(f);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace {

std::string render_factors(const CoxeterGroup& group, long delta,
                           const std::vector<CoxElement>& factors) {
  std::string out = "D^" + std::to_string(delta) + " |";
  for (std::size_t j = 0; j < factors.size(); ++j) {
    out += j == 0 ? " " : " ; ";
    out += render_word(group.reduced_word(factors[j]));
  }
  return out;
}

}  // namespace

std::string ArtinMonoid::render(const NormalForm& nf) const {
  return render_factors(group_, nf.delta_power, nf.factors);
}

std::string ArtinMonoid::render(const GroupElement& g) const {
  return render_factors(group_, g.delta_exponent, g.factors);
}

bool ArtinMonoid::is_left_weighted(std::span<const CoxElement> factors) const {
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (factors[j] == identity_ || factors[j] == group_.longest()) return false;
    if (j + 1 < factors.size()) {
      GeneratorSet next_left = group_.descents(factors[j + 1], DescentSide::Left);
      GeneratorSet right = group_.descents(factors[j], DescentSide::Right);
      if ((next_left & ~right) != 0) return false;
    }
  }
  return true;
}

GroupElement ArtinMonoid::element(std::span<const int> word) const {
  NormalForm nf = normal_form(word);
  return GroupElement{nf.delta_power, std::move(nf.factors)};
}

GroupElement ArtinMonoid::multiply(const GroupElement& a, const GroupElement& b) const {
  // Δ^x P · Δ^y Q = Δ^{x+y} σ^y(P) Q
  GroupElement out{a.delta_exponent + b.delta_exponent, {}};
  out.factors.reserve(a.factors.size() + b.factors.size());
  for (const CoxElement& f : a.factors) out.factors.push_back(apply_tau(f, b.delta_exponent));
  for (const CoxElement& f : b.factors) append_simple(out.delta_exponent, out.factors, f);
  return out;
}

GroupElement ArtinMonoid::inverse(const GroupElement& g) const {
  // s^{-1} = Δ^{-1} c with c = w0 s^{-1}, so c·s = Δ in the monoid.
  GroupElement out;
  for (auto it = g.factors.rbegin(); it != g.factors.rend(); ++it) {
    CoxElement complement = group_.multiply(group_.longest(), group_.inverse(*it));
    out = multiply(out, GroupElement{-1, {std::move(complement)}});
  }
  return multiply(out, delta_power(-g.delta_exponent));
}

GroupElement ArtinMonoid::power(const GroupElement& g, long k) const {
  if (k < 0) return power(inverse(g), -k);
  GroupElement out;
  for (long i = 0; i < k; ++i) out = multiply(out, g);
  return out;
}

bool ArtinMonoid::left_divides(const GroupElement& a, const GroupElement& b) const {
  return multiply(inverse(a), b).delta_exponent >= 0;
}

}  // namespace artin
