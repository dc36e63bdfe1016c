#include "artin/sentence.hpp"

#include <array>
#include <set>

#include "artin/error.hpp"

namespace artin {

Formula Formula::equal(Term lhs, Term rhs) {
  Formula f;
  f.kind = Kind::Equal;
  f.lhs = std::move(lhs);
  f.rhs = std::move(rhs);
  return f;
}

Formula Formula::not_equal(Term lhs, Term rhs) {
  Formula f = equal(std::move(lhs), std::move(rhs));
  f.kind = Kind::NotEqual;
  return f;
}

Formula Formula::negation(Formula inner) {
  Formula f;
  f.kind = Kind::Not;
  f.children.push_back(std::move(inner));
  return f;
}

Formula Formula::conjunction(std::vector<Formula> parts) {
  Formula f;
  f.kind = Kind::And;
  f.children = std::move(parts);
  return f;
}

Formula Formula::disjunction(std::vector<Formula> parts) {
  Formula f;
  f.kind = Kind::Or;
  f.children = std::move(parts);
  return f;
}

std::vector<std::pair<char, int>> atomic_word(const Formula& atom) {
  std::vector<std::pair<char, int>> out;
  auto expand = [&out](const Factor& f, bool invert) {
    int e = invert ? -f.exponent : f.exponent;
    int step = e < 0 ? -1 : 1;
    for (int i = 0; i != e; i += step) out.emplace_back(f.variable, step);
  };
  for (const Factor& f : atom.lhs) expand(f, false);
  for (auto it = atom.rhs.rbegin(); it != atom.rhs.rend(); ++it) expand(*it, true);
  return out;
}

namespace {

void collect_variables(const Formula& f, std::set<char>& out) {
  for (const Factor& factor : f.lhs) out.insert(factor.variable);
  for (const Factor& factor : f.rhs) out.insert(factor.variable);
  for (const Formula& child : f.children) collect_variables(child, out);
}

bool arity_ok(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Equal:
    case Formula::Kind::NotEqual:
      if (!f.children.empty()) return false;
      break;
    case Formula::Kind::Not:
      if (f.children.size() != 1) return false;
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      if (f.children.empty()) return false;
      break;
  }
  for (const Formula& child : f.children) {
    if (!arity_ok(child)) return false;
  }
  return true;
}

std::string superscript(int value, Notation notation) {
  if (notation == Notation::Ascii) return "^" + std::to_string(value);
  static constexpr std::array<const char*, 10> digits{"⁰", "¹", "²", "³", "⁴",
                                                      "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out = value < 0 ? "⁻" : "";
  for (char c : std::to_string(value < 0 ? -value : value)) out += digits[static_cast<std::size_t>(c - '0')];
  return out;
}

std::string render_term(const Term& term, Notation notation) {
  if (term.empty()) return "1";
  std::string out;
  for (const Factor& f : term) {
    out += f.variable;
    if (f.explicit_power || f.exponent != 1) out += superscript(f.exponent, notation);
  }
  return out;
}

std::string render_formula(const Formula& f, Notation notation) {
  const bool uni = notation == Notation::Unicode;
  auto wrap = [&](const Formula& child) {
    std::string s = render_formula(child, notation);
    return child.is_atom() ? "(" + s + ")" : s;
  };
  switch (f.kind) {
    case Formula::Kind::Equal:
      return render_term(f.lhs, notation) + " = " + render_term(f.rhs, notation);
    case Formula::Kind::NotEqual:
      return render_term(f.lhs, notation) + (uni ? " ≠ " : " != ") + render_term(f.rhs, notation);
    case Formula::Kind::Not:
      return (uni ? "¬" : "~") + wrap(f.children[0]);
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      const char* joiner = f.kind == Formula::Kind::And ? (uni ? " ∧ " : " & ") : (uni ? " ∨ " : " | ");
      std::string out = "(";
      for (std::size_t i = 0; i < f.children.size(); ++i) {
        if (i > 0) out += joiner;
        out += wrap(f.children[i]);
      }
      return out + ")";
    }
  }
  return {};
}

}  // namespace

bool is_well_formed(const Sentence& sentence) {
  std::set<char> bound;
  for (const auto& [q, var] : sentence.prefix) {
    if (!bound.insert(var).second) return false;
  }
  std::set<char> used;
  collect_variables(sentence.matrix, used);
  for (char v : used) {
    if (!bound.contains(v)) return false;
  }
  return arity_ok(sentence.matrix);
}

std::string render(const Sentence& sentence, Notation notation) {
  const bool uni = notation == Notation::Unicode;
  std::string out;
  for (const auto& [q, var] : sentence.prefix) {
    out += q == Quantifier::ForAll ? (uni ? "∀" : "A") : (uni ? "∃" : "E");
    out += var;
    out += '.';
  }
  const std::string body = render_formula(sentence.matrix, notation);
  return out + (sentence.matrix.is_atom() ? "(" + body + ")" : body);
}

Sentence phi(int k) {
  if (k < 1) throw RangeError("phi: exponent must be positive");
  Sentence s;
  s.prefix = {{Quantifier::ForAll, 'x'}, {Quantifier::Exists, 'y'}, {Quantifier::ForAll, 'z'}};
  Formula commute = Formula::equal({{'x'}, {'z'}}, {{'z'}, {'x'}});
  Formula root = Formula::equal({{'x'}}, {{'y', k, true}});
  s.matrix = Formula::disjunction({Formula::negation(std::move(commute)), std::move(root)});
  return s;
}

Sentence psi(int n) {
  if (n < 1) throw RangeError("psi: order must be positive");
  Sentence s;
  s.prefix = {{Quantifier::Exists, 'x'}};
  std::vector<Formula> parts;
  parts.push_back(Formula::equal({{'x', n, true}}, {}));
  for (int k = 1; k < n; ++k) parts.push_back(Formula::not_equal({{'x', k, true}}, {}));
  s.matrix = Formula::conjunction(std::move(parts));
  return s;
}

bool is_kahr(const Sentence& sentence) {
  const auto& p = sentence.prefix;
  return p.size() == 3 && p[0].first == Quantifier::ForAll && p[1].first == Quantifier::Exists &&
         p[2].first == Quantifier::ForAll;
}

namespace {

class Evaluator {
 public:
  Evaluator(const Sentence& sentence, const GroupTable& table)
      : sentence_(sentence), table_(table) {}

  bool run() { return quantify(0); }

 private:
  bool quantify(std::size_t depth) {
    if (depth == sentence_.prefix.size()) return holds(sentence_.matrix);
    const auto& [q, var] = sentence_.prefix[depth];
    auto& slot = values_[static_cast<unsigned char>(var)];
    const auto order = static_cast<std::uint32_t>(table_.order());
    for (std::uint32_t v = 0; v < order; ++v) {
      slot = v;
      bool inner = quantify(depth + 1);
      if (q == Quantifier::Exists && inner) return true;
      if (q == Quantifier::ForAll && !inner) return false;
    }
    return q == Quantifier::ForAll;
  }

  std::uint32_t value(const Term& term) const {
    std::uint32_t acc = GroupTable::kIdentity;
    for (const Factor& f : term) {
      acc = table_.product(acc, table_.power(values_[static_cast<unsigned char>(f.variable)], f.exponent));
    }
    return acc;
  }

  bool holds(const Formula& f) const {
    switch (f.kind) {
      case Formula::Kind::Equal: return value(f.lhs) == value(f.rhs);
      case Formula::Kind::NotEqual: return value(f.lhs) != value(f.rhs);
      case Formula::Kind::Not: return !holds(f.children[0]);
      case Formula::Kind::And:
        for (const Formula& c : f.children) {
          if (!holds(c)) return false;
        }
        return true;
      case Formula::Kind::Or:
        for (const Formula& c : f.children) {
          if (holds(c)) return true;
        }
        return false;
    }
    return false;
  }

  const Sentence& sentence_;
  const GroupTable& table_;
  std::array<std::uint32_t, 256> values_{};
};

}  // namespace

bool eval_on_finite_group(const Sentence& sentence, const GroupTable& table, const Caps& caps) {
  if (!is_well_formed(sentence)) throw InvalidArgument("sentence is not well formed");
  std::uint64_t assignments = 1;
  for (std::size_t i = 0; i < sentence.prefix.size(); ++i) {
    if (assignments > caps.assignments / table.order()) {
      throw CapExceeded("evaluation needs more than " + std::to_string(caps.assignments) +
                        " assignments");
    }
    assignments *= table.order();
  }
  return Evaluator(sentence, table).run();
}

}  // namespace artin
