#include "artin/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <queue>
#include <string>

#include "artin/error.hpp"

namespace artin {

std::string_view family_name(Family family) {
  switch (family) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::I2: return "I2";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
  }
  return "?";
}

bool FamilySpec::is_sporadic() const {
  return family != Family::A && family != Family::B && family != Family::D &&
         family != Family::I2;
}

int FamilySpec::rank() const {
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::D: return param;
    case Family::I2: return 2;
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::F4: return 4;
    case Family::H3: return 3;
    case Family::H4: return 4;
  }
  return 0;
}

std::vector<int> to_indices(GeneratorSet set) {
  std::vector<int> out;
  for (int i = 1; set != 0; ++i, set >>= 1) {
    if (set & 1U) out.push_back(i);
  }
  return out;
}

FamilySpec make_spec(Family family, int param) {
  auto fail = [&](std::string_view need) {
    throw RangeError(std::string(family_name(family)) + " requires parameter " +
                     std::string(need) + ", got " + std::to_string(param));
  };
  switch (family) {
    case Family::A:
      if (param < 1 || param > kMaxRank) fail(">= 1 and <= 64");
      break;
    case Family::B:
      if (param < 2 || param > kMaxRank) fail(">= 2 and <= 64");
      break;
    case Family::D:
      // D_3 is isomorphic to A_3 and is not modelled separately.
      if (param < 4 || param > kMaxRank) fail(">= 4 and <= 64");
      break;
    case Family::I2:
      if (param < 3) fail(">= 3");
      break;
    default:
      param = 0;
      break;
  }
  return FamilySpec{family, param};
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  FamilySpec parse() {
    skip_ws();
    if (at_end()) fail("empty group spec");
    char head = static_cast<char>(std::toupper(static_cast<unsigned char>(next())));
    FamilySpec result;
    switch (head) {
      case 'A':
      case 'B':
      case 'D': {
        Family family = head == 'A' ? Family::A : head == 'B' ? Family::B : Family::D;
        skip_ws();
        int n = parse_nat();
        result = make_spec(family, n);
        break;
      }
      case 'I': {
        if (at_end() || next() != '2') fail("expected 'I2(' ");
        skip_ws();
        if (at_end() || next() != '(') fail("expected '(' after I2");
        skip_ws();
        int m = parse_nat();
        skip_ws();
        if (at_end() || next() != ')') fail("expected ')'");
        result = make_spec(Family::I2, m);
        break;
      }
      default:
        fail("unknown family '" + std::string(1, head) + "'");
    }
    skip_ws();
    if (!at_end()) fail("trailing characters");
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char next() { return text_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  int parse_nat() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec == std::errc::result_out_of_range) {
      throw RangeError("group parameter too large in '" + std::string(text_) + "'");
    }
    (void)ptr;
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("bad group spec '" + std::string(text_) + "': " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FamilySpec parse_group_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string render(const FamilySpec& spec) {
  if (spec.family == Family::I2) return "I2(" + std::to_string(spec.param) + ")";
  if (spec.is_sporadic()) return std::string(family_name(spec.family));
  return std::string(family_name(spec.family)) + std::to_string(spec.param);
}

CoxeterMatrix::CoxeterMatrix(int rank)
    : rank_(rank), entries_(static_cast<std::size_t>(rank) * static_cast<std::size_t>(rank), 2) {
  for (int i = 1; i <= rank; ++i) entries_[index(i, i)] = 1;
}

CoxeterMatrix::CoxeterMatrix(int rank, std::vector<int> entries)
    : rank_(rank), entries_(std::move(entries)) {
  if (rank < 0 || entries_.size() != static_cast<std::size_t>(rank) * static_cast<std::size_t>(rank)) {
    throw InvalidArgument("Coxeter matrix of rank " + std::to_string(rank) + " needs " +
                          std::to_string(rank * rank) + " entries");
  }
}

void CoxeterMatrix::set(int i, int j, int m) {
  entries_[index(i, j)] = m;
  entries_[index(j, i)] = m;
}

namespace {

bool is_edge(int m) { return m == CoxeterMatrix::kInfinity || m >= 3; }

}  // namespace

ValidationReport validate(const CoxeterMatrix& matrix) {
  ValidationReport report;
  const int n = matrix.rank();
  if (n < 1) {
    report.violations.push_back("rank must be positive");
    return report;
  }
  if (n > kMaxRank) report.violations.push_back("rank exceeds " + std::to_string(kMaxRank));

  auto pair_name = [](int i, int j) {
    return "m(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (int i = 1; i <= n; ++i) {
    if (matrix(i, i) != 1) {
      report.violations.push_back(pair_name(i, i) + " = " + std::to_string(matrix(i, i)) +
                                  ", diagonal entries must be 1");
    }
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      int m = matrix(i, j);
      if (m == CoxeterMatrix::kInfinity) {
        report.finite_entries = false;
      } else if (m < 2) {
        report.violations.push_back(pair_name(i, j) + " = " + std::to_string(m) +
                                    ", off-diagonal entries must be >= 2 or inf");
      }
      if (i < j && matrix(i, j) != matrix(j, i)) {
        report.violations.push_back(pair_name(i, j) + " != " + pair_name(j, i) +
                                    ", matrix must be symmetric");
      }
    }
  }

  // Graph shape: undirected edge when either orientation says so.
  std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(n) + 1);
  std::size_t edges = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (is_edge(matrix(i, j)) || is_edge(matrix(j, i))) {
        adjacent[i].push_back(j);
        adjacent[j].push_back(i);
        ++edges;
      }
    }
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::queue<int> frontier;
  frontier.push(1);
  seen[1] = true;
  int reached = 1;
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int w : adjacent[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        frontier.push(w);
      }
    }
  }
  report.connected = reached == n;
  report.tree = report.connected && edges == static_cast<std::size_t>(n - 1);
  return report;
}

CoxeterMatrix build_diagram(const FamilySpec& spec) {
  const int n = spec.rank();
  CoxeterMatrix m(n);
  auto path = [&](std::initializer_list<int> vertices) {
    auto it = vertices.begin();
    for (int prev = *it++; it != vertices.end(); prev = *it++) m.set(prev, *it, 3);
  };
  switch (spec.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) m.set(i, i + 1, 3);
      break;
    case Family::B:
      for (int i = 1; i < n - 1; ++i) m.set(i, i + 1, 3);
      m.set(n - 1, n, 4);
      break;
    case Family::D:
      for (int i = 1; i < n - 2; ++i) m.set(i, i + 1, 3);
      m.set(n - 2, n - 1, 3);
      m.set(n - 2, n, 3);
      break;
    case Family::I2:
      m.set(1, 2, spec.param);
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8:
      // Bourbaki numbering: chain 1-3-4-5-...-n, generator 2 hangs off 4.
      m.set(1, 3, 3);
      m.set(2, 4, 3);
      for (int i = 3; i < n; ++i) m.set(i, i + 1, 3);
      break;
    case Family::F4:
      path({1, 2});
      m.set(2, 3, 4);
      path({3, 4});
      break;
    case Family::H3:
      m.set(1, 2, 5);
      path({2, 3});
      break;
    case Family::H4:
      m.set(1, 2, 5);
      path({2, 3, 4});
      break;
  }
  return m;
}

std::optional<FamilySpec> identify_family(const CoxeterMatrix& matrix) {
  const int n = matrix.rank();
  if (n < 1 || n > kMaxRank || !validate(matrix).valid()) return std::nullopt;
  std::vector<FamilySpec> candidates{FamilySpec{Family::A, n}};
  if (n >= 2) candidates.push_back(FamilySpec{Family::B, n});
  if (n >= 4) candidates.push_back(FamilySpec{Family::D, n});
  if (n == 2 && matrix(1, 2) >= 4) candidates.push_back(FamilySpec{Family::I2, matrix(1, 2)});
  for (const FamilySpec& spec : candidates) {
    if (build_diagram(spec) == matrix) return spec;
  }
  return std::nullopt;
}

Bipartition bipartition(const CoxeterMatrix& matrix) {
  ValidationReport report = validate(matrix);
  if (!report.valid()) throw InvalidArgument("bipartition: invalid Coxeter matrix");
  if (!report.connected) throw InvalidArgument("bipartition: diagram is disconnected");
  if (!report.tree) throw InvalidArgument("bipartition: diagram is not a tree");

  const int n = matrix.rank();
  std::vector<int> colour(static_cast<std::size_t>(n) + 1, -1);
  std::queue<int> frontier;
  colour[1] = 0;
  frontier.push(1);
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int w = 1; w <= n; ++w) {
      if (w != v && is_edge(matrix(v, w)) && colour[w] < 0) {
        colour[w] = 1 - colour[v];
        frontier.push(w);
      }
    }
  }
  Bipartition parts;
  for (int i = 1; i <= n; ++i) (colour[i] == 0 ? parts.J1 : parts.J2).push_back(i);
  return parts;
}

}  // namespace artin
