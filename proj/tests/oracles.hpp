#pragma once

// Test-only reference computations. None of these call into the library's
// Coxeter models or normal forms, so agreement with them is evidence rather
// than a tautology.

#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "artin/coxeter.hpp"

namespace oracle {

/// Coxeter group of a matrix through its geometric representation on R^n
/// (simple-root coordinates, symmetric form B_ij = -cos(pi/m_ij)), enumerated
/// by breadth-first search on the Cayley graph. Elements are keyed by their
/// rounded matrices.
class GeometricGroup {
 public:
  using Matrix = std::vector<double>;

  explicit GeometricGroup(const artin::CoxeterMatrix& m, std::size_t cap = 200000) : n_(m.rank()) {
    for (int i = 1; i <= n_; ++i) {
      Matrix s = identity_matrix();
      for (int j = 1; j <= n_; ++j) {
        const int mij = i == j ? 1 : m(i, j);
        const double b = mij == 0 ? -1.0 : -std::cos(std::numbers::pi / mij);
        // s_i(v) = v - 2 B(alpha_i, v) alpha_i changes coordinate i only.
        at(s, i - 1, j - 1) -= 2.0 * b;
      }
      gens_.push_back(s);
    }
    Matrix e = identity_matrix();
    index_.emplace(key(e), 0);
    elements_.push_back(e);
    words_.push_back({});
    for (std::size_t head = 0; head < elements_.size(); ++head) {
      for (int g = 1; g <= n_; ++g) {
        Matrix next = multiply(elements_[head], gens_[static_cast<std::size_t>(g - 1)]);
        if (index_.emplace(key(next), elements_.size()).second) {
          if (elements_.size() >= cap) throw std::runtime_error("geometric group larger than cap");
          std::vector<int> w = words_[head];
          w.push_back(g);
          elements_.push_back(std::move(next));
          words_.push_back(std::move(w));
        }
      }
    }
  }

  std::size_t order() const { return elements_.size(); }
  /// Geodesic word of element i; its size is the Coxeter length.
  const std::vector<int>& word(std::size_t i) const { return words_[i]; }
  std::size_t longest_length() const { return words_.back().size(); }

  std::size_t index_of_word(const std::vector<int>& w) const {
    Matrix x = identity_matrix();
    for (int g : w) x = multiply(x, gens_[static_cast<std::size_t>(g - 1)]);
    return index_.at(key(x));
  }

  /// Order of element i as a matrix.
  int element_order(std::size_t i) const {
    Matrix x = elements_[i];
    const std::string id = key(identity_matrix());
    int k = 1;
    while (key(x) != id) {
      x = multiply(x, elements_[i]);
      ++k;
    }
    return k;
  }

  std::set<int> element_orders() const {
    std::set<int> out;
    for (std::size_t i = 0; i < order(); ++i) out.insert(element_order(i));
    return out;
  }

  /// Order of s_1 s_2 ... s_n taken in the given generator sequence.
  int order_of_word(const std::vector<int>& w) const { return element_order(index_of_word(w)); }

 private:
  Matrix identity_matrix() const {
    Matrix x(static_cast<std::size_t>(n_ * n_), 0.0);
    for (int i = 0; i < n_; ++i) at(x, i, i) = 1.0;
    return x;
  }
  double& at(Matrix& x, int i, int j) const { return x[static_cast<std::size_t>(i * n_ + j)]; }
  double at(const Matrix& x, int i, int j) const { return x[static_cast<std::size_t>(i * n_ + j)]; }

  Matrix multiply(const Matrix& a, const Matrix& b) const {
    Matrix c(a.size(), 0.0);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const double aik = at(a, i, k);
        if (aik == 0.0) continue;
        for (int j = 0; j < n_; ++j) at(c, i, j) += aik * at(b, k, j);
      }
    return c;
  }

  static std::string key(const Matrix& x) {
    std::string out;
    for (double v : x) {
      long r = std::lround(v * 1e6);
      out += std::to_string(r == 0 ? 0 : r);
      out += ',';
    }
    return out;
  }

  int n_;
  std::vector<Matrix> gens_;
  std::vector<Matrix> elements_;
  std::vector<std::vector<int>> words_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Equivalence class of a positive word under the braid relations of `m`,
/// found by exhaustive rewriting.
inline std::set<std::vector<int>> positive_class(const artin::CoxeterMatrix& m, const std::vector<int>& w) {
  std::set<std::vector<int>> seen{w};
  std::deque<std::vector<int>> todo{w};
  while (!todo.empty()) {
    std::vector<int> cur = todo.front();
    todo.pop_front();
    for (int i = 1; i <= m.rank(); ++i)
      for (int j = 1; j <= m.rank(); ++j) {
        const int len = m(i, j);
        if (i == j || len == 0 || len > static_cast<int>(cur.size())) continue;
        for (std::size_t p = 0; p + static_cast<std::size_t>(len) <= cur.size(); ++p) {
          bool match = true;
          for (int t = 0; t < len && match; ++t) match = cur[p + static_cast<std::size_t>(t)] == (t % 2 ? j : i);
          if (!match) continue;
          std::vector<int> next = cur;
          for (int t = 0; t < len; ++t) next[p + static_cast<std::size_t>(t)] = t % 2 ? i : j;
          if (seen.insert(next).second) todo.push_back(std::move(next));
        }
      }
  }
  return seen;
}

inline bool positive_equal(const artin::CoxeterMatrix& m, const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  return positive_class(m, a).count(b) > 0;
}

/// Tabulated rank, Coxeter number, whether c_G = Delta^2, and word length of c_G.
struct TableRow {
  int rank;
  int h;
  bool delta_squared;
  int lambda;
};

inline TableRow table_row(const artin::FamilySpec& s) {
  using artin::Family;
  const int n = s.param;
  switch (s.family) {
    case Family::A: return {n, n + 1, true, n * n + n};
    case Family::B: return {n, 2 * n, false, n * n};
    case Family::D:
      if (n % 2 == 1) {
        const int k = (n - 1) / 2;
        return {n, 2 * n - 2, true, 8 * k * k + 4 * k};
      } else {
        const int k = n / 2;
        return {n, 2 * n - 2, false, 4 * k * k - 2 * k};
      }
    case Family::I2:
      if (n % 2 == 1) return {2, n, true, 4 * ((n - 1) / 2) + 2};
      return {2, n, false, 2 * (n / 2)};
    default: return {0, 0, false, 0};
  }
}

inline int group_order(const artin::FamilySpec& s) {
  using artin::Family;
  const int n = s.param;
  long f = 1;
  for (int i = 2; i <= (s.family == Family::A ? n + 1 : n); ++i) f *= i;
  switch (s.family) {
    case Family::A: return static_cast<int>(f);
    case Family::B: return static_cast<int>(f << n);
    case Family::D: return static_cast<int>(f << (n - 1));
    case Family::I2: return 2 * n;
    default: return 0;
  }
}

/// Number of reflections, the length of the longest element.
inline int reflection_count(const artin::FamilySpec& s) {
  using artin::Family;
  const int n = s.param;
  switch (s.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B: return n * n;
    case Family::D: return n * (n - 1);
    case Family::I2: return n;
    default: return 0;
  }
}

/// Root spectrum predicted by eigenvalue orders of regular elements: d is
/// regular for A_n iff d | n+1 or d | n; B_n iff d | 2n; D_n iff d | 2n-2 or
/// d | n; I2(m) iff d | m or d | 2. Delta^2 has a k-th root iff k is
/// regular, and Delta has one iff 2k is.
inline std::set<int> regular_spectrum(const artin::FamilySpec& s, int kmax) {
  using artin::Family;
  const int n = s.param;
  auto regular = [&](int d) {
    switch (s.family) {
      case Family::A: return (n + 1) % d == 0 || n % d == 0;
      case Family::B: return (2 * n) % d == 0;
      case Family::D: return (2 * n - 2) % d == 0 || n % d == 0;
      case Family::I2: return n % d == 0 || 2 % d == 0;
      default: return false;
    }
  };
  const bool squared = table_row(s).delta_squared;
  std::set<int> out;
  for (int k = 1; k <= kmax; ++k) {
    if (regular(squared ? k : 2 * k)) out.insert(k);
  }
  return out;
}

}  // namespace oracle
