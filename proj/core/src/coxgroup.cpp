#include "artin/coxgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

#include "artin/error.hpp"

namespace artin {

std::size_t CoxElementHash::operator()(const CoxElement& e) const noexcept {
  std::size_t seed = e.image.size();
  for (int v : e.image) {
    seed ^= static_cast<std::size_t>(v + 0x9e3779b9) + (seed << 6) + (seed >> 2);
  }
  return seed;
}

namespace {

int mod(long value, int m) {
  long r = value % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

CoxeterGroup::CoxeterGroup(const FamilySpec& spec) : spec_(spec) {
  if (spec.is_sporadic()) {
    throw UnsupportedGroup("no Coxeter group model for sporadic type " + render(spec));
  }
  matrix_ = build_diagram(spec);
  rank_ = spec.rank();
  const int n = rank_;

  switch (spec.family) {
    case Family::A: {
      model_ = Model::Permutation;
      for (int g = 1; g <= n; ++g) {
        CoxElement s = identity();
        std::swap(s.image[g - 1], s.image[g]);
        generators_.push_back(std::move(s));
      }
      break;
    }
    case Family::B:
    case Family::D: {
      // Generator g < n swaps window positions n-g and n-g+1; generator n is
      // the sign change at position 1 (B) or the signed swap of positions 1,2 (D).
      model_ = Model::Signed;
      for (int g = 1; g < n; ++g) {
        CoxElement s = identity();
        std::swap(s.image[n - g - 1], s.image[n - g]);
        generators_.push_back(std::move(s));
      }
      CoxElement last = identity();
      if (spec.family == Family::B) {
        last.image[0] = -1;
      } else {
        last.image[0] = -2;
        last.image[1] = -1;
      }
      generators_.push_back(std::move(last));
      break;
    }
    case Family::I2: {
      model_ = Model::Dihedral;
      generators_.push_back(CoxElement{{-1, 0}});
      generators_.push_back(CoxElement{{-1, 1}});
      break;
    }
    default:
      break;
  }

  // The longest element is the unique element with every generator as a
  // right descent; climb until no generator extends the length.
  longest_ = identity();
  for (;;) {
    int grow = 0;
    for (int i = 1; i <= n && grow == 0; ++i) {
      if (!is_right_descent(longest_, i)) grow = i;
    }
    if (grow == 0) break;
    longest_ = multiply(longest_, generator(grow));
  }
}

CoxeterGroup CoxeterGroup::from_matrix(const CoxeterMatrix& matrix) {
  auto spec = identify_family(matrix);
  if (!spec) {
    throw UnsupportedGroup("Coxeter matrix does not match a supported family diagram");
  }
  return CoxeterGroup(*spec);
}

CoxElement CoxeterGroup::identity() const {
  switch (model_) {
    case Model::Permutation: {
      CoxElement e;
      e.image.resize(static_cast<std::size_t>(rank_) + 1);
      for (int k = 0; k <= rank_; ++k) e.image[k] = k + 1;
      return e;
    }
    case Model::Signed: {
      CoxElement e;
      e.image.resize(static_cast<std::size_t>(rank_));
      for (int k = 0; k < rank_; ++k) e.image[k] = k + 1;
      return e;
    }
    case Model::Dihedral:
      return CoxElement{{1, 0}};
  }
  return {};
}

CoxElement CoxeterGroup::multiply(const CoxElement& a, const CoxElement& b) const {
  if (model_ == Model::Dihedral) {
    const int m = spec_.param;
    return CoxElement{{a.image[0] * b.image[0], mod(static_cast<long>(a.image[0]) * b.image[1] + a.image[1], m)}};
  }
  CoxElement out;
  out.image.resize(b.image.size());
  for (std::size_t k = 0; k < b.image.size(); ++k) {
    int v = b.image[k];
    int w = a.image[static_cast<std::size_t>(std::abs(v) - 1)];
    out.image[k] = v < 0 ? -w : w;
  }
  return out;
}

CoxElement CoxeterGroup::inverse(const CoxElement& e) const {
  if (model_ == Model::Dihedral) {
    const int s = e.image[0];
    return CoxElement{{s, mod(-static_cast<long>(s) * e.image[1], spec_.param)}};
  }
  CoxElement out;
  out.image.resize(e.image.size());
  for (std::size_t k = 0; k < e.image.size(); ++k) {
    int v = e.image[k];
    int pos = static_cast<int>(k) + 1;
    out.image[static_cast<std::size_t>(std::abs(v) - 1)] = v < 0 ? -pos : pos;
  }
  return out;
}

CoxElement CoxeterGroup::product(std::span<const int> word) const {
  CoxElement e = identity();
  for (int letter : word) {
    if (letter < 1 || letter > rank_) {
      throw RangeError("generator index " + std::to_string(letter) + " out of range 1.." +
                       std::to_string(rank_));
    }
    e = multiply(e, generator(letter));
  }
  return e;
}

int CoxeterGroup::dihedral_length(const CoxElement& e) const {
  const int m = spec_.param;
  const int a = e.image[1];
  if (e.image[0] == 1) return 2 * std::min(a, (m - a) % m);
  // Reflections: (s1 s2)^j s1 has offset -j, (s2 s1)^j s2 has offset j+1.
  return std::min(2 * mod(-a, m) + 1, 2 * mod(a - 1, m) + 1);
}

bool CoxeterGroup::right_descent_impl(const CoxElement& e, int i) const {
  const auto& w = e.image;
  switch (model_) {
    case Model::Permutation:
      return w[i - 1] > w[i];
    case Model::Signed: {
      if (i < rank_) {
        const int pos = rank_ - i;  // generator i swaps positions pos, pos+1
        return w[pos - 1] > w[pos];
      }
      if (spec_.family == Family::B) return w[0] < 0;
      return w[0] + w[1] < 0;
    }
    case Model::Dihedral:
      return dihedral_length(multiply(e, generator(i))) < dihedral_length(e);
  }
  return false;
}

bool CoxeterGroup::is_right_descent(const CoxElement& e, int i) const {
  return right_descent_impl(e, i);
}

bool CoxeterGroup::is_left_descent(const CoxElement& e, int i) const {
  return right_descent_impl(inverse(e), i);
}

GeneratorSet CoxeterGroup::descents(const CoxElement& e, DescentSide side) const {
  const CoxElement& probe = side == DescentSide::Right ? e : inverse(e);
  GeneratorSet set = 0;
  for (int i = 1; i <= rank_; ++i) {
    if (right_descent_impl(probe, i)) set |= generator_bit(i);
  }
  return set;
}

int CoxeterGroup::length(const CoxElement& e) const {
  CoxElement current = e;
  const CoxElement id = identity();
  int steps = 0;
  while (current != id) {
    int strip = 0;
    for (int i = 1; i <= rank_ && strip == 0; ++i) {
      if (right_descent_impl(current, i)) strip = i;
    }
    current = multiply(current, generator(strip));
    ++steps;
  }
  return steps;
}

std::vector<int> CoxeterGroup::reduced_word(const CoxElement& e) const {
  // Left descents of e are right descents of e^{-1}; s_i*e has inverse e^{-1}*s_i.
  CoxElement current = inverse(e);
  const CoxElement id = identity();
  std::vector<int> word;
  while (current != id) {
    int strip = 0;
    for (int i = 1; i <= rank_ && strip == 0; ++i) {
      if (right_descent_impl(current, i)) strip = i;
    }
    word.push_back(strip);
    current = multiply(current, generator(strip));
  }
  return word;
}

int CoxeterGroup::element_order(const CoxElement& e) const {
  const CoxElement id = identity();
  CoxElement power = e;
  int k = 1;
  while (power != id) {
    power = multiply(power, e);
    ++k;
  }
  return k;
}

CoxElement CoxeterGroup::coxeter_element() const {
  Bipartition parts = bipartition(matrix_);
  std::vector<int> word = parts.J1;
  word.insert(word.end(), parts.J2.begin(), parts.J2.end());
  return product(word);
}

int CoxeterGroup::coxeter_number() const { return element_order(coxeter_element()); }

CoxElement cox_product(const CoxeterMatrix& matrix, std::span<const int> word) {
  return CoxeterGroup::from_matrix(matrix).product(word);
}

int cox_length(const CoxeterMatrix& matrix, const CoxElement& e) {
  return CoxeterGroup::from_matrix(matrix).length(e);
}

std::vector<int> descents(const CoxeterMatrix& matrix, const CoxElement& e, DescentSide side) {
  return to_indices(CoxeterGroup::from_matrix(matrix).descents(e, side));
}

int element_order(const CoxeterMatrix& matrix, const CoxElement& e) {
  return CoxeterGroup::from_matrix(matrix).element_order(e);
}

int derive_coxeter_number(const CoxeterMatrix& matrix) {
  return CoxeterGroup::from_matrix(matrix).coxeter_number();
}

std::vector<CoxElement> enumerate_elements(const CoxeterGroup& group, std::size_t cap) {
  std::vector<CoxElement> elements{group.identity()};
  std::unordered_map<CoxElement, std::size_t, CoxElementHash> index{{elements[0], 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (int g = 1; g <= group.rank(); ++g) {
      CoxElement next = group.multiply(elements[head], group.generator(g));
      if (index.contains(next)) continue;
      if (elements.size() >= cap) {
        throw CapExceeded("group enumeration of " + render(group.spec()) + " exceeds " +
                          std::to_string(cap) + " elements");
      }
      index.emplace(next, elements.size());
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

GroupTable enumerate_group(const CoxeterMatrix& matrix, const Caps& caps) {
  return enumerate_group(CoxeterGroup::from_matrix(matrix), caps);
}

GroupTable enumerate_group(const CoxeterGroup& group, const Caps& caps) {
  const std::size_t cap = std::min(caps.group_elements, caps.table_elements);
  const int rank = group.rank();

  // BFS spanning tree: element b = parent[b] * s_{via[b]}.
  std::vector<CoxElement> elements{group.identity()};
  std::vector<std::uint32_t> parent{0};
  std::vector<int> via{0};
  std::unordered_map<CoxElement, std::uint32_t, CoxElementHash> index{{elements[0], 0}};
  std::vector<std::uint32_t> right_gen;  // right_gen[a*rank + g-1] = a * s_g
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (int g = 1; g <= rank; ++g) {
      CoxElement next = group.multiply(elements[head], group.generator(g));
      auto it = index.find(next);
      if (it == index.end()) {
        if (elements.size() >= cap) {
          throw CapExceeded("multiplication table of " + render(group.spec()) + " exceeds " +
                            std::to_string(cap) + " elements");
        }
        auto id = static_cast<std::uint32_t>(elements.size());
        it = index.emplace(next, id).first;
        elements.push_back(std::move(next));
        parent.push_back(static_cast<std::uint32_t>(head));
        via.push_back(g);
      }
      right_gen.push_back(it->second);
    }
  }

  const std::size_t order = elements.size();
  std::vector<std::uint32_t> products(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    std::uint32_t* row = products.data() + a * order;
    row[0] = static_cast<std::uint32_t>(a);
    for (std::size_t b = 1; b < order; ++b) {
      row[b] = right_gen[static_cast<std::size_t>(row[parent[b]]) * rank + via[b] - 1];
    }
  }
  return GroupTable(order, std::move(products));
}

}  // namespace artin
