#include <nlohmann/json.hpp>

#include "artin/coxgroup.hpp"
#include "artin/error.hpp"

namespace artin {

GroupTable::GroupTable(std::size_t order, std::vector<std::uint32_t> products)
    : order_(order), products_(std::move(products)) {
  if (order_ == 0) throw InvalidArgument("group table: order must be positive");
  if (products_.size() != order_ * order_) {
    throw InvalidArgument("group table: expected " + std::to_string(order_ * order_) +
                          " products, got " + std::to_string(products_.size()));
  }
  for (std::uint32_t v : products_) {
    if (v >= order_) throw InvalidArgument("group table: product index out of range");
  }
  for (std::uint32_t a = 0; a < order_; ++a) {
    if (product(kIdentity, a) != a || product(a, kIdentity) != a) {
      throw InvalidArgument("group table: index 0 is not the identity");
    }
  }
  inverses_.assign(order_, 0);
  for (std::uint32_t a = 0; a < order_; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < order_ && !found; ++b) {
      if (product(a, b) == kIdentity) {
        inverses_[a] = b;
        found = true;
      }
    }
    if (!found) throw InvalidArgument("group table: element " + std::to_string(a) + " has no inverse");
  }
}

std::uint32_t GroupTable::power(std::uint32_t a, long exponent) const {
  std::uint32_t base = exponent < 0 ? inverse(a) : a;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  std::uint32_t acc = kIdentity;
  while (e != 0) {
    if (e & 1UL) acc = product(acc, base);
    base = product(base, base);
    e >>= 1;
  }
  return acc;
}

bool GroupTable::satisfies_group_axioms() const {
  for (std::uint32_t a = 0; a < order_; ++a) {
    if (product(a, inverse(a)) != kIdentity || product(inverse(a), a) != kIdentity) return false;
    for (std::uint32_t b = 0; b < order_; ++b) {
      const std::uint32_t ab = product(a, b);
      for (std::uint32_t c = 0; c < order_; ++c) {
        if (product(ab, c) != product(a, product(b, c))) return false;
      }
    }
  }
  return true;
}

nlohmann::json GroupTable::to_json() const {
  return nlohmann::json{{"order", order_}, {"products", products_}};
}

GroupTable GroupTable::from_json(const nlohmann::json& j) {
  try {
    return GroupTable(j.at("order").get<std::size_t>(),
                      j.at("products").get<std::vector<std::uint32_t>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("group table JSON: ") + e.what());
  }
}

}  // namespace artin
