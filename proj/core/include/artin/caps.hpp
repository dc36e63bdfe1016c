#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace artin {

/// Resource bounds shared by the exponential procedures.
struct Caps {
  /// Largest word length accepted by the rewriting-closure decider.
  std::size_t bfs_length = 14;
  /// Largest candidate root length searched by has_kth_root.
  std::size_t search_length = 10;
  /// Largest number of variable assignments for finite-model evaluation.
  std::uint64_t assignments = 10'000'000;
  /// Largest Coxeter group enumerated element-by-element.
  std::size_t group_elements = 100'000;
  /// Largest group for which a dense multiplication table is materialized.
  std::size_t table_elements = 4096;
};

/// Parses `key=value` pairs separated by commas, e.g. `bfs=14,search=10`.
/// Recognized keys: bfs, search, assign, group, table. Unspecified keys keep
/// the value from `base`.
Caps parse_caps(std::string_view text, Caps base = {});

/// Caps from the ARTIN_EQ_CAPS environment variable, or defaults if unset.
Caps caps_from_environment();

std::string render_caps(const Caps& caps);

}  // namespace artin
