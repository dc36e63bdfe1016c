#include "artin/caps.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "artin/error.hpp"

namespace artin {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_count(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size() || value.empty()) {
    throw ParseError("caps: bad value for '" + std::string(key) + "': '" +
                     std::string(value) + "'");
  }
  return out;
}

}  // namespace

Caps parse_caps(std::string_view text, Caps base) {
  Caps caps = base;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;

    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("caps: expected key=value, got '" + std::string(item) + "'");
    }
    std::string_view key = trim(item.substr(0, eq));
    std::uint64_t value = parse_count(key, trim(item.substr(eq + 1)));
    if (key == "bfs") {
      caps.bfs_length = value;
    } else if (key == "search") {
      caps.search_length = value;
    } else if (key == "assign") {
      caps.assignments = value;
    } else if (key == "group") {
      caps.group_elements = value;
    } else if (key == "table") {
      caps.table_elements = value;
    } else {
      throw ParseError("caps: unknown key '" + std::string(key) + "'");
    }
  }
  return caps;
}

Caps caps_from_environment() {
  const char* env = std::getenv("ARTIN_EQ_CAPS");
  if (env == nullptr) return Caps{};
  return parse_caps(env);
}

std::string render_caps(const Caps& caps) {
  return "bfs=" + std::to_string(caps.bfs_length) +
         ",search=" + std::to_string(caps.search_length) +
         ",assign=" + std::to_string(caps.assignments) +
         ",group=" + std::to_string(caps.group_elements) +
         ",table=" + std::to_string(caps.table_elements);
}

}  // namespace artin
