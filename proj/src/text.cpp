#include "ecalg/text.hpp"

namespace ecalg {

std::vector<std::string> split_list(std::string_view text, std::size_t expected, std::string_view what) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  if (parts.size() != expected) {
    throw FieldError(FieldErrc::malformed, std::string(what) + " needs " + std::to_string(expected) +
                                               " comma-separated entries, got " + std::to_string(parts.size()));
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) {
      throw FieldError(FieldErrc::malformed, std::string(what) + " entry " + std::to_string(i + 1) + " is empty");
    }
  }
  return parts;
}

}  // namespace ecalg
