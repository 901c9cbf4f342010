#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lgbec {

/// Flat `key = value` text with optional `[section]` headers and '#'
/// comments. Keys before the first header belong to the "" section.
/// Entries keep their file order; a repeated key overrides the earlier one.
class KeyValueDocument {
 public:
  static KeyValueDocument parse(std::string_view text);

  [[nodiscard]] std::optional<std::string> get(const std::string& section,
                                               const std::string& key) const;
  void set(const std::string& section, const std::string& key, std::string value);

  [[nodiscard]] const std::vector<std::pair<std::string, std::string>>& entries(
      const std::string& section) const;
  [[nodiscard]] std::vector<std::string> sections() const;

  /// Re-serializes in the same flat format (sections sorted, keys in order).
  [[nodiscard]] std::string to_string() const;

 private:
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> data_;
};

std::string trim(std::string_view s);

/// Strict double parse: the whole token must be consumed.
double parse_double(std::string_view token, std::string_view what);

}  // namespace lgbec
