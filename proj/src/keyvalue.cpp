#include "lgbec/keyvalue.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace lgbec {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

double parse_double(std::string_view token, std::string_view what) {
  const std::string t = trim(token);
  double value = 0.0;
  const auto* begin = t.data();
  const auto* end = t.data() + t.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (t.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("cannot parse '" + t + "' as a number for " + std::string(what));
  }
  return value;
}

KeyValueDocument KeyValueDocument::parse(std::string_view text) {
  KeyValueDocument doc;
  std::string section;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": unterminated section header");
      }
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (key.empty()) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": empty key");
    }
    doc.set(section, key, value);
  }
  return doc;
}

std::optional<std::string> KeyValueDocument::get(const std::string& section,
                                                 const std::string& key) const {
  const auto it = data_.find(section);
  if (it == data_.end()) return std::nullopt;
  for (const auto& [k, v] : it->second) {
    if (k == key) return v;
  }
  return std::nullopt;
}

void KeyValueDocument::set(const std::string& section, const std::string& key, std::string value) {
  auto& list = data_[section];
  for (auto& [k, v] : list) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  list.emplace_back(key, std::move(value));
}

const std::vector<std::pair<std::string, std::string>>& KeyValueDocument::entries(
    const std::string& section) const {
  static const std::vector<std::pair<std::string, std::string>> empty;
  const auto it = data_.find(section);
  return it == data_.end() ? empty : it->second;
}

std::vector<std::string> KeyValueDocument::sections() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : data_) out.push_back(name);
  return out;
}

std::string KeyValueDocument::to_string() const {
  std::ostringstream out;
  for (const auto& [name, list] : data_) {
    if (!name.empty()) out << '[' << name << "]\n";
    for (const auto& [k, v] : list) out << k << " = " << v << '\n';
  }
  return out.str();
}

}  // namespace lgbec
