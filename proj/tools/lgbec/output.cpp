#include "output.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>



namespace lgbec::cli {

RunMetadata::RunMetadata(std::string command, const RunConfig& rc)
    : command_(std::move(command)),
      config_text_(rc.doc.to_string()),
      start_(std::chrono::steady_clock::now()),
      threads_(rc.threads),
      seed_(rc.seed) {}

void RunMetadata::decision(const std::string& key, const std::string& value) {
  decisions_.emplace_back(key, value);
}

void RunMetadata::decision(const std::string& key, double value) { decision(key, fmt(value, 12)); }

double RunMetadata::wall_seconds() const {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

std::string RunMetadata::header() const {
  std::ostringstream out;
  out << "# tool: lgbec " << LGBEC_VERSION << "\n";
  out << "# command: " << command_ << "\n";
  char wall[64];
  std::snprintf(wall, sizeof wall, "%.3f", wall_seconds());
  out << "# wall_time_s: " << wall << "\n";
  out << "# threads: " << threads_ << "  seed: " << seed_ << "\n";
  out << "# resolved config:\n";
  std::istringstream cfg(config_text_);
  for (std::string line; std::getline(cfg, line);) out << "#   " << line << "\n";
  out << "# design decisions:\n";
  for (const auto& [k, v] : decisions_) out << "#   " << k << " = " << v << "\n";
  return out.str();
}

nlohmann::json RunMetadata::json() const {
  nlohmann::json j;
  j["tool"] = "lgbec";
  j["version"] = LGBEC_VERSION;
  j["command"] = command_;
  j["wall_time_s"] = wall_seconds();
  j["threads"] = threads_;
  j["seed"] = seed_;
  j["config"] = config_text_;
  nlohmann::json d = nlohmann::json::object();
  for (const auto& [k, v] : decisions_) d[k] = v;
  j["design_decisions"] = d;
  return j;
}

std::string fmt(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_csv(const std::filesystem::path& path, const RunMetadata& meta, const CsvTable& table) {
  std::ostringstream out;
  out << meta.header();
  for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
  out << "\n";
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) throw std::logic_error("csv row width mismatch");
    for (std::size_t c = 0; c < row.size(); ++c) {
      const bool quote = row[c].find_first_of(",\"") != std::string::npos;
      if (c) out << ",";
      if (quote) {
        out << '"';
        for (char ch : row[c]) out << (ch == '"' ? "\"\"" : std::string(1, ch));
        out << '"';
      } else {
        out << row[c];
      }
    }
    out << "\n";
  }
  write_text(path, out.str());
}

void write_json(const std::filesystem::path& path, const RunMetadata& meta, nlohmann::json body) {
  body["metadata"] = meta.json();
  write_text(path, body.dump(2) + "\n");
}

void write_data(const std::filesystem::path& path, const RunMetadata& meta, const std::string& data) {
  write_text(path, meta.header() + data);
}

}  // namespace lgbec::cli
