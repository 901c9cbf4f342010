#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "run_config.hpp"

namespace lgbec::cli {

/// Metadata shared by every file a command writes. Wall time is taken when
/// the files are written, so the data section stays reproducible.
class RunMetadata {
 public:
  RunMetadata(std::string command, const RunConfig& rc);

  void decision(const std::string& key, const std::string& value);
  void decision(const std::string& key, double value);

  [[nodiscard]] std::string header() const;  // '#'-prefixed lines
  [[nodiscard]] nlohmann::json json() const;
  [[nodiscard]] double wall_seconds() const;

 private:
  std::string command_;
  std::string config_text_;
  std::vector<std::pair<std::string, std::string>> decisions_;
  std::chrono::steady_clock::time_point start_;
  unsigned threads_;
  std::uint64_t seed_;
};

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string fmt(double v, int digits = 10);

void write_text(const std::filesystem::path& path, const std::string& text);
void write_csv(const std::filesystem::path& path, const RunMetadata& meta, const CsvTable& table);
void write_json(const std::filesystem::path& path, const RunMetadata& meta, nlohmann::json body);
/// Text data file with the metadata header in front.
void write_data(const std::filesystem::path& path, const RunMetadata& meta, const std::string& data);

/// Row-level error marker; "ok" when the row computed cleanly.
inline constexpr const char* kOk = "ok";

}  // namespace lgbec::cli
