#pragma once

#include <gmpxx.h>

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sdalab/minpoints.hpp"
#include "sdalab/model.hpp"

namespace sdalab::tools {

std::string sha256_hex(std::string_view data);

std::string read_text(const std::filesystem::path& p);

// "123", "-4/7", "0.25", "1e7", "2.5e-3" as an exact rational.
mpq_class parse_rational(std::string_view text);

// A run directory: config.json, minimal_points.csv and derived reports, all
// listed with their SHA-256 in manifest.json.
class RunStore {
 public:
  explicit RunStore(std::filesystem::path dir);

  const std::filesystem::path& dir() const noexcept { return dir_; }
  // Creates the directory and a fresh manifest.
  void init(const nlohmann::json& header);
  // Writes the file and records it in the manifest.
  void put(const std::string& name, const std::string& content);
  nlohmann::json manifest() const;

 private:
  std::filesystem::path dir_;
};

struct LoadedRun {
  model::LoadedTarget target;
  minpoints::MinimalPointSequence seq;
};
// Replays a run: target from config.json, points from the CSV, certified
// range from the manifest.
LoadedRun load_run(const std::filesystem::path& dir);

}  // namespace sdalab::tools
