#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bwave/context.hpp"
#include "bwave/sources.hpp"

namespace bwave::cli {

/// Invalid scenario file or flag. `key` names the offending entry.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

struct Scenario {
  WaveContext ctx{2, 1.0, 1.0};
  nlohmann::json source;
  std::optional<nlohmann::json> perturbation;
  int truncation = -1;
  double tolerance = 1e-6;
  int resolution = 64;
  int directions = 64;
  std::vector<double> field_radii;  ///< empty selects {1.5 R, 3 R}
  int field_directions = 16;
  std::string hash;  ///< of the canonical JSON after overrides
};

/// Overrides given on the command line; unset fields keep the file values.
struct Overrides {
  std::optional<int> truncation;
  std::optional<double> tolerance;
  std::optional<int> resolution;
  std::optional<int> dimension;
};

/// Validates `doc` (unknown keys rejected at every level) and applies
/// overrides before hashing.
Scenario parse_scenario(nlohmann::json doc, const Overrides& over = {});

/// Reads and parses a scenario file.
Scenario load_scenario(const std::string& path, const Overrides& over = {});

/// Builds the source described by a `source` or `perturbation` object.
SourceField build_source(const WaveContext& ctx, const nlohmann::json& spec, const std::string& where);

/// 64-bit FNV-1a of `text`, as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

}  // namespace bwave::cli
