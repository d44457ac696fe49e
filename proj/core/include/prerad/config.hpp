#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "prerad/suites.hpp"

namespace prerad {

struct WorkbenchConfig {
  // Preset spec, or the tag of an explicit ring.
  std::string ring;
  // Set when the ring was given as {"add": ..., "mul": ...}.
  std::optional<nlohmann::json> ring_tables;
  std::vector<std::string> seeds;
  UniverseOptions universe;
  SuiteOptions caps;
  std::vector<std::string> suites{"all"};
  std::optional<std::string> json_out;
  std::optional<std::string> text_out;
  bool timing = false;

  nlohmann::json to_json() const;
};

// Default universe bound for a ring spec: 36 for zn:6, 16 otherwise.
std::size_t default_max_order(std::string_view ring);

// Validates a JSON config document and applies defaults. Errors are
// SpecError with a message naming the offending path, e.g.
// "config.universe.max_order: expected a positive integer".
WorkbenchConfig parse_config(std::string_view text);
WorkbenchConfig config_from_json(const nlohmann::json& doc);

RingPtr make_config_ring(const WorkbenchConfig& config);

// Builds the ring and universe the config names and runs its suites.
SuiteReport run(const WorkbenchConfig& config);

}  // namespace prerad
