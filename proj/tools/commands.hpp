#pragma once

// Command dispatch for the toric executable. Reports are JSON objects so that
// they serialize losslessly and compare byte for byte across runs.

#include "toric/document.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace toric::cli {

using Json = nlohmann::ordered_json;

struct Flags {
  std::optional<int> l;
  std::optional<int> p;
  std::uint64_t seed = 0;
  std::uint64_t budget = 200'000;
  bool table = false;
  bool force = false;
  bool timing = false;
};

const std::vector<std::string>& command_names();

/// Runs one subcommand. Throws toric::Error for invalid input or domain
/// failures; the report's "ok" field is false only when `verify` finds a
/// violated property.
Json run(const std::string& command, const InputDocument& doc, const Flags& flags);

/// Aligned plain-text rendering of a report (--table).
std::string render_table(const Json& report);

}  // namespace toric::cli
