#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "tailcheck/simulation.hpp"
#include "tailcheck/statistics.hpp"

namespace tailcheck {

// Provenance block embedded in every output artifact. Contains only inputs
// that determine the output (command, resolved config, input digests, seed,
// library version) so byte-identical reruns stay byte-identical.
struct RunManifest {
  std::string command;
  nlohmann::json config;
  std::map<std::string, std::string> input_digests;  // path -> fnv1a64 hex
  std::uint64_t seed = 0;
  std::string version;
};

std::string fnv1a64_hex(std::string_view bytes);

// One numeric value per line; '#' comment lines and blank lines are skipped;
// a single non-numeric first line is treated as a header. Any other
// malformed line is a hard error listing every offending line number.
// A leading '[' instead selects the JSON-array-of-numbers format.
std::vector<double> read_numeric_file(const std::string& path);

std::string read_file_bytes(const std::string& path);  // throws InputError
void write_file_bytes(const std::string& path, const std::string& bytes);

nlohmann::json manifest_to_json(const RunManifest& manifest);

nlohmann::json grid_to_json(const GridSpec& grid);
GridSpec grid_from_json(const nlohmann::json& j);

nlohmann::json config_to_json(const SimulationConfig& config);
SimulationConfig config_from_json(const nlohmann::json& j);

nlohmann::json curve_to_json(const EcdfCurve& curve);
EcdfCurve curve_from_json(const nlohmann::json& j);

nlohmann::json table_to_json(const CriticalValueTable& table);
CriticalValueTable table_from_json(const nlohmann::json& j);

// The table FILE holds one per-statistic table document per requested kind:
// { format_version, manifest, tables: [ ... ] }.
std::string table_file_to_string(const std::vector<CriticalValueTable>& tables,
                                 const RunManifest& manifest);
std::vector<CriticalValueTable> table_file_from_string(const std::string& text);

nlohmann::json report_to_json(const StatisticReport& report,
                              const RunManifest& manifest);

// Two-column CSV (value, ecdf level) with the manifest as a '#' comment line.
std::string curve_to_csv(const EcdfCurve& curve, const RunManifest& manifest);

}  // namespace tailcheck
