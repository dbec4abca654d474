#pragma once

#include <filesystem>
#include <string>

#include "enet/search.hpp"

namespace enet {

// Machine-readable outputs. JSON is the canonical format (doubles as
// shortest round-trip decimals); CSV is provided for spreadsheets and
// serializes doubles with 17 significant digits so reloading reproduces the
// exact values.

std::string summary_to_csv(const SearchResult& result);
std::string summary_to_json(const SearchResult& result);
std::string preferable_to_json(const SearchResult& result, const PreferableModel& model);
std::string sensitivity_to_json(const SensitivityReport& report);
std::string sensitivity_to_csv(const SensitivityReport& report);
// Selection frequencies, one row per coefficient (companion of the CSV rep table).
std::string sensitivity_frequency_to_csv(const SensitivityReport& report);

// Throws numeric_error on I/O failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace enet
