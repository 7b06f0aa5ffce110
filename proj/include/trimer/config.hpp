#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "trimer/hamiltonian.hpp"
#include "trimer/units.hpp"

namespace trimer {

/// section -> key -> value. Keys outside a section go to "".
using IniData = std::map<std::string, std::map<std::string, std::string>>;

/// Minimal INI reader: [section], key = value, '#' or ';' comments.
/// Throws std::invalid_argument with the line number on malformed input.
IniData parse_ini(const std::string& text);

struct RunConfig {
  /// [model]: j1, d, h, kt in units of J.
  std::optional<double> j1, d, h, kt;
  /// [compound]: j_wavenumber, j1_wavenumber, d_over_j, g (required).
  std::optional<PhysicalParams> compound;
};

/// Interprets [model] and [compound]; unknown sections or keys are errors.
RunConfig config_from_ini(const IniData& ini);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace trimer
