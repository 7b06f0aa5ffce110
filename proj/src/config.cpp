#include "trimer/config.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "trimer/export.hpp"

namespace trimer {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double number(const std::string& section, const std::string& key, const std::string& text) {
  double v = 0.0;
  const auto r = std::from_chars(text.data(), text.data() + text.size(), v);
  if (r.ec != std::errc() || r.ptr != text.data() + text.size())
    throw std::invalid_argument("[" + section + "] " + key + ": not a number: '" + text + "'");
  return v;
}

}  // namespace

IniData parse_ini(const std::string& text) {
  IniData ini;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto comment = line.find_first_of("#;");
    line = trim(comment == std::string::npos ? line : line.substr(0, comment));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw std::invalid_argument("line " + std::to_string(lineno) + ": unterminated section");
      section = trim(line.substr(1, line.size() - 2));
      ini[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw std::invalid_argument("line " + std::to_string(lineno) + ": empty key");
    ini[section][key] = trim(line.substr(eq + 1));
  }
  return ini;
}

RunConfig config_from_ini(const IniData& ini) {
  RunConfig cfg;
  for (const auto& [section, keys] : ini) {
    if (section == "model") {
      for (const auto& [key, value] : keys) {
        const double v = number(section, key, value);
        if (key == "j1") cfg.j1 = v;
        else if (key == "d") cfg.d = v;
        else if (key == "h") cfg.h = v;
        else if (key == "kt") cfg.kt = v;
        else throw std::invalid_argument("[model] unknown key '" + key + "'");
      }
    } else if (section == "compound") {
      PhysicalParams c;
      bool has_j = false, has_g = false;
      for (const auto& [key, value] : keys) {
        const double v = number(section, key, value);
        if (key == "j_wavenumber") c.j_wavenumber = v, has_j = true;
        else if (key == "j1_wavenumber") c.j1_wavenumber = v;
        else if (key == "d_over_j") c.d_over_j = v;
        else if (key == "g") c.g_factor = v, has_g = true;
        else throw std::invalid_argument("[compound] unknown key '" + key + "'");
      }
      if (!has_j) throw std::invalid_argument("[compound] j_wavenumber is required");
      if (!has_g) throw std::invalid_argument("[compound] g is required (no default g-factor)");
      c.temperature_kelvin = 1.0;
      c.validate();
      cfg.compound = c;
    } else {
      throw std::invalid_argument("unknown config section [" + section + "]");
    }
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  try {
    return config_from_ini(parse_ini(read_text_file(path)));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

}  // namespace trimer
