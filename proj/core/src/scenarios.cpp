// SPDX-License-Identifier: Apache-2.0
#include "mtf/scenarios.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "mtf/error.hpp"

namespace mtf {

namespace {

struct MaterialRow
{
  Material material;
  const char* label;
  double epsilon_r;
  double mu_r;
};

struct RegimeRow
{
  Regime regime;
  const char* label;
  double frequency_hz;
  double wavelength_m;
  double kappa0;
  double kappa1_teflon;
  double kappa1_ferrite;
};

constexpr std::array<MaterialRow, 2> kMaterials{{
    {Material::teflon, "teflon", 2.1, 1.0},
    {Material::ferrite, "ferrite", 2.5, 1.6},
}};

// Wavenumbers as tabulated (rounded); they are not recomputed from eps_r, mu_r.
constexpr std::array<RegimeRow, 3> kRegimes{{
    {Regime::lf, "lf", 50e6, 6.0, 1.05, 1.52, 2.09},
    {Regime::hf, "hf", 300e6, 1.0, 6.29, 9.11, 12.6},
    {Regime::vhf, "vhf", 10e9, 0.029, 210.0, 304.0, 419.0},
}};

Scenario make_preset(const MaterialRow& mat, const RegimeRow& reg)
{
  Scenario s;
  s.name = std::string(mat.label) + "-" + reg.label;
  s.material = mat.material;
  s.regime = reg.regime;
  const double omega = reg.kappa0;  // vacuum exterior: kappa0 = omega
  const double kappa1 = mat.material == Material::teflon ? reg.kappa1_teflon : reg.kappa1_ferrite;
  s.media = MediaPair(Medium::from_preset(1.0, 1.0, omega, reg.kappa0),
                      Medium::from_preset(mat.epsilon_r, mat.mu_r, omega, kappa1));
  s.frequency_hz = reg.frequency_hz;
  s.wavelength_m = reg.wavelength_m;
  return s;
}

std::string trim(std::string_view s)
{
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

std::vector<std::string> scenario_names()
{
  std::vector<std::string> names;
  for (const auto& mat : kMaterials) {
    for (const auto& reg : kRegimes) {
      names.push_back(std::string(mat.label) + "-" + reg.label);
    }
  }
  return names;
}

std::vector<Scenario> all_scenarios()
{
  std::vector<Scenario> out;
  for (const auto& mat : kMaterials) {
    for (const auto& reg : kRegimes) {
      out.push_back(make_preset(mat, reg));
    }
  }
  return out;
}

Scenario get_scenario(std::string_view name)
{
  for (const auto& mat : kMaterials) {
    for (const auto& reg : kRegimes) {
      if (name == std::string(mat.label) + "-" + reg.label) {
        return make_preset(mat, reg);
      }
    }
  }
  std::ostringstream msg;
  msg << "unknown scenario '" << name << "'; valid names:";
  for (const auto& n : scenario_names()) {
    msg << ' ' << n;
  }
  throw UsageError(msg.str());
}

Scenario parse_custom_scenario(std::istream& in, std::string name)
{
  static const std::array<const char*, 6> kKeys{"eps0", "mu0", "eps1", "mu1", "kappa0", "kappa1"};
  std::map<std::string, double> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string content = trim(line);
    if (content.empty()) {
      continue;
    }
    const auto eq = content.find('=');
    if (eq == std::string::npos) {
      throw UsageError("custom scenario line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key = trim(std::string_view(content).substr(0, eq));
    const std::string text = trim(std::string_view(content).substr(eq + 1));
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw UsageError("custom scenario line " + std::to_string(line_no) + ": unknown key '" + key +
                       "'");
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw UsageError("custom scenario line " + std::to_string(line_no) + ": bad number '" + text +
                       "'");
    }
    values[key] = v;
  }
  for (const char* key : kKeys) {
    if (!values.contains(key)) {
      throw UsageError(std::string("custom scenario is missing key '") + key + "'");
    }
  }
  Scenario s;
  s.name = std::move(name);
  try {
    const double omega = values["kappa0"] / std::sqrt(values["mu0"] * values["eps0"]);
    s.media = MediaPair(Medium::from_preset(values["eps0"], values["mu0"], omega, values["kappa0"]),
                        Medium::from_preset(values["eps1"], values["mu1"], omega, values["kappa1"]));
  } catch (const DomainError& e) {
    throw UsageError(std::string("custom scenario: ") + e.what());
  }
  return s;
}

Scenario load_custom_scenario(const std::string& path)
{
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open custom scenario file '" + path + "'");
  }
  return parse_custom_scenario(in, "custom");
}

int default_truncation(const Scenario& scenario)
{
  return static_cast<int>(std::ceil(1.5 * scenario.media.inner.kappa)) + 20;
}

int default_spectrum_truncation(const Scenario& scenario)
{
  switch (scenario.regime) {
    case Regime::lf:
      return 150;
    case Regime::hf:
      return 200;
    case Regime::vhf:
      return 500;
    case Regime::custom:
      break;
  }
  return default_truncation(scenario);
}

}  // namespace mtf
