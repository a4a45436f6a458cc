// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mtf/media.hpp"

namespace mtf {

enum class Material { teflon, ferrite, custom };
enum class Regime { lf, hf, vhf, custom };

/// A named material/frequency preset: a scatterer immersed in vacuum.
struct Scenario
{
  std::string name;
  Material material = Material::custom;
  Regime regime = Regime::custom;
  MediaPair media;
  double frequency_hz = 0.0;  ///< 0 when unknown (custom files)
  double wavelength_m = 0.0;  ///< 0 when unknown (custom files)
};

/// Names of the six presets, teflon-lf ... ferrite-vhf.
std::vector<std::string> scenario_names();

/// Look up a preset; UsageError listing the valid names otherwise.
Scenario get_scenario(std::string_view name);

std::vector<Scenario> all_scenarios();

/**
 * Parse a key=value material description.
 *
 * Keys: eps0, mu0, eps1, mu1, kappa0, kappa1 (all required). Blank lines and
 * '#' comments are ignored. omega is derived from the exterior medium as
 * kappa0 / sqrt(mu0 * eps0); wavenumbers are kept verbatim.
 */
Scenario parse_custom_scenario(std::istream& in, std::string name = "custom");

/// parse_custom_scenario on a file; IoError when it cannot be opened.
Scenario load_custom_scenario(const std::string& path);

/// Truncation used for modal operators: ceil(1.5 * kappa_1) + 20.
int default_truncation(const Scenario& scenario);

/// Mode cap used for spectrum plots: 150 / 200 / 500 for LF / HF / VHF.
int default_spectrum_truncation(const Scenario& scenario);

}  // namespace mtf
