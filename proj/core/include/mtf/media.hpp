// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace mtf {

/// Electromagnetic parameters of one homogeneous subdomain (vacuum-relative units).
struct Medium
{
  double epsilon = 1.0;
  double mu = 1.0;
  double omega = 1.0;
  double kappa = 1.0;

  /// kappa derived as omega * sqrt(mu * epsilon).
  static Medium from_physical(double epsilon, double mu, double omega);
  /// kappa stored verbatim (tabulated presets carry rounded wavenumbers).
  static Medium from_preset(double epsilon, double mu, double omega, double kappa);

  /// sqrt(mu / epsilon), the factor coupling the two trace components.
  double impedance() const;

  void validate() const;
};

/// Exterior (j = 0) and interior (j = 1) media sharing one angular frequency.
struct MediaPair
{
  Medium outer;
  Medium inner;

  MediaPair() = default;
  MediaPair(const Medium& outer_medium, const Medium& inner_medium);

  double omega() const { return outer.omega; }

  /// Relative permittivity eps_1 / eps_0.
  double epsilon_ratio() const { return inner.epsilon / outer.epsilon; }
  /// Relative permeability mu_1 / mu_0.
  double mu_ratio() const { return inner.mu / outer.mu; }

  bool is_homogeneous() const;

  void validate() const;
};

}  // namespace mtf
