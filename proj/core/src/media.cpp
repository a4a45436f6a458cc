// SPDX-License-Identifier: Apache-2.0
#include "mtf/media.hpp"

#include <cmath>
#include <sstream>

#include "mtf/error.hpp"

namespace mtf {

namespace {

bool positive_finite(double v)
{
  return std::isfinite(v) && v > 0.0;
}

}  // namespace

Medium Medium::from_physical(double epsilon, double mu, double omega)
{
  Medium m{epsilon, mu, omega, omega * std::sqrt(mu * epsilon)};
  m.validate();
  return m;
}

Medium Medium::from_preset(double epsilon, double mu, double omega, double kappa)
{
  Medium m{epsilon, mu, omega, kappa};
  m.validate();
  return m;
}

double Medium::impedance() const
{
  return std::sqrt(mu / epsilon);
}

void Medium::validate() const
{
  if (!positive_finite(epsilon) || !positive_finite(mu) || !positive_finite(omega) ||
      !positive_finite(kappa)) {
    std::ostringstream msg;
    msg << "medium parameters must be positive and finite (eps=" << epsilon << ", mu=" << mu
        << ", omega=" << omega << ", kappa=" << kappa << ")";
    throw DomainError(msg.str());
  }
}

MediaPair::MediaPair(const Medium& outer_medium, const Medium& inner_medium)
  : outer(outer_medium), inner(inner_medium)
{
  validate();
}

bool MediaPair::is_homogeneous() const
{
  return outer.epsilon == inner.epsilon && outer.mu == inner.mu && outer.kappa == inner.kappa;
}

void MediaPair::validate() const
{
  outer.validate();
  inner.validate();
  if (std::abs(outer.omega - inner.omega) > 1e-12 * std::abs(outer.omega)) {
    throw DomainError("both media must share the same angular frequency");
  }
}

}  // namespace mtf
