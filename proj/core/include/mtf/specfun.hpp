// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

namespace mtf::specfun {

using cd = std::complex<double>;

/**
 * Complex number stored as mantissa * 2^exponent.
 *
 * Riccati-Bessel values leave the double range long before their products
 * do (j_n(1) ~ 1e-2868 at n = 1000 while j_n H_n stays O(1/n)), so every
 * table entry is carried in this form and exponents are combined before
 * anything is converted back to a plain complex.
 */
class ScaledComplex
{
public:
  ScaledComplex() = default;
  explicit ScaledComplex(cd value);

  static ScaledComplex from_parts(cd mantissa, long exponent);

  cd mantissa() const { return mant_; }
  long exponent() const { return exp_; }
  bool is_zero() const { return mant_ == cd{}; }

  /// Plain value; overflows to inf or underflows to 0 when out of range.
  cd value() const;
  /// Natural logarithm of the modulus; -inf for zero.
  double log_abs() const;

  ScaledComplex operator-() const { return from_parts(-mant_, exp_); }

  friend ScaledComplex operator*(const ScaledComplex& a, const ScaledComplex& b);
  friend ScaledComplex operator*(const ScaledComplex& a, cd s);
  friend ScaledComplex operator*(cd s, const ScaledComplex& a) { return a * s; }
  friend ScaledComplex operator/(const ScaledComplex& a, const ScaledComplex& b);
  friend ScaledComplex operator+(const ScaledComplex& a, const ScaledComplex& b);
  friend ScaledComplex operator-(const ScaledComplex& a, const ScaledComplex& b) { return a + (-b); }

private:
  void normalize();

  cd mant_{};
  long exp_ = 0;
};

/// Riccati-Bessel functions j_n(z) = sqrt(pi z/2) J_{n+1/2}(z), H_n(z) = sqrt(pi z/2) H^(1)_{n+1/2}(z)
/// and their derivatives for n = 0..n_max.
struct RiccatiTable
{
  int n_max = 0;
  cd argument{};
  std::vector<ScaledComplex> j;
  std::vector<ScaledComplex> j_prime;
  std::vector<ScaledComplex> h;
  std::vector<ScaledComplex> h_prime;

  /// |j_n H'_n - j'_n H_n - i|, evaluated on the scaled representation.
  double wronskian_defect(int n) const;
  double max_wronskian_defect() const;
};

/// Largest Wronskian defect tolerated before a table is rejected.
inline constexpr double kAccuracyLimit = 1e-6;

/**
 * Fill a RiccatiTable for n = 0..n_max.
 *
 * z must be real positive or purely imaginary with positive imaginary part.
 * j_n comes from Miller's downward recurrence normalised against the closed
 * forms of j_0 or j_1; H_n from the upward recurrence, which is stable for
 * the dominant solution.
 *
 * Throws DomainError for unsupported arguments and AccuracyError when any
 * Wronskian defect exceeds kAccuracyLimit.
 */
RiccatiTable riccati_table(int n_max, cd z);

/// The three mode functions entering the V and K symbols.
struct ScaledProducts
{
  int n = 0;
  cd p_jh{};        ///< 2i j_n H_n
  cd p_jh_prime{};  ///< -2i j'_n H'_n
  cd p_mixed{};     ///< i (j_n H'_n + j'_n H_n)
};

/// Products for a single mode at real t > 0.
ScaledProducts scaled_products(int n, double t);

/// Products for n = 0..n_max from one table; entry k holds mode k.
std::vector<ScaledProducts> scaled_products_table(int n_max, double t);

}  // namespace mtf::specfun
