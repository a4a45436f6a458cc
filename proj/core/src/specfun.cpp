// SPDX-License-Identifier: Apache-2.0
#include "mtf/specfun.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "mtf/error.hpp"

namespace mtf::specfun {

namespace {

constexpr cd kI{0.0, 1.0};

// Rescaling threshold for the recurrences: 2^500.
constexpr int kRescaleBits = 500;
const double kRescaleLimit = std::ldexp(1.0, kRescaleBits);

double max_component(cd v)
{
  return std::max(std::abs(v.real()), std::abs(v.imag()));
}

int clamp_exponent(long e)
{
  return static_cast<int>(std::clamp<long>(e, -4000, 4000));
}

void validate_argument(cd z)
{
  const bool real_positive = z.imag() == 0.0 && z.real() > 0.0;
  const bool imag_positive = z.real() == 0.0 && z.imag() > 0.0;
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !(real_positive || imag_positive)) {
    std::ostringstream msg;
    msg << "Riccati-Bessel argument must be real positive or purely imaginary with positive "
           "imaginary part, got "
        << z;
    throw DomainError(msg.str());
  }
  if (imag_positive && z.imag() > 700.0) {
    throw DomainError("imaginary Riccati-Bessel argument too large (exp overflow)");
  }
}

// Raw recurrence output: j for 0..n_max+1, H for 0..n_max, plus H_{-1}.
struct RawTable
{
  std::vector<ScaledComplex> j;
  std::vector<ScaledComplex> h;
  ScaledComplex h_minus1;
};

RawTable compute_raw(int n_max, cd z)
{
  validate_argument(z);
  if (n_max < 0) {
    throw DomainError("mode cap must be non-negative");
  }
  const double modulus = std::abs(z);
  RawTable raw;

  // Miller's algorithm: start far enough past the turning point n ~ |z| that
  // the dominant-solution contamination has decayed below double precision.
  const int top = std::max(n_max + 1, static_cast<int>(std::ceil(modulus))) + 64 +
                  static_cast<int>(std::ceil(10.0 * std::cbrt(modulus)));
  raw.j.resize(static_cast<std::size_t>(n_max) + 2);
  cd next{0.0, 0.0};
  cd cur{1.0, 0.0};
  long exponent = 0;
  for (int k = top; k >= 1; --k) {
    if (k <= n_max + 1) {
      raw.j[static_cast<std::size_t>(k)] = ScaledComplex::from_parts(cur, exponent);
    }
    const cd prev = (2.0 * k + 1.0) / z * cur - next;
    next = cur;
    cur = prev;
    if (max_component(cur) > kRescaleLimit) {
      cur = std::ldexp(1.0, -kRescaleBits) * cur;
      next = std::ldexp(1.0, -kRescaleBits) * next;
      exponent += kRescaleBits;
    }
  }
  raw.j[0] = ScaledComplex::from_parts(cur, exponent);

  // Normalise on whichever closed form is larger; j_0 and j_1 never vanish together.
  const cd j0 = std::sin(z);
  const cd j1 = std::sin(z) / z - std::cos(z);
  const std::size_t anchor = std::abs(j0) >= std::abs(j1) ? 0 : 1;
  const ScaledComplex scale = ScaledComplex(anchor == 0 ? j0 : j1) / raw.j[anchor];
  for (auto& v : raw.j) {
    v = v * scale;
  }

  // Upward recurrence for H, starting from H_{-1} = e^{iz}, H_0 = -i e^{iz}.
  raw.h.resize(static_cast<std::size_t>(n_max) + 1);
  const cd e = std::exp(kI * z);
  raw.h_minus1 = ScaledComplex(e);
  cd prev = e;
  cur = -kI * e;
  exponent = 0;
  raw.h[0] = ScaledComplex(cur);
  for (int n = 0; n < n_max; ++n) {
    const cd nxt = (2.0 * n + 1.0) / z * cur - prev;
    prev = cur;
    cur = nxt;
    if (max_component(cur) > kRescaleLimit) {
      cur = std::ldexp(1.0, -kRescaleBits) * cur;
      prev = std::ldexp(1.0, -kRescaleBits) * prev;
      exponent += kRescaleBits;
    }
    raw.h[static_cast<std::size_t>(n) + 1] = ScaledComplex::from_parts(cur, exponent);
  }
  return raw;
}

ScaledComplex j_prime_at(const RawTable& raw, int n, cd z)
{
  const auto k = static_cast<std::size_t>(n);
  return raw.j[k] * ((n + 1.0) / z) - raw.j[k + 1];
}

ScaledComplex h_prime_at(const RawTable& raw, int n, cd z)
{
  const auto k = static_cast<std::size_t>(n);
  const ScaledComplex& below = n == 0 ? raw.h_minus1 : raw.h[k - 1];
  return below - raw.h[k] * (static_cast<double>(n) / z);
}

void check_wronskian(double defect, int n, cd z)
{
  if (!(defect <= kAccuracyLimit)) {
    std::ostringstream msg;
    msg << "Riccati-Bessel evaluation lost precision at n = " << n << ", z = " << z
        << " (Wronskian defect " << defect << ")";
    throw AccuracyError(msg.str());
  }
}

}  // namespace

ScaledComplex::ScaledComplex(cd value) : mant_(value)
{
  normalize();
}

ScaledComplex ScaledComplex::from_parts(cd mantissa, long exponent)
{
  ScaledComplex out;
  out.mant_ = mantissa;
  out.exp_ = exponent;
  out.normalize();
  return out;
}

void ScaledComplex::normalize()
{
  const double m = max_component(mant_);
  if (m == 0.0) {
    mant_ = cd{};
    exp_ = 0;
    return;
  }
  if (!std::isfinite(m)) {
    return;
  }
  int e = 0;
  std::frexp(m, &e);
  mant_ = cd{std::ldexp(mant_.real(), -e), std::ldexp(mant_.imag(), -e)};
  exp_ += e;
}

cd ScaledComplex::value() const
{
  const int e = clamp_exponent(exp_);
  return {std::ldexp(mant_.real(), e), std::ldexp(mant_.imag(), e)};
}

double ScaledComplex::log_abs() const
{
  if (is_zero()) {
    return -std::numeric_limits<double>::infinity();
  }
  return std::log(std::abs(mant_)) + static_cast<double>(exp_) * std::numbers::ln2;
}

ScaledComplex operator*(const ScaledComplex& a, const ScaledComplex& b)
{
  return ScaledComplex::from_parts(a.mant_ * b.mant_, a.exp_ + b.exp_);
}

ScaledComplex operator*(const ScaledComplex& a, cd s)
{
  return ScaledComplex::from_parts(a.mant_ * s, a.exp_);
}

ScaledComplex operator/(const ScaledComplex& a, const ScaledComplex& b)
{
  return ScaledComplex::from_parts(a.mant_ / b.mant_, a.exp_ - b.exp_);
}

ScaledComplex operator+(const ScaledComplex& a, const ScaledComplex& b)
{
  if (a.is_zero()) {
    return b;
  }
  if (b.is_zero()) {
    return a;
  }
  const ScaledComplex& big = a.exp_ >= b.exp_ ? a : b;
  const ScaledComplex& small = a.exp_ >= b.exp_ ? b : a;
  const int shift = clamp_exponent(small.exp_ - big.exp_);
  const cd aligned{std::ldexp(small.mant_.real(), shift), std::ldexp(small.mant_.imag(), shift)};
  return ScaledComplex::from_parts(big.mant_ + aligned, big.exp_);
}

double RiccatiTable::wronskian_defect(int n) const
{
  const auto k = static_cast<std::size_t>(n);
  const ScaledComplex w = j[k] * h_prime[k] - j_prime[k] * h[k];
  return std::abs(w.value() - kI);
}

double RiccatiTable::max_wronskian_defect() const
{
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    worst = std::max(worst, wronskian_defect(n));
  }
  return worst;
}

RiccatiTable riccati_table(int n_max, cd z)
{
  const RawTable raw = compute_raw(n_max, z);
  RiccatiTable table;
  table.n_max = n_max;
  table.argument = z;
  const auto size = static_cast<std::size_t>(n_max) + 1;
  table.j.assign(raw.j.begin(), raw.j.begin() + static_cast<std::ptrdiff_t>(size));
  table.h = raw.h;
  table.j_prime.reserve(size);
  table.h_prime.reserve(size);
  for (int n = 0; n <= n_max; ++n) {
    table.j_prime.push_back(j_prime_at(raw, n, z));
    table.h_prime.push_back(h_prime_at(raw, n, z));
  }
  for (int n = 0; n <= n_max; ++n) {
    check_wronskian(table.wronskian_defect(n), n, z);
  }
  return table;
}

std::vector<ScaledProducts> scaled_products_table(int n_max, double t)
{
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError("scaled products need a real positive argument");
  }
  const cd z{t, 0.0};
  const RawTable raw = compute_raw(n_max, z);
  std::vector<ScaledProducts> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const auto k = static_cast<std::size_t>(n);
    const ScaledComplex& jn = raw.j[k];
    const ScaledComplex& hn = raw.h[k];
    const ScaledComplex jp = j_prime_at(raw, n, z);
    const ScaledComplex hp = h_prime_at(raw, n, z);
    check_wronskian(std::abs((jn * hp - jp * hn).value() - kI), n, z);

    const ScaledComplex& h_below = n == 0 ? raw.h_minus1 : raw.h[k - 1];
    // j H' + j' H rewritten without the O(n/t) cancellation of the two terms.
    const ScaledComplex mixed = jn * h_below + (jn * hn) * (1.0 / z) - raw.j[k + 1] * hn;

    ScaledProducts p;
    p.n = n;
    p.p_jh = 2.0 * kI * (jn * hn).value();
    p.p_jh_prime = -2.0 * kI * (jp * hp).value();
    p.p_mixed = kI * mixed.value();
    out.push_back(p);
  }
  return out;
}

ScaledProducts scaled_products(int n, double t)
{
  if (n < 0) {
    throw DomainError("mode index must be non-negative");
  }
  return scaled_products_table(n, t).back();
}

}  // namespace mtf::specfun
