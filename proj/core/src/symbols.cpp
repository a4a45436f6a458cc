// SPDX-License-Identifier: Apache-2.0
#include "mtf/symbols.hpp"

#include <array>
#include <cmath>

#include <Eigen/LU>

#include "mtf/error.hpp"
#include "mtf/linalg.hpp"
#include "mtf/specfun.hpp"

namespace mtf {

namespace {

constexpr std::array<std::pair<Variant, std::string_view>, 8> kVariantNames{{
    {Variant::mtf, "mtf"},
    {Variant::mtf2, "mtf2"},
    {Variant::bmtf, "bmtf"},
    {Variant::stf2, "stf2"},
    {Variant::amtf, "amtf"},
    {Variant::pi, "pi"},
    {Variant::ktilde, "ktilde"},
    {Variant::stilde, "stilde"},
}};

double side_sign(Side side)
{
  return side == Side::outer ? 1.0 : -1.0;
}

void check_mode(int n)
{
  if (n < 0) {
    throw DomainError("mode index must be non-negative, got " + std::to_string(n));
  }
}

}  // namespace

std::string_view to_string(Variant v)
{
  for (const auto& [variant, name] : kVariantNames) {
    if (variant == v) {
      return name;
    }
  }
  return "?";
}

Variant parse_variant(std::string_view tag)
{
  for (const auto& [variant, name] : kVariantNames) {
    if (name == tag) {
      return variant;
    }
  }
  std::string msg = "unknown variant '" + std::string(tag) + "'; valid tags:";
  for (const auto& entry : kVariantNames) {
    msg += ' ';
    msg += entry.second;
  }
  throw UsageError(msg);
}

std::vector<Variant> operator_variants()
{
  return {Variant::mtf, Variant::mtf2, Variant::bmtf, Variant::stf2, Variant::amtf, Variant::pi};
}

namespace symbols {

Mat2 v_symbol(int n, double kappa, Side side)
{
  check_mode(n);
  const specfun::ScaledProducts p = specfun::scaled_products(n, kappa);
  Mat2 v;
  v << cd{}, p.p_jh, p.p_jh_prime, cd{};
  return side_sign(side) * v;
}

Mat2 k_symbol(int n, double kappa, Side side)
{
  check_mode(n);
  const specfun::ScaledProducts p = specfun::scaled_products(n, kappa);
  Mat2 k;
  k << -p.p_mixed, cd{}, cd{}, p.p_mixed;
  return side_sign(side) * k;
}

Mat4 assemble_a(const Mat2& k, const Mat2& v, double impedance)
{
  Mat4 a;
  a.topLeftCorner<2, 2>() = k;
  a.topRightCorner<2, 2>() = impedance * v;
  a.bottomLeftCorner<2, 2>() = v / impedance;
  a.bottomRightCorner<2, 2>() = k;
  return a;
}

Mat4 a_symbol(int n, const Medium& m, Side side)
{
  check_mode(n);
  m.validate();
  return a_symbol(specfun::scaled_products(n, m.kappa), m, side);
}

Mat4 a_symbol(const specfun::ScaledProducts& p, const Medium& m, Side side)
{
  Mat2 v;
  v << cd{}, p.p_jh, p.p_jh_prime, cd{};
  Mat2 k;
  k << -p.p_mixed, cd{}, cd{}, p.p_mixed;
  return side_sign(side) * assemble_a(k, v, m.impedance());
}

Mat8 assemble_mtf(const Mat4& a_outer, const Mat4& a_inner)
{
  Mat8 out;
  out.topLeftCorner<4, 4>() = a_outer;
  out.topRightCorner<4, 4>() = Mat4::Identity();
  out.bottomLeftCorner<4, 4>() = Mat4::Identity();
  out.bottomRightCorner<4, 4>() = a_inner;
  return out;
}

Mat8 mtf_symbol(int n, const MediaPair& media)
{
  return assemble_mtf(a_symbol(n, media.outer, Side::outer), a_symbol(n, media.inner, Side::inner));
}

Mat4 stf_symbol(int n, const MediaPair& media)
{
  return a_symbol(n, media.outer, Side::outer) + a_symbol(n, media.inner, Side::outer);
}

Mat4 kdiff_symbol(int n, const MediaPair& media)
{
  return a_symbol(n, media.outer, Side::outer) - a_symbol(n, media.inner, Side::outer);
}

Mat8 assemble_b(const Mat4& a_outer, const Mat4& c_inner)
{
  const Mat4 s = a_outer + c_inner;
  Mat8 out;
  out.topLeftCorner<4, 4>() = s;
  out.topRightCorner<4, 4>() = a_outer * s;
  out.bottomLeftCorner<4, 4>() = c_inner * s;
  out.bottomRightCorner<4, 4>() = -s;
  return out;
}

Mat8 b_symbol(int n, const MediaPair& media)
{
  return assemble_b(a_symbol(n, media.outer, Side::outer), a_symbol(n, media.inner, Side::outer));
}

Mat8 assemble_mtf_inverse(const Mat4& a_outer, const Mat4& c_inner)
{
  const Mat4 s_inv = linalg::inverse(a_outer + c_inner);
  Mat8 out;
  out.topLeftCorner<4, 4>() = s_inv;
  out.topRightCorner<4, 4>() = a_outer * s_inv;
  out.bottomLeftCorner<4, 4>() = c_inner * s_inv;
  out.bottomRightCorner<4, 4>() = -s_inv;
  return out;
}

Mat8 mtf_inverse_symbol(int n, const MediaPair& media)
{
  return assemble_mtf_inverse(a_symbol(n, media.outer, Side::outer),
                              a_symbol(n, media.inner, Side::outer));
}

Mat8 a_precond_symbol(int n, const MediaPair& media)
{
  const Mat4 a0 = a_symbol(n, media.outer, Side::outer);
  const Mat4 a1 = a_symbol(n, media.inner, Side::inner);
  Mat8 diag = Mat8::Zero();
  diag.topLeftCorner<4, 4>() = a0;
  diag.bottomRightCorner<4, 4>() = a1;
  return diag * assemble_mtf(a0, a1);
}

Mat8 pi_precond_symbol(int n, const MediaPair& media)
{
  return swap_operator() * mtf_symbol(n, media);
}

Mat8 swap_operator()
{
  Mat8 pi = Mat8::Zero();
  pi.topRightCorner<4, 4>() = Mat4::Identity();
  pi.bottomLeftCorner<4, 4>() = Mat4::Identity();
  return pi;
}

Eigen::MatrixXcd mode_scaling(int n, int copies)
{
  if (n < 1) {
    throw DomainError("mode scaling needs n >= 1");
  }
  Eigen::VectorXcd d(2 * copies);
  for (int c = 0; c < copies; ++c) {
    d(2 * c) = 1.0;
    d(2 * c + 1) = 1.0 / n;
  }
  return d.asDiagonal();
}

Mat4 a_tilde(const Medium& m)
{
  m.validate();
  const double wmu = m.omega * m.mu;
  const double weps = m.omega * m.epsilon;
  Mat4 a = Mat4::Zero();
  a(0, 3) = wmu;
  a(1, 2) = 1.0 / weps;
  a(2, 1) = weps;
  a(3, 0) = 1.0 / wmu;
  return a;
}

AsymptoticSymbols asymptotic_symbols(const MediaPair& media)
{
  media.validate();
  AsymptoticSymbols out;
  out.a_tilde_outer = a_tilde(media.outer);
  const Mat4 c = a_tilde(media.inner);
  out.a_tilde_inner = -c;
  out.mtf_inf = assemble_mtf(out.a_tilde_outer, out.a_tilde_inner);
  out.k_tilde = out.a_tilde_outer - c;
  out.s_tilde = out.a_tilde_outer + c;
  return out;
}

Eigen::MatrixXcd asymptotic_block(Variant v, const MediaPair& media)
{
  const AsymptoticSymbols a = asymptotic_symbols(media);
  const Mat4 c = -a.a_tilde_inner;
  switch (v) {
    case Variant::mtf:
      return a.mtf_inf;
    case Variant::mtf2:
      return a.mtf_inf * a.mtf_inf;
    case Variant::bmtf:
      return assemble_b(a.a_tilde_outer, c) * a.mtf_inf;
    case Variant::stf2:
      return a.s_tilde * a.s_tilde;
    case Variant::amtf: {
      Mat8 diag = Mat8::Zero();
      diag.topLeftCorner<4, 4>() = a.a_tilde_outer;
      diag.bottomRightCorner<4, 4>() = a.a_tilde_inner;
      return diag * a.mtf_inf;
    }
    case Variant::pi:
      return swap_operator() * a.mtf_inf;
    case Variant::ktilde:
      return a.k_tilde;
    case Variant::stilde:
      return a.s_tilde;
  }
  throw UsageError("unsupported variant");
}

Eigen::MatrixXcd operator_block(Variant v, int n, const MediaPair& media)
{
  check_mode(n);
  return operator_block(v, a_symbol(n, media.outer, Side::outer), a_symbol(n, media.inner, Side::outer));
}

int block_dimension(Variant v)
{
  return v == Variant::stf2 || v == Variant::ktilde || v == Variant::stilde ? 4 : 8;
}

Eigen::MatrixXcd operator_block(Variant v, const Mat4& a0, const Mat4& c)
{
  const Mat8 mtf = assemble_mtf(a0, -c);
  switch (v) {
    case Variant::mtf:
      return mtf;
    case Variant::mtf2:
      return mtf * mtf;
    case Variant::bmtf:
      return assemble_b(a0, c) * mtf;
    case Variant::stf2: {
      const Mat4 s = a0 + c;
      return s * s;
    }
    case Variant::amtf: {
      Mat8 diag = Mat8::Zero();
      diag.topLeftCorner<4, 4>() = a0;
      diag.bottomRightCorner<4, 4>() = -c;
      return diag * mtf;
    }
    case Variant::pi:
      return swap_operator() * mtf;
    case Variant::ktilde:
    case Variant::stilde:
      break;
  }
  throw UsageError("variant '" + std::string(to_string(v)) + "' is not a modal operator");
}

double lambda_mu(const MediaPair& media)
{
  const double r = std::sqrt(media.mu_ratio());
  return std::abs(r - 1.0 / r);
}

double lambda_eps(const MediaPair& media)
{
  const double r = std::sqrt(media.epsilon_ratio());
  return std::abs(r - 1.0 / r);
}

double upsilon_mu(const MediaPair& media)
{
  const double r = std::sqrt(media.mu_ratio());
  return std::abs(r + 1.0 / r);
}

double upsilon_eps(const MediaPair& media)
{
  const double r = std::sqrt(media.epsilon_ratio());
  return std::abs(r + 1.0 / r);
}

std::vector<cd> deduplicate(const std::vector<cd>& points, double tol)
{
  std::vector<cd> out;
  for (const cd& p : points) {
    bool seen = false;
    for (const cd& q : out) {
      if (std::abs(p - q) <= tol) {
        seen = true;
        break;
      }
    }
    if (!seen) {
      out.push_back(p);
    }
  }
  return out;
}

AccumulationSet accumulation_points(const MediaPair& media, Variant variant)
{
  media.validate();
  AccumulationSet set;
  set.variant = variant;
  set.lambda_mu = lambda_mu(media);
  set.lambda_eps = lambda_eps(media);
  set.upsilon_mu = upsilon_mu(media);
  set.upsilon_eps = upsilon_eps(media);
  const std::array<double, 2> lambdas{set.lambda_mu, set.lambda_eps};
  const std::array<double, 2> upsilons{set.upsilon_mu, set.upsilon_eps};
  const cd i{0.0, 1.0};

  std::vector<cd> pts;
  switch (variant) {
    case Variant::mtf:
      // Principal root, both global signs.
      for (double sign : {1.0, -1.0}) {
        for (double lam : lambdas) {
          pts.push_back(sign * std::sqrt(2.0 + i * lam));
          pts.push_back(sign * std::sqrt(2.0 - i * lam));
        }
      }
      break;
    case Variant::mtf2:
      for (double lam : lambdas) {
        pts.push_back(2.0 + i * lam);
        pts.push_back(2.0 - i * lam);
      }
      break;
    case Variant::bmtf:
    case Variant::stf2:
      for (double ups : upsilons) {
        pts.emplace_back(ups * ups, 0.0);
      }
      break;
    case Variant::ktilde:
      for (double lam : lambdas) {
        pts.push_back(i * lam);
        pts.push_back(-i * lam);
      }
      break;
    case Variant::stilde:
      for (double ups : upsilons) {
        pts.emplace_back(ups, 0.0);
        pts.emplace_back(-ups, 0.0);
      }
      break;
    case Variant::amtf:
    case Variant::pi:
      throw UsageError("variant '" + std::string(to_string(variant)) +
                       "' has no closed-form accumulation points");
  }
  set.points = deduplicate(pts, 1e-12);
  return set;
}

std::vector<cd> numeric_accumulation_points(const MediaPair& media, Variant variant)
{
  return deduplicate(linalg::eigenvalues(asymptotic_block(variant, media)), 1e-7);
}

}  // namespace symbols
}  // namespace mtf
