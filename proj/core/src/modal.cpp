// SPDX-License-Identifier: Apache-2.0
#include "mtf/modal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "mtf/error.hpp"
#include "mtf/linalg.hpp"
#include "mtf/parallel.hpp"
#include "mtf/specfun.hpp"

namespace mtf::modal {

using cd = std::complex<double>;

namespace {

struct SideTables
{
  std::vector<specfun::ScaledProducts> outer;
  std::vector<specfun::ScaledProducts> inner;
};

SideTables side_tables(const MediaPair& media, int n_max)
{
  return {specfun::scaled_products_table(n_max, media.outer.kappa),
          specfun::scaled_products_table(n_max, media.inner.kappa)};
}

Mat4 outer_symbol(const SideTables& t, const MediaPair& media, int n)
{
  return symbols::a_symbol(t.outer[static_cast<std::size_t>(n)], media.outer, Side::outer);
}

Mat4 inner_c_symbol(const SideTables& t, const MediaPair& media, int n)
{
  return symbols::a_symbol(t.inner[static_cast<std::size_t>(n)], media.inner, Side::outer);
}

Eigen::VectorXd scaling_diag(int n, int copies)
{
  Eigen::VectorXd d(2 * copies);
  for (int c = 0; c < copies; ++c) {
    d(2 * c) = 1.0;
    d(2 * c + 1) = 1.0 / n;
  }
  return d;
}

void require_operator_variant(Variant v)
{
  if (v == Variant::ktilde || v == Variant::stilde) {
    throw UsageError("variant '" + std::string(to_string(v)) + "' is not a modal operator");
  }
}

}  // namespace

void ModalGrid::validate() const
{
  if (n_min < 1 || n_max < n_min) {
    throw UsageError("modal grid needs 1 <= n_min <= n_max, got n_min = " + std::to_string(n_min) +
                     ", n_max = " + std::to_string(n_max));
  }
}

std::size_t ModalGrid::copy_count() const
{
  std::size_t total = 0;
  for (int n = n_min; n <= n_max; ++n) {
    total += static_cast<std::size_t>(multiplicity(n));
  }
  return total;
}

Eigen::Matrix4d pairing_m()
{
  Eigen::Matrix4d m;
  m << 0, 0, 0, 1,
       0, 0, -1, 0,
       0, 1, 0, 0,
       -1, 0, 0, 0;
  return m;
}

Eigen::Matrix<double, 8, 8> pairing_mm()
{
  Eigen::Matrix<double, 8, 8> mm = Eigen::Matrix<double, 8, 8>::Zero();
  mm.topLeftCorner<4, 4>() = pairing_m();
  mm.bottomRightCorner<4, 4>() = -pairing_m();
  return mm;
}

Eigen::MatrixXd theta(int copies)
{
  Eigen::VectorXd d(2 * copies);
  for (int c = 0; c < copies; ++c) {
    d(2 * c) = 1.0;
    d(2 * c + 1) = -1.0;
  }
  return d.asDiagonal();
}

Eigen::VectorXd norm_weights(int n, int copies)
{
  if (n < 0) {
    throw DomainError("norm weights need n >= 0");
  }
  Eigen::VectorXd d(2 * copies);
  for (int c = 0; c < copies; ++c) {
    d(2 * c) = 1.0 + n;
    d(2 * c + 1) = 1.0 / (1.0 + n);
  }
  return d;
}

std::array<cd, 2> exact_norm_weights(int n)
{
  if (n < 0) {
    throw DomainError("norm weights need n >= 0");
  }
  const specfun::RiccatiTable t = specfun::riccati_table(n, cd{0.0, 1.0});
  const auto k = static_cast<std::size_t>(n);
  return {(t.j_prime[k] * t.h_prime[k]).value(), (t.j[k] * t.h[k]).value()};
}

ModalOperator::ModalOperator(Variant variant, MediaPair media, ModalGrid grid,
                             std::vector<Eigen::MatrixXcd> blocks, double scaling, bool weighted)
    : variant_(variant),
      media_(media),
      grid_(grid),
      blocks_(std::move(blocks)),
      scaling_(scaling),
      weighted_(weighted),
      block_dim_(symbols::block_dimension(variant)),
      dimension_(grid.copy_count() * static_cast<std::size_t>(block_dim_))
{
  grid_.validate();
  if (static_cast<int>(blocks_.size()) != grid_.mode_count()) {
    throw DomainError("modal operator: block count does not match the grid");
  }
  for (const auto& b : blocks_) {
    if (b.rows() != block_dim_ || b.cols() != block_dim_) {
      throw DomainError("modal operator: block has the wrong size for its variant");
    }
  }
}

const Eigen::MatrixXcd& ModalOperator::block(int n) const
{
  if (n < grid_.n_min || n > grid_.n_max) {
    throw DomainError("mode " + std::to_string(n) + " is outside the grid");
  }
  return blocks_[static_cast<std::size_t>(n - grid_.n_min)];
}

Eigen::VectorXcd ModalOperator::apply(const Eigen::VectorXcd& x) const
{
  if (static_cast<std::size_t>(x.size()) != dimension_) {
    throw DomainError("modal operator: vector length " + std::to_string(x.size()) +
                      " does not match dimension " + std::to_string(dimension_));
  }
  Eigen::VectorXcd y(x.size());
  Eigen::Index offset = 0;
  for (int n = grid_.n_min; n <= grid_.n_max; ++n) {
    const auto& b = blocks_[static_cast<std::size_t>(n - grid_.n_min)];
    for (int m = 0; m < grid_.multiplicity(n); ++m) {
      y.segment(offset, block_dim_).noalias() = b * x.segment(offset, block_dim_);
      offset += block_dim_;
    }
  }
  return y;
}

ModalOperator ModalOperator::norm_weighted() const
{
  if (weighted_) {
    return *this;
  }
  const int copies = block_dim_ / 2;
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(blocks_.size());
  for (int n = grid_.n_min; n <= grid_.n_max; ++n) {
    const Eigen::VectorXd s = norm_weights(n, copies).cwiseSqrt();
    out.push_back(s.asDiagonal() * blocks_[static_cast<std::size_t>(n - grid_.n_min)] *
                  s.cwiseInverse().asDiagonal());
  }
  return {variant_, media_, grid_, std::move(out), scaling_, true};
}

Eigen::VectorXd ModalOperator::weight_vector() const
{
  Eigen::VectorXd w(static_cast<Eigen::Index>(dimension_));
  const int copies = block_dim_ / 2;
  Eigen::Index offset = 0;
  for (int n = grid_.n_min; n <= grid_.n_max; ++n) {
    const Eigen::VectorXd d = norm_weights(n, copies);
    for (int m = 0; m < grid_.multiplicity(n); ++m) {
      w.segment(offset, block_dim_) = d;
      offset += block_dim_;
    }
  }
  return w;
}

Eigen::MatrixXcd ModalOperator::to_dense() const
{
  const auto dim = static_cast<Eigen::Index>(dimension_);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::Index offset = 0;
  for (int n = grid_.n_min; n <= grid_.n_max; ++n) {
    for (int m = 0; m < grid_.multiplicity(n); ++m) {
      a.block(offset, offset, block_dim_, block_dim_) = block(n);
      offset += block_dim_;
    }
  }
  return a;
}

double normalization(Variant variant, const MediaPair& media)
{
  switch (variant) {
    case Variant::mtf:
      return 1.0 / std::numbers::sqrt2;
    case Variant::mtf2:
      return 0.5;
    case Variant::bmtf:
    case Variant::stf2: {
      const double u = std::min(symbols::upsilon_mu(media), symbols::upsilon_eps(media));
      return 1.0 / (u * u);
    }
    case Variant::amtf:
    case Variant::pi:
      return 1.0;
    case Variant::ktilde:
    case Variant::stilde:
      break;
  }
  require_operator_variant(variant);
  return 1.0;
}

ModalOperator build_operator(Variant variant, const MediaPair& media, const ModalGrid& grid, bool scaled)
{
  require_operator_variant(variant);
  media.validate();
  grid.validate();
  const SideTables tables = side_tables(media, grid.n_max);
  const double scaling = scaled ? normalization(variant, media) : 1.0;
  std::vector<Eigen::MatrixXcd> blocks(static_cast<std::size_t>(grid.mode_count()));
  parallel_for(blocks.size(), [&](std::size_t i) {
    const int n = grid.n_min + static_cast<int>(i);
    blocks[i] = scaling * symbols::operator_block(variant, outer_symbol(tables, media, n),
                                                  inner_c_symbol(tables, media, n));
  });
  return {variant, media, grid, std::move(blocks), scaling};
}

std::vector<cd> reference_points(const MediaPair& media, Variant variant, bool scaled, bool* closed_form)
{
  std::vector<cd> points;
  bool closed = true;
  if (variant == Variant::amtf || variant == Variant::pi) {
    points = symbols::numeric_accumulation_points(media, variant);
    closed = false;
  } else if (variant == Variant::stf2) {
    points = symbols::accumulation_points(media, Variant::bmtf).points;
  } else {
    points = symbols::accumulation_points(media, variant).points;
  }
  if (scaled) {
    const double s = normalization(variant, media);
    for (cd& p : points) {
      p *= s;
    }
  }
  if (closed_form != nullptr) {
    *closed_form = closed;
  }
  linalg::sort_lexicographic(points);
  return points;
}

SpectrumReport spectrum_scan(const MediaPair& media, Variant variant, int n_max, bool scaled)
{
  const ModalGrid grid{1, n_max, false};
  grid.validate();
  const ModalOperator op = build_operator(variant, media, grid, scaled);

  SpectrumReport report;
  report.variant = variant;
  report.scaled = scaled;
  report.accumulation = reference_points(media, variant, scaled, &report.closed_form);
  report.modes.resize(static_cast<std::size_t>(grid.mode_count()));
  parallel_for(report.modes.size(), [&](std::size_t i) {
    ModeSpectrum& ms = report.modes[i];
    ms.n = grid.n_min + static_cast<int>(i);
    ms.eigenvalues = linalg::eigenvalues(op.blocks()[i]);
    linalg::sort_lexicographic(ms.eigenvalues);
    ms.dist_to_accum = linalg::nearest_distances(ms.eigenvalues, report.accumulation);
    ms.hausdorff = linalg::hausdorff_distance(ms.eigenvalues, report.accumulation);
  });
  double min_mod = std::numeric_limits<double>::infinity();
  for (const auto& ms : report.modes) {
    for (const cd& l : ms.eigenvalues) {
      min_mod = std::min(min_mod, std::abs(l));
    }
  }
  report.min_modulus = min_mod;
  return report;
}

namespace {

double quotient_of(const Mat8& symbol, int n)
{
  const Eigen::MatrixXcd a =
      pairing_mm().cast<cd>() * symbol * theta(4).cast<cd>();
  const Eigen::VectorXd w = norm_weights(n, 4);
  return linalg::weighted_hermitian_min_eig(a, std::span<const double>(w.data(), static_cast<std::size_t>(w.size())));
}

Mat8 asymptotic_mtf_at(const Mat8& mtf_inf, int n)
{
  const Eigen::VectorXd t = scaling_diag(n, 4);
  return t.cwiseInverse().asDiagonal() * mtf_inf * t.asDiagonal();
}

}  // namespace

double coercivity_quotient(int n, const MediaPair& media, bool use_asymptotic)
{
  if (n < 1) {
    throw DomainError("coercivity quotient needs n >= 1");
  }
  if (use_asymptotic) {
    return quotient_of(asymptotic_mtf_at(symbols::asymptotic_symbols(media).mtf_inf, n), n);
  }
  return quotient_of(symbols::mtf_symbol(n, media), n);
}

double coercivity_limit(const MediaPair& media)
{
  double best = std::numeric_limits<double>::infinity();
  for (const Medium* m : {&media.outer, &media.inner}) {
    const double wmu = m->omega * m->mu;
    const double weps = m->omega * m->epsilon;
    best = std::min({best, wmu, 1.0 / wmu, weps, 1.0 / weps});
  }
  return best;
}

std::vector<CoercivityRow> coercivity_scan(const MediaPair& media, int n_max)
{
  if (n_max < 1) {
    throw UsageError("coercivity scan needs n_max >= 1");
  }
  media.validate();
  const SideTables tables = side_tables(media, n_max);
  const Mat8 mtf_inf = symbols::asymptotic_symbols(media).mtf_inf;
  std::vector<CoercivityRow> rows(static_cast<std::size_t>(n_max));
  parallel_for(rows.size(), [&](std::size_t i) {
    const int n = static_cast<int>(i) + 1;
    const Mat8 exact = symbols::assemble_mtf(outer_symbol(tables, media, n), -inner_c_symbol(tables, media, n));
    rows[i] = {n, quotient_of(exact, n), quotient_of(asymptotic_mtf_at(mtf_inf, n), n)};
  });
  return rows;
}

RhsModel parse_rhs_model(std::string_view tag)
{
  if (tag == "mie-like") {
    return RhsModel::mie_like;
  }
  if (tag == "flat") {
    return RhsModel::flat;
  }
  if (tag == "random") {
    return RhsModel::random;
  }
  throw UsageError("unknown right-hand side model '" + std::string(tag) + "'; valid: mie-like flat random");
}

Eigen::VectorXcd synthetic_rhs(const MediaPair& media, const ModalGrid& grid, RhsModel model,
                               std::uint64_t seed, int block_dim)
{
  grid.validate();
  if (block_dim != 4 && block_dim != 8) {
    throw DomainError("synthetic_rhs: block dimension must be 4 or 8");
  }
  std::vector<double> magnitude(static_cast<std::size_t>(grid.n_max) + 1, 1.0);
  if (model == RhsModel::mie_like) {
    const specfun::RiccatiTable t = specfun::riccati_table(grid.n_max, cd{media.outer.kappa, 0.0});
    for (int n = 0; n <= grid.n_max; ++n) {
      magnitude[static_cast<std::size_t>(n)] = std::abs(t.j[static_cast<std::size_t>(n)].value()) * (2 * n + 1);
    }
  }

  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(grid.copy_count()) * block_dim);
  Eigen::Index offset = 0;
  for (int n = grid.n_min; n <= grid.n_max; ++n) {
    for (int m = 0; m < grid.multiplicity(n); ++m) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(m)};
      std::mt19937_64 rng(seq);
      std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
      std::normal_distribution<double> gauss;
      for (int c = 0; c < block_dim; ++c) {
        cd value;
        switch (model) {
          case RhsModel::mie_like:
            value = c < 4 ? std::polar(magnitude[static_cast<std::size_t>(n)], phase(rng)) : cd{};
            break;
          case RhsModel::flat:
            value = std::polar(1.0, phase(rng));
            break;
          case RhsModel::random: {
            const double re = gauss(rng);
            value = {re, gauss(rng)};
            break;
          }
        }
        b(offset + c) = value;
      }
      offset += block_dim;
    }
  }
  return b;
}

}  // namespace mtf::modal
