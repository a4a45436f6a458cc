// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "mtf/media.hpp"
#include "mtf/symbols.hpp"

namespace mtf::modal {

/// Modes n_min..n_max; with multiplicity each block is repeated 2n+1 times.
struct ModalGrid
{
  int n_min = 1;
  int n_max = 1;
  bool with_multiplicity = false;

  void validate() const;
  int mode_count() const { return n_max - n_min + 1; }
  int multiplicity(int n) const { return with_multiplicity ? 2 * n + 1 : 1; }
  /// Number of (n, m) copies over the whole grid.
  std::size_t copy_count() const;
};

/// 4x4 pairing block M (symmetric).
Eigen::Matrix4d pairing_m();
/// diag(M, -M).
Eigen::Matrix<double, 8, 8> pairing_mm();
/// diag(1, -1) repeated `copies` times.
Eigen::MatrixXd theta(int copies = 4);
/// diag(1 + n, 1 / (1 + n)) repeated `copies` times, as a vector.
Eigen::VectorXd norm_weights(int n, int copies = 4);
/// (j'_n(i) H'_n(i), j_n(i) H_n(i)): the exact counterpart of the norm weights.
std::array<std::complex<double>, 2> exact_norm_weights(int n);

/// Block-diagonal operator over a modal grid. Immutable once built.
class ModalOperator
{
public:
  ModalOperator(Variant variant, MediaPair media, ModalGrid grid,
                std::vector<Eigen::MatrixXcd> blocks, double scaling, bool weighted = false);

  Variant variant() const { return variant_; }
  const MediaPair& media() const { return media_; }
  const ModalGrid& grid() const { return grid_; }
  double scaling() const { return scaling_; }
  bool weighted() const { return weighted_; }
  int block_dim() const { return block_dim_; }
  std::size_t dimension() const { return dimension_; }

  /// One block per mode n_min..n_max, scaling included.
  const std::vector<Eigen::MatrixXcd>& blocks() const { return blocks_; }
  const Eigen::MatrixXcd& block(int n) const;

  Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;

  /// D^{1/2} X D^{-1/2} on every block, D the per-mode norm weights.
  ModalOperator norm_weighted() const;

  /// Norm weights over the full dimension, in the layout of apply().
  Eigen::VectorXd weight_vector() const;

  /// Dense assembly for small grids.
  Eigen::MatrixXcd to_dense() const;

private:
  Variant variant_;
  MediaPair media_;
  ModalGrid grid_;
  std::vector<Eigen::MatrixXcd> blocks_;
  double scaling_;
  bool weighted_;
  int block_dim_;
  std::size_t dimension_;
};

/// Normalization used when `scaled` is requested: 1/sqrt2, 1/2, Upsilon_min^-2 (bmtf, stf2), 1.
double normalization(Variant variant, const MediaPair& media);

/// UsageError for ktilde / stilde.
ModalOperator build_operator(Variant variant, const MediaPair& media, const ModalGrid& grid,
                             bool scaled = false);

struct ModeSpectrum
{
  int n = 0;
  std::vector<std::complex<double>> eigenvalues;  ///< sorted by (re, im)
  std::vector<double> dist_to_accum;              ///< per eigenvalue
  double hausdorff = 0.0;
};

struct SpectrumReport
{
  Variant variant = Variant::mtf;
  bool scaled = false;
  bool closed_form = true;  ///< false when the accumulation points were computed numerically
  std::vector<std::complex<double>> accumulation;
  std::vector<ModeSpectrum> modes;
  double min_modulus = 0.0;
};

SpectrumReport spectrum_scan(const MediaPair& media, Variant variant, int n_max, bool scaled = false);

/// Accumulation points for a variant, closed form where available, scaled like the operator.
std::vector<std::complex<double>> reference_points(const MediaPair& media, Variant variant,
                                                   bool scaled, bool* closed_form = nullptr);

/// Smallest weighted Hermitian eigenvalue of M_sigma * symbol * Theta with weights D_tilde_n.
double coercivity_quotient(int n, const MediaPair& media, bool use_asymptotic);

/// min_j min(omega mu_j, 1/(omega mu_j), omega eps_j, 1/(omega eps_j)).
double coercivity_limit(const MediaPair& media);

struct CoercivityRow
{
  int n = 0;
  double exact = 0.0;
  double asymptotic = 0.0;
};

std::vector<CoercivityRow> coercivity_scan(const MediaPair& media, int n_max);

enum class RhsModel { mie_like, flat, random };

/// "mie-like", "flat", "random"; UsageError otherwise.
RhsModel parse_rhs_model(std::string_view tag);

/**
 * Synthetic data in the layout of a block_dim-block operator on `grid`.
 * Phases (and random draws) depend only on (seed, n, m, component), so a larger grid
 * extends a smaller one. mie-like: |j_n(kappa_0)| (2n+1) on the four exterior components,
 * zero on the interior ones.
 */
Eigen::VectorXcd synthetic_rhs(const MediaPair& media, const ModalGrid& grid, RhsModel model,
                               std::uint64_t seed, int block_dim = 8);

}  // namespace mtf::modal
