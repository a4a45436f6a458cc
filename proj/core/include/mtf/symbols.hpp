// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "mtf/media.hpp"
#include "mtf/specfun.hpp"

namespace mtf {

using cd = std::complex<double>;
using Mat2 = Eigen::Matrix<cd, 2, 2>;
using Mat4 = Eigen::Matrix<cd, 4, 4>;
using Mat8 = Eigen::Matrix<cd, 8, 8>;

/// Which subdomain a boundary operator is attached to; the normals are opposite.
enum class Side { outer = 0, inner = 1 };

/**
 * Operator variants.
 *
 *  mtf     local multi-trace operator
 *  mtf2    its square
 *  bmtf    B * mtf (STF-based approximate inverse applied on the left)
 *  stf2    square of the single-trace operator S (4x4 per mode)
 *  amtf    block-diagonal Calderon preconditioning diag(A_0, A_1) * mtf
 *  pi      trace swap applied on the left, Pi * mtf
 *  ktilde  asymptotic difference operator (accumulation points only)
 *  stilde  asymptotic single-trace operator (accumulation points only)
 */
enum class Variant { mtf, mtf2, bmtf, stf2, amtf, pi, ktilde, stilde };

std::string_view to_string(Variant v);
/// UsageError for unknown tags.
Variant parse_variant(std::string_view tag);

/// The variants that can be assembled as modal operators.
std::vector<Variant> operator_variants();

namespace symbols {

/// 2x2 symbol of V on mode n: antidiag(2i j H, -2i j' H'); the inner side is the negation.
Mat2 v_symbol(int n, double kappa, Side side);

/// 2x2 symbol of K on mode n: i (j H' + j' H) diag(-1, +1); the inner side is the negation.
Mat2 k_symbol(int n, double kappa, Side side);

/// [[K, eta V], [V / eta, K]] with eta = sqrt(mu / eps).
Mat4 assemble_a(const Mat2& k, const Mat2& v, double impedance);

/// Scaled Calderon symbol A^j_{kappa,mu}[n] for the given medium.
Mat4 a_symbol(int n, const Medium& m, Side side);
/// Same, from products already evaluated at kappa = m.kappa.
Mat4 a_symbol(const specfun::ScaledProducts& p, const Medium& m, Side side);

/// [[A0, Id], [Id, A1]].
Mat8 assemble_mtf(const Mat4& a_outer, const Mat4& a_inner);

/// Local multi-trace symbol MTF[n] = [[A^0_{k0,mu0}, Id], [Id, A^1_{k1,mu1}]].
Mat8 mtf_symbol(int n, const MediaPair& media);

/// Single-trace symbol S[n] = A^0_{k0,mu0}[n] + A^0_{k1,mu1}[n].
Mat4 stf_symbol(int n, const MediaPair& media);

/// K[n] = A^0_{k0,mu0}[n] - A^0_{k1,mu1}[n].
Mat4 kdiff_symbol(int n, const MediaPair& media);

/// [[S, A0 S], [C S, -S]] with A0 the exterior symbol and C = A^0_{k1,mu1}.
Mat8 assemble_b(const Mat4& a_outer, const Mat4& c_inner);

/// Symbol of the preconditioner B; B[n] * MTF[n] = diag(S[n]^2, S[n]^2).
Mat8 b_symbol(int n, const MediaPair& media);

/// [[S^-1, A0 S^-1], [C S^-1, -S^-1]]; SingularityError if S is singular.
Mat8 assemble_mtf_inverse(const Mat4& a_outer, const Mat4& c_inner);

/// Closed-form inverse of MTF[n] built from the single-trace inverse.
Mat8 mtf_inverse_symbol(int n, const MediaPair& media);

/// diag(A^0_0[n], A^1_1[n]) * MTF[n] = Id + A Pi.
Mat8 a_precond_symbol(int n, const MediaPair& media);

/// Pi * MTF[n].
Mat8 pi_precond_symbol(int n, const MediaPair& media);

/// Trace swap Pi on C^8.
Mat8 swap_operator();

/// T_n^{#k}: diag(1, 1/n) repeated; `copies` = 2 gives 4x4, 4 gives 8x8.
Eigen::MatrixXcd mode_scaling(int n, int copies);

/// Limits of the symbols as n -> infinity, up to the similarity T_n.
struct AsymptoticSymbols
{
  Mat4 a_tilde_outer;  ///< exterior Ã^0_{k0,mu0}
  Mat4 a_tilde_inner;  ///< interior Ã^1_{k1,mu1} = -Ã^0_{k1,mu1}
  Mat8 mtf_inf;
  Mat4 k_tilde;
  Mat4 s_tilde;
};

/// Ã^0 for one medium: entries omega*mu, 1/(omega*eps), omega*eps, 1/(omega*mu).
Mat4 a_tilde(const Medium& m);

AsymptoticSymbols asymptotic_symbols(const MediaPair& media);

/// Asymptotic counterpart of the block a modal operator of this variant uses on large modes.
Eigen::MatrixXcd asymptotic_block(Variant v, const MediaPair& media);

/// Exact per-mode block of the given operator variant (8x8, or 4x4 for stf2).
Eigen::MatrixXcd operator_block(Variant v, int n, const MediaPair& media);
/// Same, from the side-0 symbols A^0_{k0,mu0}[n] and C = A^0_{k1,mu1}[n].
Eigen::MatrixXcd operator_block(Variant v, const Mat4& a_outer, const Mat4& c_inner);

/// Block dimension of a variant: 4 for stf2 and the asymptotic 4x4 tags, 8 otherwise.
int block_dimension(Variant v);

/// Closed-form accumulation points of a variant.
struct AccumulationSet
{
  Variant variant = Variant::mtf;
  std::vector<cd> points;
  double lambda_mu = 0.0;
  double lambda_eps = 0.0;
  double upsilon_mu = 0.0;
  double upsilon_eps = 0.0;
};

/// |sqrt(mu1/mu0) - sqrt(mu0/mu1)|, |sqrt(eps1/eps0) - sqrt(eps0/eps1)| and the
/// corresponding sums (Upsilon).
double lambda_mu(const MediaPair& media);
double lambda_eps(const MediaPair& media);
double upsilon_mu(const MediaPair& media);
double upsilon_eps(const MediaPair& media);

/// UsageError for amtf / pi (no closed form, see numeric_accumulation_points).
AccumulationSet accumulation_points(const MediaPair& media, Variant variant);

/// Eigenvalues of asymptotic_block, deduplicated; defined for every operator variant.
std::vector<cd> numeric_accumulation_points(const MediaPair& media, Variant variant);

/// Removes points closer than tol to an earlier point.
std::vector<cd> deduplicate(const std::vector<cd>& points, double tol = 1e-12);

}  // namespace symbols
}  // namespace mtf
