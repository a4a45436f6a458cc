// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace mtf::linalg {

using cd = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

/// All eigenvalues; ConvergenceError if the QR iteration does not converge.
std::vector<cd> eigenvalues(const DenseMatrix& a);

double min_singular_value(const DenseMatrix& a);
double max_singular_value(const DenseMatrix& a);

/// SingularityError when sigma_min <= 1e-12 * sigma_max.
DenseMatrix inverse(const DenseMatrix& a);
DenseVector solve(const DenseMatrix& a, const DenseVector& b);

/// Smallest eigenvalue of the Hermitian part of W^{-1/2} A^T W^{-1/2}, W = diag(w), w > 0:
/// the minimum of Re{U^T A conj(U)} / (sum w_i |U_i|^2).
double weighted_hermitian_min_eig(const DenseMatrix& a, std::span<const double> w);

/// Largest entry modulus.
double max_abs(const DenseMatrix& a);

/// For each point of `from`, the distance to the nearest point of `to`.
std::vector<double> nearest_distances(std::span<const cd> from, std::span<const cd> to);

/// Symmetric Hausdorff distance between two finite point sets.
double hausdorff_distance(std::span<const cd> a, std::span<const cd> b);

/// Equal as multisets up to tol, by greedy nearest matching.
bool multiset_equal(std::span<const cd> a, std::span<const cd> b, double tol);

/// Sort by real part, then imaginary part.
void sort_lexicographic(std::vector<cd>& values);

}  // namespace mtf::linalg
