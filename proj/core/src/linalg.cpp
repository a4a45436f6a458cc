// SPDX-License-Identifier: Apache-2.0
#include "mtf/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "mtf/error.hpp"

namespace mtf::linalg {

namespace {

void require_square(const DenseMatrix& a, const char* what)
{
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw DomainError(std::string(what) + ": expected a non-empty square matrix, got " +
                      std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

Eigen::VectorXd singular_values(const DenseMatrix& a)
{
  Eigen::JacobiSVD<DenseMatrix> svd(a);
  return svd.singularValues();
}

void require_regular(const DenseMatrix& a)
{
  const Eigen::VectorXd s = singular_values(a);
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  if (!(smax > 0.0) || smin <= 1e-12 * smax) {
    throw SingularityError("matrix is numerically singular (sigma_min = " + std::to_string(smin) +
                           ", sigma_max = " + std::to_string(smax) + ")");
  }
}

}  // namespace

std::vector<cd> eigenvalues(const DenseMatrix& a)
{
  require_square(a, "eigenvalues");
  Eigen::ComplexEigenSolver<DenseMatrix> solver(a, false);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("eigenvalue iteration did not converge for a " +
                           std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " matrix");
  }
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double min_singular_value(const DenseMatrix& a)
{
  const Eigen::VectorXd s = singular_values(a);
  return s(s.size() - 1);
}

double max_singular_value(const DenseMatrix& a)
{
  return singular_values(a)(0);
}

DenseMatrix inverse(const DenseMatrix& a)
{
  require_square(a, "inverse");
  require_regular(a);
  return a.partialPivLu().inverse();
}

DenseVector solve(const DenseMatrix& a, const DenseVector& b)
{
  require_square(a, "solve");
  if (b.size() != a.rows()) {
    throw DomainError("solve: right-hand side has the wrong length");
  }
  require_regular(a);
  return a.partialPivLu().solve(b);
}

double weighted_hermitian_min_eig(const DenseMatrix& a, std::span<const double> w)
{
  require_square(a, "weighted_hermitian_min_eig");
  if (static_cast<Eigen::Index>(w.size()) != a.rows()) {
    throw DomainError("weighted_hermitian_min_eig: weight vector has the wrong length");
  }
  Eigen::VectorXd s(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if (!(w[static_cast<std::size_t>(i)] > 0.0)) {
      throw DomainError("weighted_hermitian_min_eig: weights must be positive");
    }
    s(i) = 1.0 / std::sqrt(w[static_cast<std::size_t>(i)]);
  }
  // Re{U^T A conj(U)} is the Hermitian form of A^T.
  const DenseMatrix scaled = s.asDiagonal() * a.transpose() * s.asDiagonal();
  const DenseMatrix herm = 0.5 * (scaled + scaled.adjoint());
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(herm, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("Hermitian eigenvalue iteration did not converge");
  }
  return solver.eigenvalues()(0);
}

double max_abs(const DenseMatrix& a)
{
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

std::vector<double> nearest_distances(std::span<const cd> from, std::span<const cd> to)
{
  std::vector<double> out;
  out.reserve(from.size());
  for (const cd& p : from) {
    double best = std::numeric_limits<double>::infinity();
    for (const cd& q : to) {
      best = std::min(best, std::abs(p - q));
    }
    out.push_back(best);
  }
  return out;
}

double hausdorff_distance(std::span<const cd> a, std::span<const cd> b)
{
  if (a.empty() || b.empty()) {
    throw DomainError("hausdorff_distance: point sets must be non-empty");
  }
  const auto da = nearest_distances(a, b);
  const auto db = nearest_distances(b, a);
  return std::max(*std::max_element(da.begin(), da.end()), *std::max_element(db.begin(), db.end()));
}

bool multiset_equal(std::span<const cd> a, std::span<const cd> b, double tol)
{
  if (a.size() != b.size()) {
    return false;
  }
  std::vector<bool> used(b.size(), false);
  for (const cd& p : a) {
    std::size_t best = b.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && std::abs(p - b[j]) < best_dist) {
        best_dist = std::abs(p - b[j]);
        best = j;
      }
    }
    if (best == b.size() || best_dist > tol) {
      return false;
    }
    used[best] = true;
  }
  return true;
}

void sort_lexicographic(std::vector<cd>& values)
{
  std::sort(values.begin(), values.end(), [](const cd& x, const cd& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
}

}  // namespace mtf::linalg
