// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/LU>
#include <gtest/gtest.h>

#include "mtf/error.hpp"
#include "mtf/linalg.hpp"
#include "mtf/scenarios.hpp"
#include "mtf/symbols.hpp"

namespace {

using namespace mtf::linalg;
using cd = std::complex<double>;

TEST(Eigenvalues, Diagonal)
{
  DenseMatrix a = DenseMatrix::Zero(3, 3);
  a(0, 0) = 1.0;
  a(1, 1) = cd{0.0, 2.0};
  a(2, 2) = -3.0;
  EXPECT_TRUE(multiset_equal(eigenvalues(a), std::vector<cd>{1.0, cd{0.0, 2.0}, -3.0}, 1e-14));
}

TEST(Eigenvalues, CompanionOfCubeRoots)
{
  DenseMatrix c = DenseMatrix::Zero(3, 3);
  c(1, 0) = 1.0;
  c(2, 1) = 1.0;
  c(0, 2) = 1.0;
  std::vector<cd> roots;
  for (int k = 0; k < 3; ++k) {
    roots.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / 3.0));
  }
  EXPECT_TRUE(multiset_equal(eigenvalues(c), roots, 1e-12));
}

TEST(Eigenvalues, RejectsNonSquare)
{
  EXPECT_THROW(eigenvalues(DenseMatrix::Zero(2, 3)), mtf::DomainError);
  EXPECT_THROW(eigenvalues(DenseMatrix(0, 0)), mtf::DomainError);
}

TEST(Eigenvalues, CharacteristicPolynomialResidual)
{
  const auto media = mtf::get_scenario("ferrite-hf").media;
  for (int n : {1, 4, 20}) {
    const DenseMatrix a = mtf::symbols::mtf_symbol(n, media);
    const double norm = max_singular_value(a);
    for (const cd& l : eigenvalues(a)) {
      const cd det = (a - l * DenseMatrix::Identity(8, 8)).determinant();
      EXPECT_LE(std::abs(det), 1e-8 * std::pow(norm, 8)) << "n = " << n;
    }
  }
}

TEST(SingularValues, Basics)
{
  EXPECT_NEAR(min_singular_value(DenseMatrix::Identity(4, 4)), 1.0, 1e-15);
  DenseMatrix z = DenseMatrix::Identity(4, 4);
  z.row(2).setZero();
  EXPECT_NEAR(min_singular_value(z), 0.0, 1e-15);
  EXPECT_NEAR(min_singular_value(2.0 * DenseMatrix::Identity(8, 8)), 2.0, 1e-15);
  EXPECT_NEAR(max_singular_value(2.0 * DenseMatrix::Identity(8, 8)), 2.0, 1e-15);
}

TEST(Inverse, Basics)
{
  EXPECT_LE(max_abs(inverse(DenseMatrix::Identity(3, 3)) - DenseMatrix::Identity(3, 3)), 0.0);
  DenseMatrix d = DenseMatrix::Zero(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 4.0;
  const DenseMatrix inv = inverse(d);
  EXPECT_DOUBLE_EQ(inv(0, 0).real(), 0.5);
  EXPECT_DOUBLE_EQ(inv(1, 1).real(), 0.25);
}

TEST(Inverse, SingleTraceResidual)
{
  const DenseMatrix s = mtf::symbols::stf_symbol(3, mtf::get_scenario("teflon-lf").media);
  EXPECT_LE(max_abs(s * inverse(s) - DenseMatrix::Identity(4, 4)), 1e-10);
}

TEST(Inverse, NearSingularRejected)
{
  DenseMatrix a = DenseMatrix::Identity(3, 3);
  a(2, 2) = 1e-14;
  EXPECT_THROW(inverse(a), mtf::SingularityError);
  EXPECT_THROW(solve(a, DenseVector::Ones(3)), mtf::SingularityError);
}

TEST(Solve, MatchesInverse)
{
  DenseMatrix a(2, 2);
  a << cd{1, 1}, 2.0, cd{0, -1}, 3.0;
  const DenseVector b = DenseVector::Ones(2);
  EXPECT_LE((a * solve(a, b) - b).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_THROW(solve(a, DenseVector::Ones(3)), mtf::DomainError);
}

TEST(WeightedHermitian, Diagonal)
{
  DenseMatrix a = DenseMatrix::Zero(2, 2);
  a(0, 0) = 3.0;
  a(1, 1) = 5.0;
  const std::vector<double> w{1.0, 1.0};
  EXPECT_NEAR(weighted_hermitian_min_eig(a, w), 3.0, 1e-14);
}

TEST(WeightedHermitian, AntisymmetricHasZeroForm)
{
  DenseMatrix a(3, 3);
  a << 0.0, 2.0, -1.0, -2.0, 0.0, 4.0, 1.0, -4.0, 0.0;
  const std::vector<double> w{0.3, 2.0, 7.0};
  EXPECT_NEAR(weighted_hermitian_min_eig(a, w), 0.0, 1e-14);
}

TEST(WeightedHermitian, ModeWeightedDiagonalBlock)
{
  const double omega = 1.05;
  const double mu = 1.0;
  const double eps = 2.1;
  for (int n : {1, 10, 400}) {
    DenseMatrix a = DenseMatrix::Zero(2, 2);
    a(0, 0) = n / (omega * mu);
    a(1, 1) = omega * eps / n;
    const std::vector<double> w{1.0 + n, 1.0 / (1.0 + n)};
    const double expected = std::min(n / (omega * mu) / (1.0 + n), omega * eps * (1.0 + n) / n);
    EXPECT_NEAR(weighted_hermitian_min_eig(a, w), expected, 1e-12) << "n = " << n;
  }
}

TEST(WeightedHermitian, RejectsBadWeights)
{
  const DenseMatrix a = DenseMatrix::Identity(2, 2);
  EXPECT_THROW(weighted_hermitian_min_eig(a, std::vector<double>{1.0, 0.0}), mtf::DomainError);
  EXPECT_THROW(weighted_hermitian_min_eig(a, std::vector<double>{1.0}), mtf::DomainError);
}

TEST(PointSets, HausdorffAndNearest)
{
  const std::vector<cd> a{{0, 0}, {1, 0}};
  const std::vector<cd> b{{0, 0.1}, {1, 0}, {5, 0}};
  const auto d = nearest_distances(a, b);
  EXPECT_NEAR(d[0], 0.1, 1e-15);
  EXPECT_NEAR(d[1], 0.0, 1e-15);
  EXPECT_NEAR(hausdorff_distance(a, b), 4.0, 1e-15);
  EXPECT_THROW(hausdorff_distance(a, std::vector<cd>{}), mtf::DomainError);
}

TEST(PointSets, MultisetRespectsMultiplicity)
{
  const std::vector<cd> a{1.0, 1.0, 2.0};
  EXPECT_TRUE(multiset_equal(a, std::vector<cd>{2.0, 1.0, 1.0 + 1e-9}, 1e-7));
  EXPECT_FALSE(multiset_equal(a, std::vector<cd>{1.0, 2.0, 2.0}, 1e-7));
  EXPECT_FALSE(multiset_equal(a, std::vector<cd>{1.0, 2.0}, 1e-7));
}

TEST(PointSets, LexicographicSort)
{
  std::vector<cd> v{{1, 2}, {-1, 5}, {1, -3}};
  sort_lexicographic(v);
  EXPECT_EQ(v[0], cd(-1, 5));
  EXPECT_EQ(v[1], cd(1, -3));
  EXPECT_EQ(v[2], cd(1, 2));
}

TEST(MaxAbs, EmptyIsZero)
{
  EXPECT_EQ(max_abs(DenseMatrix(0, 0)), 0.0);
}

}  // namespace
