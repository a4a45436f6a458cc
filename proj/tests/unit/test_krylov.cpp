// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <complex>
#include <random>

#include <gtest/gtest.h>

#include "mtf/error.hpp"
#include "mtf/krylov.hpp"
#include "mtf/scenarios.hpp"

namespace {

using namespace mtf;
using namespace mtf::krylov;
using cd = std::complex<double>;

Eigen::VectorXcd random_vector(Eigen::Index n, unsigned seed)
{
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = g(rng);
    v(i) = {re, g(rng)};
  }
  return v;
}

LinearMap dense_map(const Eigen::MatrixXcd& a)
{
  return [a](const Eigen::VectorXcd& x) { return Eigen::VectorXcd(a * x); };
}

TEST(Gmres, IdentityInOneStep)
{
  const auto b = random_vector(40, 1);
  const auto rep = gmres([](const Eigen::VectorXcd& x) { return x; }, b);
  EXPECT_TRUE(rep.converged);
  EXPECT_EQ(rep.iterations, 1);
  ASSERT_EQ(rep.residual_history.size(), 2U);
  EXPECT_EQ(rep.residual_history.front(), 1.0);
  EXPECT_LE((rep.solution - b).norm(), 1e-12 * b.norm());
}

TEST(Gmres, ScaledIdentityInOneStep)
{
  const auto b = random_vector(25, 2);
  const auto rep = gmres([](const Eigen::VectorXcd& x) { return Eigen::VectorXcd(2.0 * x); }, b);
  EXPECT_EQ(rep.iterations, 1);
  EXPECT_LE((rep.solution - 0.5 * b).norm(), 1e-12 * b.norm());
}

TEST(Gmres, FiveDistinctEigenvaluesInFiveSteps)
{
  const cd values[] = {{1.0, 0.0}, {2.0, 1.0}, {-3.0, 0.5}, {0.5, -2.0}, {4.0, 0.0}};
  Eigen::VectorXcd d(60);
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    d(i) = values[i % 5];
  }
  const auto b = random_vector(60, 3);
  GmresOptions opt;
  opt.tol = 1e-10;
  const auto rep = gmres([d](const Eigen::VectorXcd& x) { return Eigen::VectorXcd(d.cwiseProduct(x)); }, b, opt);
  EXPECT_TRUE(rep.converged);
  EXPECT_LE(rep.iterations, 5);
}

TEST(Gmres, HistoryShapeAndMonotonicity)
{
  const Eigen::Index n = 120;
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double re = g(rng);
      a(i, j) += cd{re, g(rng)} * (0.9 / std::sqrt(2.0 * static_cast<double>(n)));
    }
  }
  GmresOptions opt;
  opt.restart = 10;
  opt.tol = 1e-9;
  const auto b = random_vector(n, 4);
  const auto rep = gmres(dense_map(a), b, opt);
  ASSERT_TRUE(rep.converged);
  EXPECT_GT(rep.iterations, opt.restart);
  ASSERT_EQ(rep.residual_history.size(), static_cast<std::size_t>(rep.iterations) + 1);
  for (std::size_t i = 1; i < rep.residual_history.size(); ++i) {
    EXPECT_LE(rep.residual_history[i], rep.residual_history[i - 1] * (1.0 + 1e-12) + 1e-14) << "step " << i;
  }
  EXPECT_NEAR((b - a * rep.solution).norm() / b.norm(), rep.final_residual, 1e-14);
  EXPECT_LE(rep.final_residual, opt.tol);
  EXPECT_LE(rep.max_restart_mismatch, 1e-10);
  EXPECT_LE(rep.max_orthogonality_defect, 1e-8);
}

TEST(Gmres, ModalDiagnosticsOnHardPreset)
{
  const auto run = run_variant(Variant::mtf, get_scenario("ferrite-hf").media, modal::ModalGrid{1, 39, false},
                               GmresOptions{}, 42);
  EXPECT_TRUE(run.report.converged);
  EXPECT_GT(run.report.iterations, 100);
  EXPECT_LE(run.report.max_restart_mismatch, 1e-10);
  EXPECT_LE(run.report.max_orthogonality_defect, 1e-8);
}

TEST(Gmres, NonConvergenceIsReported)
{
  GmresOptions opt;
  opt.max_iter = 3;
  VariantRun run;
  ASSERT_NO_THROW(run = run_variant(Variant::mtf, get_scenario("teflon-hf").media, modal::ModalGrid{1, 34, false},
                                    opt, 42));
  EXPECT_FALSE(run.report.converged);
  EXPECT_EQ(run.report.iterations, 3);
  EXPECT_GT(run.report.final_residual, opt.tol);
}

TEST(Gmres, Deterministic)
{
  const MediaPair media = get_scenario("teflon-hf").media;
  const auto a = run_variant(Variant::mtf2, media, modal::ModalGrid{1, 34, false}, GmresOptions{}, 7);
  const auto b = run_variant(Variant::mtf2, media, modal::ModalGrid{1, 34, false}, GmresOptions{}, 7);
  EXPECT_EQ(a.report.iterations, b.report.iterations);
  EXPECT_EQ(a.report.residual_history, b.report.residual_history);
  EXPECT_EQ(a.report.solution, b.report.solution);
}

TEST(Gmres, RejectsBadInput)
{
  const auto id = [](const Eigen::VectorXcd& x) { return x; };
  const auto b = random_vector(8, 5);
  EXPECT_THROW(gmres(id, b, GmresOptions{0, 1e-8, 100}), UsageError);
  EXPECT_THROW(gmres(id, b, GmresOptions{20, 0.0, 100}), UsageError);
  EXPECT_THROW(gmres(id, b, GmresOptions{20, 1.0, 100}), UsageError);
  EXPECT_THROW(gmres(id, b, GmresOptions{20, 1e-8, 0}), UsageError);
  EXPECT_THROW(gmres(id, Eigen::VectorXcd::Zero(8)), DomainError);
  const auto op = modal::build_operator(Variant::mtf, get_scenario("teflon-lf").media, modal::ModalGrid{1, 3, false});
  EXPECT_THROW(gmres(op, b), DomainError);
}

TEST(PrecondCompare, OrderingOnTeflon)
{
  for (const char* name : {"teflon-lf", "teflon-hf"}) {
    const auto s = get_scenario(name);
    const auto runs = precond_compare(s.media, default_truncation(s));
    ASSERT_EQ(runs.size(), 4U);
    EXPECT_EQ(runs[0].variant, Variant::mtf);
    EXPECT_EQ(runs[3].variant, Variant::stf2);
    for (const auto& r : runs) {
      EXPECT_TRUE(r.report.converged) << name << " " << to_string(r.variant);
    }
    EXPECT_LE(runs[1].report.iterations, runs[0].report.iterations) << name;
    EXPECT_LE(runs[2].report.iterations, runs[1].report.iterations) << name;
    EXPECT_LE(runs[3].report.iterations, runs[1].report.iterations) << name;
  }
}

TEST(PrecondCompare, PreconditionedCountsStableUnderRefinement)
{
  const auto s = get_scenario("ferrite-lf");
  const int n = default_truncation(s);
  const auto coarse = precond_compare(s.media, n);
  const auto fine = precond_compare(s.media, (3 * n) / 2);
  for (std::size_t i = 1; i < 4; ++i) {
    EXPECT_LE(std::abs(fine[i].report.iterations - coarse[i].report.iterations), 2) << to_string(fine[i].variant);
  }
}

TEST(PrecondCompare, EqualMediaPreconditionedIsImmediate)
{
  const Medium m = Medium::from_physical(1.0, 1.0, 1.3);
  const auto runs = precond_compare(MediaPair{m, m}, 12);
  EXPECT_EQ(runs[1].report.iterations, 1);
  EXPECT_EQ(runs[2].report.iterations, 1);
  EXPECT_GT(runs[0].report.iterations, 1);
}

}  // namespace
