// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Core>

#include "mtf/modal.hpp"

namespace mtf::krylov {

struct GmresOptions
{
  int restart = 20;
  double tol = 1e-8;
  int max_iter = 2000;

  void validate() const;
};

struct GmresReport
{
  int iterations = 0;
  bool converged = false;
  /// Relative residuals from the least-squares recurrence; entry 0 is the initial residual.
  std::vector<double> residual_history;
  int restart = 0;
  double tolerance = 0.0;
  Eigen::VectorXcd solution;
  /// ||b - A x|| / ||b|| recomputed from the returned solution.
  double final_residual = 0.0;
  /// Largest |V^H V - I| entry over all cycles.
  double max_orthogonality_defect = 0.0;
  /// Largest gap between recurrence and recomputed relative residual at restart boundaries.
  double max_restart_mismatch = 0.0;
  int reorthogonalizations = 0;
};

using LinearMap = std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>;

/// Restarted GMRES from x0 = 0. Non-convergence is reported, not thrown.
GmresReport gmres(const LinearMap& op, const Eigen::VectorXcd& rhs, const GmresOptions& options = {});
GmresReport gmres(const modal::ModalOperator& op, const Eigen::VectorXcd& rhs,
                  const GmresOptions& options = {});

struct VariantRun
{
  Variant variant = Variant::mtf;
  int n_max = 0;
  GmresReport report;
};

/// One variant on norm-weighted, normalized operator blocks with synthetic data.
VariantRun run_variant(Variant variant, const MediaPair& media, const modal::ModalGrid& grid,
                       const GmresOptions& options, std::uint64_t seed,
                       modal::RhsModel model = modal::RhsModel::mie_like);

/// mtf, mtf2, bmtf, stf2 on shared data (stf2 sees the exterior restriction).
std::vector<VariantRun> precond_compare(const MediaPair& media, int n_max, const GmresOptions& options = {},
                                        std::uint64_t seed = 42, bool with_multiplicity = false);

}  // namespace mtf::krylov
