// SPDX-License-Identifier: Apache-2.0
#include "mtf/krylov.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mtf/error.hpp"

namespace mtf::krylov {

using cd = std::complex<double>;

namespace {

constexpr double kReorthogonalizeRatio = 0.7071067811865476;

// Givens rotation zeroing b in (a, b).
void make_rotation(cd a, cd b, double& c, cd& s)
{
  const double na = std::abs(a);
  const double nb = std::abs(b);
  if (nb == 0.0) {
    c = 1.0;
    s = 0.0;
    return;
  }
  if (na == 0.0) {
    c = 0.0;
    s = std::conj(b) / nb;
    return;
  }
  const double r = std::hypot(na, nb);
  c = na / r;
  s = (a / na) * std::conj(b) / r;
}

double gram_defect(const Eigen::MatrixXcd& v, int cols)
{
  if (cols == 0) {
    return 0.0;
  }
  const Eigen::MatrixXcd basis = v.leftCols(cols);
  const Eigen::MatrixXcd g = basis.adjoint() * basis - Eigen::MatrixXcd::Identity(cols, cols);
  return g.cwiseAbs().maxCoeff();
}

}  // namespace

void GmresOptions::validate() const
{
  if (restart < 1) {
    throw UsageError("restart must be >= 1, got " + std::to_string(restart));
  }
  if (!(tol > 0.0) || !(tol < 1.0)) {
    throw UsageError("tolerance must lie in (0, 1)");
  }
  if (max_iter < 1) {
    throw UsageError("max_iter must be >= 1");
  }
}

GmresReport gmres(const LinearMap& op, const Eigen::VectorXcd& rhs, const GmresOptions& options)
{
  options.validate();
  const double bnorm = rhs.norm();
  if (!(bnorm > 0.0) || !std::isfinite(bnorm)) {
    throw DomainError("gmres needs a non-zero finite right-hand side");
  }
  const Eigen::Index dim = rhs.size();
  const int m = static_cast<int>(std::min<Eigen::Index>(options.restart, dim));

  GmresReport rep;
  rep.restart = options.restart;
  rep.tolerance = options.tol;
  rep.solution = Eigen::VectorXcd::Zero(dim);
  rep.residual_history.push_back(1.0);

  Eigen::VectorXcd r = rhs;
  double beta = bnorm;
  Eigen::MatrixXcd v(dim, m + 1);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(m + 1, m);
  std::vector<double> cs(static_cast<std::size_t>(m));
  std::vector<cd> sn(static_cast<std::size_t>(m));
  Eigen::VectorXcd g(m + 1);

  while (true) {
    if (beta / bnorm <= options.tol || rep.iterations >= options.max_iter) {
      break;
    }
    v.col(0) = r / beta;
    h.setZero();
    g.setZero();
    g(0) = beta;
    int k = 0;
    double estimate = beta / bnorm;
    while (k < m && rep.iterations < options.max_iter) {
      Eigen::VectorXcd w = op(v.col(k));
      if (w.size() != dim) {
        throw DomainError("gmres: operator changed the vector length");
      }
      const double before = w.norm();
      for (int i = 0; i <= k; ++i) {
        const cd hij = v.col(i).dot(w);
        h(i, k) = hij;
        w -= hij * v.col(i);
      }
      if (w.norm() < kReorthogonalizeRatio * before) {
        ++rep.reorthogonalizations;
        for (int i = 0; i <= k; ++i) {
          const cd corr = v.col(i).dot(w);
          h(i, k) += corr;
          w -= corr * v.col(i);
        }
      }
      const double hnext = w.norm();
      h(k + 1, k) = hnext;

      for (int i = 0; i < k; ++i) {
        const auto iu = static_cast<std::size_t>(i);
        const cd t = cs[iu] * h(i, k) + sn[iu] * h(i + 1, k);
        h(i + 1, k) = -std::conj(sn[iu]) * h(i, k) + cs[iu] * h(i + 1, k);
        h(i, k) = t;
      }
      const auto ku = static_cast<std::size_t>(k);
      make_rotation(h(k, k), h(k + 1, k), cs[ku], sn[ku]);
      h(k, k) = cs[ku] * h(k, k) + sn[ku] * h(k + 1, k);
      h(k + 1, k) = 0.0;
      g(k + 1) = -std::conj(sn[ku]) * g(k);
      g(k) = cs[ku] * g(k);

      ++k;
      ++rep.iterations;
      estimate = std::abs(g(k)) / bnorm;
      rep.residual_history.push_back(estimate);

      if (hnext <= 1e-14 * before || hnext == 0.0) {
        break;
      }
      v.col(k) = w / hnext;
      if (estimate <= options.tol) {
        break;
      }
    }

    rep.max_orthogonality_defect = std::max(rep.max_orthogonality_defect, gram_defect(v, k));

    const Eigen::VectorXcd y =
        h.topLeftCorner(k, k).triangularView<Eigen::Upper>().solve(g.head(k));
    rep.solution += v.leftCols(k) * y;
    r = rhs - op(rep.solution);
    beta = r.norm();
    rep.max_restart_mismatch = std::max(rep.max_restart_mismatch, std::abs(beta / bnorm - estimate));
  }

  rep.final_residual = beta / bnorm;
  rep.converged = rep.final_residual <= options.tol;
  return rep;
}

GmresReport gmres(const modal::ModalOperator& op, const Eigen::VectorXcd& rhs, const GmresOptions& options)
{
  if (static_cast<std::size_t>(rhs.size()) != op.dimension()) {
    throw DomainError("gmres: right-hand side length " + std::to_string(rhs.size()) +
                      " does not match operator dimension " + std::to_string(op.dimension()));
  }
  return gmres([&op](const Eigen::VectorXcd& x) { return op.apply(x); }, rhs, options);
}

VariantRun run_variant(Variant variant, const MediaPair& media, const modal::ModalGrid& grid,
                       const GmresOptions& options, std::uint64_t seed, modal::RhsModel model)
{
  const modal::ModalOperator op = modal::build_operator(variant, media, grid, true).norm_weighted();
  const Eigen::VectorXcd b = modal::synthetic_rhs(media, grid, model, seed, op.block_dim());
  const Eigen::VectorXcd weighted = op.weight_vector().cwiseSqrt().cast<cd>().cwiseProduct(b);
  return {variant, grid.n_max, gmres(op, weighted, options)};
}

std::vector<VariantRun> precond_compare(const MediaPair& media, int n_max, const GmresOptions& options,
                                        std::uint64_t seed, bool with_multiplicity)
{
  const modal::ModalGrid grid{1, n_max, with_multiplicity};
  grid.validate();
  std::vector<VariantRun> runs;
  for (Variant v : {Variant::mtf, Variant::mtf2, Variant::bmtf, Variant::stf2}) {
    runs.push_back(run_variant(v, media, grid, options, seed));
  }
  return runs;
}

}  // namespace mtf::krylov
