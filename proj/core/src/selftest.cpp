// SPDX-License-Identifier: Apache-2.0
#include "mtf/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mtf/linalg.hpp"
#include "mtf/scenarios.hpp"
#include "mtf/specfun.hpp"
#include "mtf/symbols.hpp"

namespace mtf::selftest {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

class SymbolSource
{
public:
  SymbolSource(const MediaPair& media, int n_max, bool fault)
      : media_(media),
        outer_(specfun::scaled_products_table(n_max, media.outer.kappa)),
        inner_(specfun::scaled_products_table(n_max, media.inner.kappa)),
        fault_(fault)
  {
  }

  Mat4 a(int n, bool inner_medium, Side side) const
  {
    const auto& p = (inner_medium ? inner_ : outer_)[static_cast<std::size_t>(n)];
    const Medium& m = inner_medium ? media_.inner : media_.outer;
    Mat2 v;
    v << cd{}, p.p_jh, p.p_jh_prime, cd{};
    Mat2 k;
    k << -p.p_mixed, cd{}, cd{}, p.p_mixed;
    if (fault_) {
      k = -k;
    }
    const double sign = side == Side::outer ? 1.0 : -1.0;
    return sign * symbols::assemble_a(k, v, m.impedance());
  }

private:
  MediaPair media_;
  std::vector<specfun::ScaledProducts> outer_;
  std::vector<specfun::ScaledProducts> inner_;
  bool fault_;
};

CheckResult make(std::string name, double defect, double tol)
{
  return {std::move(name), defect, tol, std::isfinite(defect) && defect <= tol};
}

}  // namespace

std::vector<CheckResult> run_selftest(const SelftestOptions& options)
{
  const int n_max = std::max(options.n_max, 1);
  const auto scenarios = all_scenarios();
  std::vector<CheckResult> out;

  double wronskian = 0.0;
  for (const auto& s : scenarios) {
    for (double kappa : {s.media.outer.kappa, s.media.inner.kappa}) {
      wronskian = std::max(wronskian, specfun::riccati_table(std::max(n_max, 1000), cd{kappa, 0.0}).max_wronskian_defect());
    }
  }
  out.push_back(make("wronskian", wronskian, 1e-10));

  // n = 0 closed forms at t = 1: j_0 = sin, H_0 = -i e^{it}.
  {
    const Medium unit = Medium::from_preset(1.0, 1.0, 1.0, 1.0);
    const SymbolSource src(MediaPair(unit, unit), 0, options.inject_k_sign_fault);
    const Mat4 a = src.a(0, false, Side::outer);
    const cd e = std::exp(kI);
    const cd jh = 2.0 * std::sin(1.0) * e;
    const cd jph = -2.0 * kI * std::cos(1.0) * e;
    const cd mixed = std::exp(2.0 * kI);
    Mat2 v_expected;
    v_expected << cd{}, jh, jph, cd{};
    Mat2 k_expected;
    k_expected << -mixed, cd{}, cd{}, mixed;
    out.push_back(make("v_symbol_closed_form",
                       linalg::max_abs(a.topRightCorner<2, 2>() - v_expected), 1e-12));
    out.push_back(make("k_symbol_closed_form",
                       linalg::max_abs(a.topLeftCorner<2, 2>() - k_expected), 1e-12));
  }

  double calderon = 0.0;
  double square = 0.0;
  double inverse = 0.0;
  double b_identity = 0.0;
  double accumulation = 0.0;
  double min_sv = std::numeric_limits<double>::infinity();
  const Mat8 pi = symbols::swap_operator();
  for (const auto& s : scenarios) {
    const SymbolSource src(s.media, n_max, options.inject_k_sign_fault);
    for (int n = 0; n <= n_max; ++n) {
      const Mat4 a0 = src.a(n, false, Side::outer);
      const Mat4 c = src.a(n, true, Side::outer);
      const Mat4 a1 = -c;
      calderon = std::max({calderon, linalg::max_abs(a0 * a0 - Mat4::Identity()),
                           linalg::max_abs(a1 * a1 - Mat4::Identity())});

      const Mat8 mtf = symbols::assemble_mtf(a0, a1);
      const Mat4 kd = a0 - c;
      Mat8 diag_k = Mat8::Zero();
      diag_k.topLeftCorner<4, 4>() = kd;
      diag_k.bottomRightCorner<4, 4>() = kd;
      square = std::max(square, linalg::max_abs(mtf * mtf - 2.0 * Mat8::Identity() - pi * diag_k));

      const Mat4 stf = a0 + c;
      Mat8 diag_s2 = Mat8::Zero();
      diag_s2.topLeftCorner<4, 4>() = stf * stf;
      diag_s2.bottomRightCorner<4, 4>() = stf * stf;
      b_identity = std::max(b_identity, linalg::max_abs(symbols::assemble_b(a0, c) * mtf - diag_s2));

      if (n <= std::min(n_max, 300)) {
        inverse = std::max(inverse, linalg::max_abs(mtf * symbols::assemble_mtf_inverse(a0, c) - Mat8::Identity()));
      }
      if (n >= 1) {
        min_sv = std::min(min_sv, linalg::min_singular_value(mtf));
      }
      if (n == n_max && s.regime == Regime::lf) {
        const auto ev = linalg::eigenvalues(mtf);
        const auto pts = symbols::accumulation_points(s.media, Variant::mtf).points;
        accumulation = std::max(accumulation, linalg::hausdorff_distance(ev, pts));
      }
    }
  }
  out.push_back(make("calderon", calderon, 1e-10));
  out.push_back(make("square", square, 1e-10));
  out.push_back(make("inverse", inverse, 1e-9));
  out.push_back(make("b_identity", b_identity, 1e-9));
  out.push_back(make("accumulation", accumulation, 1e-2));
  // Reported as 1/sigma_min so that, like the other checks, smaller is better.
  out.push_back(make("injectivity", 1.0 / min_sv, 1e6));
  return out;
}

bool all_passed(const std::vector<CheckResult>& results)
{
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace mtf::selftest
