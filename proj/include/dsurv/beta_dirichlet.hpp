#pragma once

#include <vector>

#include "dsurv/rng.hpp"

namespace dsurv {

// Integer-parameter Beta(a, b). a == 0 denotes the width of an empty spacing
// sum, i.e. a point mass at zero.
struct BetaParams {
  int a = 0;
  int b = 1;
  void validate() const;
};

// Regularized incomplete beta I_x(a, b). For a == 0 returns 1 for any x in
// [0, 1] (the point mass sits at zero).
double beta_cdf(double x, const BetaParams& p);

// Left limit Pr(X < x). Differs from beta_cdf only at the a == 0 atom, where
// Pr(X < 0) = 0 but Pr(X <= 0) = 1.
double beta_cdf_left(double x, const BetaParams& p);

// Inverse of beta_cdf by monotone root-finding; requires a >= 1 and u in (0,1).
double beta_quantile(double u, const BetaParams& p);

// The m+1 spacings of m sorted uniforms (a flat Dirichlet over m+1 cells).
struct SpacingDraw {
  std::vector<double> gaps;
  int m() const { return static_cast<int>(gaps.size()) - 1; }
};

SpacingDraw sample_spacings(int m, RngStream& rng);

// Pr(W_inner >= q_l AND W_outer <= q_u), where W_inner aggregates v_inner of
// the m+1 flat-Dirichlet cells and W_outer extends it to v_outer cells.
// Degenerate count configurations reduce to single beta_cdf calls; the
// general two-sided case is evaluated by adaptive quadrature to 1e-8.
double joint_rect_prob(int v_inner, int v_outer, int m, double q_l, double q_u);

}  // namespace dsurv
