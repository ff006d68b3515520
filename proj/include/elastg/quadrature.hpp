// SPDX-License-Identifier: Apache-2.0
#ifndef ELASTG_QUADRATURE_HPP
#define ELASTG_QUADRATURE_HPP

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "elastg/common.hpp"

namespace elastg {

// Gauss-Legendre nodes/weights on [-1, 1], computed by Newton iteration on
// the Legendre recurrence (cached per n).
const std::vector<double>& gl_nodes(int n);
const std::vector<double>& gl_weights(int n);

struct PanelSet {
  std::vector<double> nodes;
  std::vector<double> weights;
  template <class F>
  auto apply(F&& f) const -> decltype(f(0.0)) {
    decltype(f(0.0)) s{};
    for (size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
};

struct PanelGrading {
  // Endpoints (subset of breakpoints) where the integrand behaves like an
  // analytic function of sqrt(x - b); handled by the substitution x = b + u^2.
  std::vector<double> sqrt_endpoints;
  // Oscillation control: target |phase'| so that panels satisfy
  // len * rate <= max_phase_per_panel. rate may be null (no limit).
  std::function<double(double)> local_rate;
  double max_phase_per_panel = 3.0;
  double max_panel_len = 1e300;
};

// Composite Gauss-Legendre rule over [breakpoints.front(), breakpoints.back()]
// with mandatory panel boundaries at every breakpoint.
PanelSet composite_gl_panels(const std::vector<double>& breakpoints,
                             const PanelGrading& grading = {},
                             int points_per_panel = 16);

// Order-6 Alpert correction for 2pi-periodic integrands with a logarithmic
// singularity at the target node. Off-grid nodes sit at offsets +-x_i * h.
struct AlpertRule {
  int order = 6;
  int grid_shift = 3;  // a: trapezoid part uses offsets a .. N-a
  std::vector<double> nodes;    // x_i in units of h
  std::vector<double> weights;  // w_i (multiply by h)
};
const AlpertRule& alpert_rule_order6();

// Minimum N accepted by the composite Alpert rule.
int alpert_min_nodes(const AlpertRule& rule);

// Weights of the balanced trigonometric interpolant through N uniform samples
// t_k = 2 pi k / N evaluated at offset delta: f(t_j + delta) ~= sum_l c[l] f_{j+l mod N}.
std::vector<double> trig_interp_weights(int N, double delta);

// Assembles the N x N Nystrom matrix of the Alpert-corrected periodic rule:
//   (M phi)_j ~= Integral_0^{2pi} kernel(j, s) phi(s) ds
// where kernel(j, .) is log-singular at s = t_j and phi is known at the grid.
Eigen::MatrixXcd alpert_assemble(
    int N, const AlpertRule& rule,
    const std::function<Complex(int, double)>& kernel);

// Periodic spectral differentiation matrix (N even): exact for trigonometric
// polynomials of degree < N/2.
Eigen::MatrixXd spectral_diff_matrix(int N);

// --- Chebyshev tensor interpolation on [0,a]x[0,b] ------------------------

struct Cheb2 {
  int nu = 0, nv = 0;          // degrees (nu+1 x nv+1 coefficients)
  double umax = 0, vmax = 0;
  Eigen::MatrixXcd coef;       // coef(i,j) multiplies T_i(su) T_j(sv)
  Complex eval(double u, double v) const;
};

std::vector<double> cheb_lobatto(int n);  // n+1 points in [-1, 1], descending
// values(i,j) = f(u_i, v_j) on Lobatto grids mapped to [0,umax]x[0,vmax].
Cheb2 cheb2_fit(const Eigen::MatrixXcd& values, double umax, double vmax);

}  // namespace elastg

#endif
