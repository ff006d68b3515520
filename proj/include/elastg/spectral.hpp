// SPDX-License-Identifier: Apache-2.0
#ifndef ELASTG_SPECTRAL_HPP
#define ELASTG_SPECTRAL_HPP

#include "elastg/medium.hpp"

namespace elastg {

enum class CutDelta { NegativeRealAxis, PositiveRealAxis, Entire };
enum class CutMuPlus { PositiveRealAxis, RayQuadrantIV };

// Branch cuts for sqrt(Delta), sqrt(mu-^2), sqrt(mu+^2). The minus-branch
// cut is always the positive real axis.
struct BranchConfig {
  CutDelta cut_delta = CutDelta::NegativeRealAxis;
  CutMuPlus cut_mu_plus = CutMuPlus::PositiveRealAxis;
  double theta0 = kPi / 4;   // ray angle for the Quadrant-IV cut
  double t_min_entire = 0;   // double-root location when cut_delta == Entire
};

// The cut selection of the classification table for these coefficients.
BranchConfig make_branch_config(const DerivedCoefficients& coeffs);

// Sommerfeld integral path parameters: eps(xi) = eps0^2 * chi(xi^2/eps0).
double sip_epsilon(double xi_sq, double eps0);
Complex sip_point(double xi, double eps0);

struct MuValues {
  Complex mu_plus, mu_minus;
  Complex m2_plus, m2_minus;  // mu_+^2, mu_-^2
  Complex sqrt_delta;
};

struct SpectralValues {
  Complex mu_plus, mu_minus, sqrt_delta;
  Complex p1x1, p2x1, q1x1, p2x2, q2x2, p1x2;
};

enum class PlaneWaveClass { Outgoing, Incoming, Glancing };
const char* to_string(PlaneWaveClass c);

// Evaluates mu+-, sqrt(Delta) and the eight plane-wave coefficients on the
// configured branch cuts, either at complex z^2 (SIP) or on the real axis
// where values are the eps0 -> 0+ limit resolved analytically.
class SpectralEvaluator {
 public:
  SpectralEvaluator(const DerivedCoefficients& coeffs, const BranchConfig& branch);

  const DerivedCoefficients& coeffs() const { return coeffs_; }
  const BranchConfig& branch() const { return branch_; }

  // eps0 -> 0+ limit at z^2 = t on the real axis, t = xi^2 >= 0.
  MuValues eval_mu_real(double t) const;
  // Generic complex argument (meaningful for Im(z^2) != 0).
  MuValues eval_mu(Complex z2) const;

  SpectralValues eval_coefficients(Complex z) const;

  PlaneWaveClass classify_plane_wave(bool plus_branch, double xi) const;

  // Real points in t = xi^2 where the integrand loses smoothness: zeros of
  // mu+-^2 and of Delta. Used as mandatory quadrature breakpoints.
  std::vector<double> singular_points_t(double t_max) const;

  // sqrt(Delta) limit on the real axis together with its t-derivative where
  // the value is real (derivative unused otherwise).
  Complex sqrt_delta_real(double t, double* deriv = nullptr) const;

 private:
  Complex branch_sqrt_minus(Complex w) const;  // cut on positive real axis
  Complex branch_sqrt_plus(Complex w) const;   // configured mu+ cut
  Complex sqrt_delta_complex(Complex z2) const;

  DerivedCoefficients coeffs_;
  BranchConfig branch_;
};

}  // namespace elastg

#endif
