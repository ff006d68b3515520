// SPDX-License-Identifier: Apache-2.0
#ifndef ELASTG_MEDIUM_HPP
#define ELASTG_MEDIUM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elastg/common.hpp"

namespace elastg {

// Orthotropic stiffness in Voigt notation (c13 = c23 = 0) plus density and
// angular frequency. All spectral algebra runs in the scaled system
// rho*omega^2 = 1; general (rho, omega) is handled by rescaling coordinates
// at the evaluator boundary.
struct ElasticMedium {
  double c11 = 0, c12 = 0, c22 = 0, c33 = 0;
  double rho = 1, omega = 1;

  // sqrt(rho)*omega: x_scaled = wavenumber_scale()*x.
  double wavenumber_scale() const { return std::sqrt(rho) * omega; }
};

// Checks condition (C0) and positivity of rho, omega.
ElasticMedium validate_medium(double c11, double c12, double c22, double c33,
                              double rho, double omega);

// The representative media catalog ("I" .. "IX") plus "iso" (c11=c22=3,
// c12=c33=1, the isotropic reduction used in tests).
ElasticMedium medium_catalog(const std::string& name);
std::vector<std::string> medium_catalog_names();

ElasticMedium medium_from_json_text(const std::string& text);
ElasticMedium medium_from_json_file(const std::string& path);

enum class Axis { X2, X1 };

enum class DeltaMinClass { NonNegative, FiniteNegative, MinusInfinity };

// Sign of a scalar with a degeneracy band: values within tol of zero are
// Degenerate; classification treats Degenerate as exactly zero (media (V)
// and (IX) sit on such boundaries by construction).
enum class SignClass { Negative, Degenerate, Positive };

SignClass classify_sign(double value, double scale);

const char* to_string(DeltaMinClass c);
const char* to_string(SignClass s);

struct DerivedCoefficients {
  // Tensor entries after the axis permutation (X1 swaps c11 and c22).
  double c11 = 0, c12 = 0, c22 = 0, c33 = 0;
  Axis axis = Axis::X2;

  double alpha0 = 0, alpha1 = 0, alpha2 = 0;
  double beta0 = 0, beta1 = 0;
  double gamma1 = 0, gamma2 = 0;
  double xi0_sq = 0;

  SignClass sign_beta1 = SignClass::Degenerate;
  SignClass sign_gamma2 = SignClass::Degenerate;
  SignClass sign_alpha1 = SignClass::Degenerate;
  SignClass sign_alpha2 = SignClass::Degenerate;

  DeltaMinClass delta_min_class = DeltaMinClass::NonNegative;
  double delta_min = 0;       // min over t >= 0 (ignored for MinusInfinity)
  double delta_min_arg = 0;   // argmin in t = xi^2
  bool delta_entire = false;  // min == 0 at an interior double root

  // Positive roots of eq. (realroot) at epsilon = 0, ordered xi1^2 < xi2^2.
  std::optional<std::pair<double, double>> crossings;
  std::optional<double> xi_star_sq;

  double sign_scale = 0;  // absolute tolerance used for sign classification

  double delta(double t) const { return alpha0 + 2 * alpha1 * t + alpha2 * t * t; }
  double delta_deriv(double t) const { return 2 * alpha1 + 2 * alpha2 * t; }

  bool beta1_zero() const { return sign_beta1 == SignClass::Degenerate; }
  bool alpha2_zero() const { return sign_alpha2 == SignClass::Degenerate; }
  bool alpha1_zero() const { return sign_alpha1 == SignClass::Degenerate; }
  bool isotropic_case() const { return alpha2_zero() && alpha1_zero(); }
};

DerivedCoefficients derive_coefficients(const ElasticMedium& medium, Axis axis);

struct WaveRegime {
  Axis axis = Axis::X2;
  bool bfj_strong = false;
  bool bfj_weak = false;
  DeltaMinClass delta_min_class = DeltaMinClass::NonNegative;
  // Interval of xi^2 where the minus branch is incoming; second = +inf for
  // the unbounded case. Absent iff delta_min_class == NonNegative.
  std::optional<std::pair<double, double>> minus_branch_incoming;
  bool plus_branch_outgoing = true;
};

WaveRegime classify_regime(const DerivedCoefficients& coeffs);

// Positive real roots xi^2 of eq. (realroot) at the given epsilon >= 0, with
// the corresponding real crossing value zeta0. For beta1 = 0 returns the
// single point xi0^2 paired with the negative root value of the mu pair.
std::vector<std::pair<double, double>> crossing_points(
    const DerivedCoefficients& coeffs, double epsilon);

}  // namespace elastg

#endif
