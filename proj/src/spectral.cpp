// SPDX-License-Identifier: Apache-2.0
#include "elastg/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace elastg {

const char* to_string(PlaneWaveClass c) {
  switch (c) {
    case PlaneWaveClass::Outgoing: return "Outgoing";
    case PlaneWaveClass::Incoming: return "Incoming";
    case PlaneWaveClass::Glancing: return "Glancing";
  }
  return "?";
}

BranchConfig make_branch_config(const DerivedCoefficients& k) {
  BranchConfig b;
  switch (k.delta_min_class) {
    case DeltaMinClass::FiniteNegative:
      b.cut_delta = CutDelta::PositiveRealAxis;
      b.cut_mu_plus = CutMuPlus::PositiveRealAxis;  // gamma2 < 0 in this class
      break;
    case DeltaMinClass::NonNegative:
    case DeltaMinClass::MinusInfinity:
      b.cut_delta = k.delta_entire ? CutDelta::Entire : CutDelta::NegativeRealAxis;
      b.cut_mu_plus = k.sign_gamma2 == SignClass::Positive
                          ? CutMuPlus::RayQuadrantIV
                          : CutMuPlus::PositiveRealAxis;
      break;
  }
  if (k.delta_entire) b.t_min_entire = k.delta_min_arg;
  return b;
}

double sip_epsilon(double xi_sq, double eps0) {
  if (eps0 <= 0) return 0;
  const double chi = std::min(xi_sq / eps0, 1.0);
  return eps0 * eps0 * chi;
}

Complex sip_point(double xi, double eps0) {
  if (eps0 <= 0 || xi == 0) return Complex(xi, 0);
  const double eps = sip_epsilon(xi * xi, eps0);
  return sgn(xi) * std::sqrt(Complex(xi * xi, -eps));
}

SpectralEvaluator::SpectralEvaluator(const DerivedCoefficients& coeffs,
                                     const BranchConfig& branch)
    : coeffs_(coeffs), branch_(branch) {
  const BranchConfig want = make_branch_config(coeffs);
  if (branch.cut_delta != want.cut_delta || branch.cut_mu_plus != want.cut_mu_plus)
    throw Error(ErrorCode::BranchMismatch,
                "branch configuration disagrees with the classification table");
  if (!(branch.theta0 > 0 && branch.theta0 < kPi / 2))
    throw Error(ErrorCode::BranchMismatch, "theta0 must lie in (0, pi/2)");
}

Complex SpectralEvaluator::branch_sqrt_minus(Complex w) const {
  double th = std::arg(w);
  if (th < 0) th += 2 * kPi;
  return std::sqrt(std::abs(w)) * std::polar(1.0, th / 2);
}

Complex SpectralEvaluator::branch_sqrt_plus(Complex w) const {
  if (branch_.cut_mu_plus == CutMuPlus::PositiveRealAxis) return branch_sqrt_minus(w);
  double th = std::arg(w);
  if (th < -branch_.theta0) th += 2 * kPi;
  return std::sqrt(std::abs(w)) * std::polar(1.0, th / 2);
}

Complex SpectralEvaluator::sqrt_delta_complex(Complex z2) const {
  const auto& k = coeffs_;
  const Complex d = k.alpha0 + 2.0 * k.alpha1 * z2 + k.alpha2 * z2 * z2;
  switch (branch_.cut_delta) {
    case CutDelta::NegativeRealAxis:
      return std::sqrt(d);
    case CutDelta::PositiveRealAxis:
      return branch_sqrt_minus(d);
    case CutDelta::Entire:
      return std::sqrt(k.alpha2) * (z2 - branch_.t_min_entire);
  }
  return std::sqrt(d);
}

Complex SpectralEvaluator::sqrt_delta_real(double t, double* deriv) const {
  const auto& k = coeffs_;
  const double dt = k.delta(t);
  const double half_deriv = k.alpha1 + k.alpha2 * t;  // Delta'/2
  if (deriv) *deriv = 0;
  if (branch_.cut_delta == CutDelta::Entire) {
    const double sa = std::sqrt(k.alpha2);
    if (deriv) *deriv = sa;
    return Complex(sa * (t - branch_.t_min_entire), 0);
  }
  // Approach side of Delta(z^2): Im = -2 (alpha2 t + alpha1) eps.
  const double side = half_deriv > 0 ? -1.0 : 1.0;
  if (branch_.cut_delta == CutDelta::NegativeRealAxis) {
    if (dt >= 0) {
      const double r = std::sqrt(dt);
      if (deriv && dt > 0) *deriv = half_deriv / r;
      return Complex(r, 0);
    }
    return Complex(0, side * std::sqrt(-dt));
  }
  // Positive-real-axis cut.
  if (dt < 0) return Complex(0, std::sqrt(-dt));
  const double sign = side >= 0 ? 1.0 : -1.0;
  const double r = std::sqrt(dt);
  if (deriv && dt > 0) *deriv = sign * half_deriv / r;
  return Complex(sign * r, 0);
}

MuValues SpectralEvaluator::eval_mu(Complex z2) const {
  const auto& k = coeffs_;
  MuValues out;
  out.sqrt_delta = sqrt_delta_complex(z2);
  const double den = 2 * k.c33 * k.c22;
  out.m2_plus = (k.beta0 + k.beta1 * z2 + out.sqrt_delta) / den;
  out.m2_minus = (k.beta0 + k.beta1 * z2 - out.sqrt_delta) / den;
  out.mu_plus = branch_sqrt_plus(out.m2_plus);
  out.mu_minus = branch_sqrt_minus(out.m2_minus);
  return out;
}

MuValues SpectralEvaluator::eval_mu_real(double t) const {
  const auto& k = coeffs_;
  MuValues out;
  double dsq = 0;
  out.sqrt_delta = sqrt_delta_real(t, &dsq);
  const double den = 2 * k.c33 * k.c22;
  out.m2_plus = (k.beta0 + k.beta1 * t + out.sqrt_delta) / den;
  out.m2_minus = (k.beta0 + k.beta1 * t - out.sqrt_delta) / den;

  const double m2_scale =
      (std::abs(k.beta0) + std::abs(k.beta1) * t + std::abs(out.sqrt_delta)) / den + 1e-300;

  auto resolve = [&](Complex m2, double sign_sq, bool plus_cut) -> Complex {
    if (std::abs(m2.imag()) > 1e-14 * m2_scale) {
      // Genuinely complex; off both cuts.
      return plus_cut ? branch_sqrt_plus(m2) : branch_sqrt_minus(m2);
    }
    const double w = m2.real();
    if (w < 0) return Complex(0, std::sqrt(-w));
    if (w == 0) return Complex(0, 0);
    if (plus_cut && branch_.cut_mu_plus == CutMuPlus::RayQuadrantIV)
      return Complex(std::sqrt(w), 0);  // positive axis interior to the ray cut
    // Positive-real cut: side of approach = -sign(d(m2)/dt).
    const double d = (k.beta1 + sign_sq * dsq) / den;
    double side;
    if (std::abs(d) > 1e-10 * m2_scale) {
      side = d > 0 ? -1.0 : 1.0;
    } else {
      // First derivative degenerate: probe the trend downstream.
      const double h = 1e-6 * (1 + t);
      double dsq2 = 0;
      (void)sqrt_delta_real(t + h, &dsq2);
      const double d2 = (k.beta1 + sign_sq * dsq2) / den;
      side = d2 > 0 ? -1.0 : 1.0;
    }
    return Complex(side * std::sqrt(w), 0);
  };

  out.mu_plus = resolve(out.m2_plus, +1.0, true);
  out.mu_minus = resolve(out.m2_minus, -1.0, false);
  return out;
}

SpectralValues SpectralEvaluator::eval_coefficients(Complex z) const {
  const auto& k = coeffs_;
  const Complex z2 = z * z;
  const MuValues mv =
      z.imag() == 0 ? eval_mu_real(z.real() * z.real()) : eval_mu(z2);
  // The 1e-13-of-scale test is applied to the squared quantities: near a
  // simple zero the rounded mu can only reach ~sqrt(eps) of scale.
  const double d_scale = std::abs(k.alpha0) + 2 * std::abs(k.alpha1 * z2) +
                         std::abs(k.alpha2 * z2 * z2) + 1e-300;
  const double m2_scale = (std::abs(k.beta0) + std::abs(k.beta1 * z2) +
                           std::sqrt(d_scale)) / (2 * k.c33 * k.c22) + 1e-300;
  if (std::abs(mv.sqrt_delta * mv.sqrt_delta) < 1e-13 * d_scale ||
      std::abs(mv.m2_plus) < 1e-13 * m2_scale ||
      std::abs(mv.m2_minus) < 1e-13 * m2_scale)
    throw Error(ErrorCode::SpectralSingularity,
                "z lies at a zero of sqrt(Delta) or mu+-; split quadrature panels here");

  SpectralValues v;
  v.mu_plus = mv.mu_plus;
  v.mu_minus = mv.mu_minus;
  v.sqrt_delta = mv.sqrt_delta;
  const Complex two_sq = 2.0 * mv.sqrt_delta;
  v.p2x1 = -kImag * z * (k.c12 + k.c33) / two_sq;
  v.p1x2 = v.p2x1;
  v.p1x1 = -kImag * (-k.c22 * mv.m2_plus + (1.0 - k.c33 * z2)) / (two_sq * mv.mu_plus);
  v.q1x1 = kImag * (-k.c22 * mv.m2_minus + (1.0 - k.c33 * z2)) / (two_sq * mv.mu_minus);
  v.p2x2 = -kImag * (-k.c33 * mv.m2_plus + (1.0 - k.c11 * z2)) / (two_sq * mv.mu_plus);
  v.q2x2 = kImag * (-k.c33 * mv.m2_minus + (1.0 - k.c11 * z2)) / (two_sq * mv.mu_minus);
  return v;
}

PlaneWaveClass SpectralEvaluator::classify_plane_wave(bool plus_branch, double xi) const {
  const MuValues mv = eval_mu_real(xi * xi);
  const Complex mu = plus_branch ? mv.mu_plus : mv.mu_minus;
  const double scale = std::abs(mu) + 1e-300;
  if (mu.real() > 1e-12 * scale) return PlaneWaveClass::Outgoing;
  if (mu.real() < -1e-12 * scale) return PlaneWaveClass::Incoming;
  return PlaneWaveClass::Glancing;
}

std::vector<double> SpectralEvaluator::singular_points_t(double t_max) const {
  const auto& k = coeffs_;
  std::vector<double> pts;
  auto push = [&](double t) {
    if (t > 1e-14 && t < t_max) pts.push_back(t);
  };
  push(1.0 / k.c11);
  push(1.0 / k.c33);
  // Zeros of Delta(t).
  if (k.sign_alpha2 != SignClass::Degenerate) {
    const double disc = k.alpha1 * k.alpha1 - k.alpha2 * k.alpha0;
    if (disc >= 0) {
      const double sq = std::sqrt(disc);
      const double q = -(k.alpha1 + (k.alpha1 >= 0 ? sq : -sq));
      push(q / k.alpha2);
      if (q != 0) push(k.alpha0 / q);
    }
  } else if (!k.alpha1_zero()) {
    push(-k.alpha0 / (2 * k.alpha1));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](double a, double b) { return std::abs(a - b) < 1e-12; }),
            pts.end());
  return pts;
}

}  // namespace elastg
