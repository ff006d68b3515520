// SPDX-License-Identifier: Apache-2.0
#include "elastg/bessel.hpp"

#include <cmath>

namespace elastg {

namespace {

constexpr double kEuler = 0.57721566490153286060651209008240243;

Bessel01 bessel_series(double x) {
  // Power series, safe to x ~ 2.5 without cancellation loss.
  //   J0 = sum (-q)^k/(k!)^2,  q = x^2/4
  //   Y0 = (2/pi)[(ln(x/2)+gamma) J0 + sum_{k>=1} (-1)^{k+1} H_k q^k/(k!)^2]
  //   J1 = (x/2) sum (-q)^k/(k!(k+1)!)
  //   Y1 = (2/pi)(ln(x/2)+gamma) J1 - 2/(pi x)
  //        - (x/(2 pi)) sum_{k>=0} (-q)^k (H_k + H_{k+1})/(k!(k+1)!)
  const double q = x * x / 4;
  double term0 = 1, j0 = 1, y0sum = 0;
  double term1 = 1, j1sum = 1, y1sum = 1;  // k = 0: H_0 + H_1 = 1
  double hk = 0, hk1 = 1;
  for (int k = 1; k < 60; ++k) {
    term0 *= -q / (double(k) * k);
    term1 *= -q / (double(k) * (k + 1));
    hk += 1.0 / k;
    hk1 += 1.0 / (k + 1);
    j0 += term0;
    y0sum -= term0 * hk;
    j1sum += term1;
    y1sum += term1 * (hk + hk1);
    if (std::abs(term0) < 1e-18 && std::abs(term1) < 1e-18) break;
  }
  const double lg = std::log(x / 2) + kEuler;
  Bessel01 b;
  b.j0 = j0;
  b.j1 = (x / 2) * j1sum;
  b.y0 = (2 / kPi) * (lg * j0 + y0sum);
  b.y1 = (2 / kPi) * lg * b.j1 - 2 / (kPi * x) - (x / (2 * kPi)) * y1sum;
  return b;
}

// J0, J1 via the exact integral representations
//   J0(x) = (1/pi) Int_0^pi cos(x sin t) dt,
//   J1(x) = (1/pi) Int_0^pi cos(t - x sin t) dt,
// midpoint rule (spectrally accurate for these entire periodic integrands).
void bessel_j_integral(double x, double& j0, double& j1) {
  const int n = 96;
  const double h = kPi / n;
  double s0 = 0, s1 = 0;
  for (int k = 0; k < n; ++k) {
    const double t = (k + 0.5) * h;
    const double xs = x * std::sin(t);
    s0 += std::cos(xs);
    s1 += std::cos(t - xs);
  }
  j0 = s0 / n;
  j1 = s1 / n;
}

// Steed CF2: (J0' + iY0')/(J0 + iY0) = -1/(2x) + i + (i/x) * CF,
// CF = a1/(b1 + a2/(b2 + ...)), a_k = (k-1/2)^2, b_k = 2(x + k i).
Complex hankel1_log_deriv_ratio(double x) {
  const double tiny = 1e-290;
  Complex f(tiny, 0), c(tiny, 0), d(0, 0);
  for (int k = 1; k <= 400; ++k) {
    const double a = (k - 0.5) * (k - 0.5);
    const Complex b = 2.0 * Complex(x, double(k));
    d = b + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = b + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const Complex del = c * d;
    f *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return Complex(-1.0 / (2 * x), 1.0) + Complex(0, 1.0) / x * f;
}

Bessel01 bessel_asymptotic(double x) {
  // Hankel expansion: H1_nu(x) ~ sqrt(2/(pi x)) e^{i(x - nu pi/2 - pi/4)} sum t_m,
  // t_0 = 1, t_m = t_{m-1} * i (4 nu^2 - (2m-1)^2)/(8 x m).
  Bessel01 b;
  for (int nu = 0; nu <= 1; ++nu) {
    Complex t(1, 0), s(1, 0);
    for (int m = 1; m <= 30; ++m) {
      t *= Complex(0, 1) * ((4.0 * nu * nu - (2 * m - 1.0) * (2 * m - 1.0)) / (8 * x * m));
      s += t;
      if (std::abs(t) < 1e-18) break;
    }
    const double chi = x - nu * kPi / 2 - kPi / 4;
    const Complex h = std::sqrt(2 / (kPi * x)) * std::polar(1.0, chi) * s;
    if (nu == 0) { b.j0 = h.real(); b.y0 = h.imag(); }
    else { b.j1 = h.real(); b.y1 = h.imag(); }
  }
  return b;
}

}  // namespace

Bessel01 bessel01(double x) {
  if (!(x > 0)) throw Error(ErrorCode::InvalidArgument, "bessel01 requires x > 0");
  if (x < 2.0) return bessel_series(x);
  if (x > 30.0) return bessel_asymptotic(x);
  Bessel01 b;
  bessel_j_integral(x, b.j0, b.j1);
  const Complex r = hankel1_log_deriv_ratio(x);
  const double p = r.real(), q = r.imag();
  const double j0p = -b.j1;
  // J0' + iY0' = (p + iq)(J0 + iY0)
  b.y0 = (p * b.j0 - j0p) / q;
  b.y1 = -(q * b.j0 + p * b.y0);
  return b;
}

}  // namespace elastg
