// SPDX-License-Identifier: Apache-2.0
#include "elastg/expint.hpp"

#include <cmath>

namespace elastg {

namespace {

constexpr double kEuler = 0.57721566490153286060651209008240243;
constexpr double kSeriesRadius = 3.0;

// Power series, DLMF 8.19.8:
//   E_n(z) = ((-z)^{n-1}/(n-1)!) (psi(n) - Log z) - sum_{k>=0, k != n-1} (-z)^k / (k! (k-n+1))
Complex en_series(int n, Complex z) {
  double psi = -kEuler;
  for (int k = 1; k < n; ++k) psi += 1.0 / k;
  Complex pow_nm1 = 1.0;  // (-z)^{n-1}/(n-1)!
  for (int k = 1; k < n; ++k) pow_nm1 *= -z / double(k);
  Complex sum = pow_nm1 * (psi - std::log(z));
  Complex term = 1.0;  // (-z)^k / k!
  for (int k = 0; k < 200; ++k) {
    if (k != n - 1) {
      const Complex c = term / double(k - n + 1);
      sum -= c;
      if (std::abs(c) < 1e-18 * (std::abs(sum) + 1e-300) && k > std::abs(z)) break;
    }
    term *= -z / double(k + 1);
  }
  return sum;
}

// Modified Lentz continued fraction,
//   E_n(z) = e^{-z} / (z + n - 1*n/(z + n + 2 - 2(n+1)/(z + n + 4 - ...)))
Complex en_confrac(int n, Complex z) {
  const double tiny = 1e-290;
  Complex b = z + double(n);
  Complex c = 1.0 / tiny;
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 1; i <= 400; ++i) {
    const Complex a = -double(i) * double(n - 1 + i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const Complex del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-z) * h;
}

}  // namespace

Complex exp_integral_En(int n, Complex z) {
  if (n < -1) throw Error(ErrorCode::InvalidArgument, "exp_integral_En: n >= -1");
  if (z == Complex(0, 0))
    throw Error(ErrorCode::BranchCutHit, "E_n undefined at z = 0");
  if (z.imag() == 0 && z.real() < 0)
    throw Error(ErrorCode::BranchCutHit, "E_n branch cut on the negative real axis");
  if (n == -1) return std::exp(-z) * (1.0 + z) / (z * z);
  if (n == 0) return std::exp(-z) / z;
  if (std::abs(z) <= kSeriesRadius) return en_series(n, z);
  return en_confrac(n, z);
}

std::vector<Complex> exp_integral_family(int nmax, Complex z) {
  std::vector<Complex> out(nmax + 2);
  for (int n = -1; n <= nmax; ++n) out[n + 1] = exp_integral_En(n, z);
  return out;
}

}  // namespace elastg
