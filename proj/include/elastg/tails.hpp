// SPDX-License-Identifier: Apache-2.0
#ifndef ELASTG_TAILS_HPP
#define ELASTG_TAILS_HPP

#include <vector>

#include "elastg/spectral.hpp"

namespace elastg {

enum class CaseTag { Isotropic, Alpha2Zero, Alpha2Nonzero };
CaseTag classify_case(const DerivedCoefficients& coeffs);
const char* to_string(CaseTag t);

// The three scalar quadrant-reduced kernels: G11 and G22 are even in both
// arguments; the shared off-diagonal kernel (G21 = G12 up to sign factors)
// is odd.
enum class KernelId { G11 = 0, G21 = 1, G22 = 2 };
enum class DerivOrder { Value = 0, D1 = 1, D2 = 2 };

bool kernel_odd(KernelId k, DerivOrder d);

// Large-|xi| expansion of one branch of one kernel:
//   W(xi) e^{i mu(xi) v} = e^{i |xi| p0 v} sum_{n >= n_min} c_n(v) / |xi|^n,
//   c_n(v) = e^{i sigma v} sum_{m} A[n][m] v^m.
struct TailExpansion {
  CaseTag case_tag = CaseTag::Alpha2Nonzero;
  KernelId kernel = KernelId::G11;
  DerivOrder deriv = DerivOrder::Value;
  bool plus_branch = true;
  bool odd = false;
  Complex p0, sigma;
  int n_min = 0;
  int N0 = 8;
  double M = 20;
  std::vector<std::vector<Complex>> A;  // A[n - n_min][m]

  Complex c_n(int n, double v) const;
};

// Builds all tail tables of one medium/branch configuration in one pass
// (the circle data is shared).
class TailBuilder {
 public:
  TailBuilder(const SpectralEvaluator& spec, int N0, double M);

  TailExpansion build(KernelId kernel, DerivOrder deriv, bool plus_branch) const;

  Complex p0(bool plus_branch) const { return plus_branch ? p0p_ : p0m_; }
  Complex sigma(bool plus_branch) const { return plus_branch ? sigp_ : sigm_; }

 private:
  std::vector<Complex> amplitude_coeffs(KernelId k, DerivOrder d, bool plus) const;

  const SpectralEvaluator& spec_;
  int N0_;
  double M_;
  double r0_;
  int K_;  // circle samples
  std::vector<Complex> s_;                    // sample points on |s| = r0
  std::vector<Complex> D_, Hp_, Hm_, hp_, hm_;
  std::vector<Complex> gcoef_p_, gcoef_m_;    // Taylor coefficients of g_b(s)
  Complex p0p_, p0m_, sigp_, sigm_;
};

TailExpansion build_tail_expansion(const SpectralEvaluator& spec, KernelId kernel,
                                   DerivOrder deriv, bool plus_branch, int N0, double M);

// Symmetrized tail integrals over |xi| > M:
//   even: Int e^{i |xi| alpha v + i xi u}/|xi|^n dxi
//        = M^{1-n} [E_n(-iM(alpha v + u)) + E_n(-iM(alpha v - u))]
//   odd:  sgn(xi) inserted, minus sign between the E_n terms.
Complex tail_integral_IMn(int n, double u, double v, Complex alpha, double M, bool odd);

// E_n families at w+- = -iM(alpha v +- u), reused across n and kernels.
struct TailIntegralTable {
  double M = 0;
  int nmax = 0;
  std::vector<Complex> Ep, Em;  // index n+1, n = -1..nmax
  Complex I(int n, bool odd) const;
};
TailIntegralTable make_tail_integral_table(int nmax, double u, double v,
                                           Complex alpha, double M);

}  // namespace elastg

#endif
