// SPDX-License-Identifier: Apache-2.0
#include "elastg/tails.hpp"

#include <algorithm>
#include <cmath>

#include "elastg/expint.hpp"

namespace elastg {

CaseTag classify_case(const DerivedCoefficients& k) {
  if (k.isotropic_case()) return CaseTag::Isotropic;
  if (k.alpha2_zero()) return CaseTag::Alpha2Zero;
  return CaseTag::Alpha2Nonzero;
}

const char* to_string(CaseTag t) {
  switch (t) {
    case CaseTag::Isotropic: return "Isotropic";
    case CaseTag::Alpha2Zero: return "Alpha2Zero";
    case CaseTag::Alpha2Nonzero: return "Alpha2Nonzero";
  }
  return "?";
}

bool kernel_odd(KernelId k, DerivOrder d) {
  const bool base_odd = (k == KernelId::G21);
  return d == DerivOrder::D1 ? !base_odd : base_odd;
}

Complex TailExpansion::c_n(int n, double v) const {
  const auto& row = A[size_t(n - n_min)];
  Complex poly = 0;
  for (size_t m = row.size(); m-- > 0;) poly = poly * v + row[m];
  return std::exp(kImag * sigma * v) * poly;
}

namespace {

// Laurent/Taylor coefficients (normalized by r0^k) from uniform circle
// samples: values[j] = f(r0 e^{i theta_j}). Returns b_k for k in
// [kmin, kmax], b_k = coeff of s^k times r0^k.
std::vector<Complex> circle_coeffs(const std::vector<Complex>& values, int kmin,
                                   int kmax) {
  const int K = int(values.size());
  std::vector<Complex> out(kmax - kmin + 1);
  double scale = 0;
  for (const auto& v : values) scale = std::max(scale, std::abs(v));
  for (int k = kmin; k <= kmax; ++k) {
    Complex s = 0;
    for (int j = 0; j < K; ++j) {
      const double th = 2 * kPi * j / K;
      s += values[j] * std::polar(1.0, -k * th);
    }
    s /= double(K);
    if (std::abs(s) < 1e-14 * scale) s = 0;
    out[k - kmin] = s;
  }
  return out;
}

}  // namespace

TailBuilder::TailBuilder(const SpectralEvaluator& spec, int N0, double M)
    : spec_(spec), N0_(N0), M_(M) {
  const auto& k = spec.coeffs();
  if (classify_case(k) == CaseTag::Isotropic)
    throw Error(ErrorCode::CaseMismatch,
                "isotropic media use the closed form; no tail expansion");
  if (N0 < 1 || M <= 1)
    throw Error(ErrorCode::InvalidArgument, "need N0 >= 1 and M > 1");
  r0_ = 1.0 / (2 * M);
  K_ = 1024;
  s_.resize(K_);
  for (int j = 0; j < K_; ++j) s_[j] = std::polar(r0_, 2 * kPi * j / K_);

  // Anchors: the real-axis resolved values at t* = 1/r0^2.
  const double t_star = 1.0 / (r0_ * r0_);
  const MuValues anchor = spec.eval_mu_real(t_star);

  D_.resize(K_);
  Hp_.resize(K_);
  Hm_.resize(K_);
  hp_.resize(K_);
  hm_.resize(K_);

  const double c22 = k.c22, c33 = k.c33;
  // Continuity walk of sqrt(alpha2 + 2 alpha1 s^2 + alpha0 s^4) anchored at
  // the real axis (alpha2 = 0 included: the radicand stays clear of zero on
  // the circle, with both square-root sheets visited an even number of times).
  {
    Complex prev = r0_ * r0_ * anchor.sqrt_delta;
    double minmod = 1e300, maxmod = 0;
    for (int j = 0; j < K_; ++j) {
      const Complex s2 = s_[j] * s_[j];
      const Complex rad = k.alpha2 + 2.0 * k.alpha1 * s2 + k.alpha0 * s2 * s2;
      minmod = std::min(minmod, std::abs(rad));
      maxmod = std::max(maxmod, std::abs(rad));
      Complex cand = std::sqrt(rad);
      if (std::abs(cand - prev) > std::abs(-cand - prev)) cand = -cand;
      D_[j] = cand;
      prev = cand;
    }
    if (minmod < 0.2 * maxmod)
      throw Error(ErrorCode::CaseMismatch,
                  "Delta nearly vanishes at |xi| = 2M; increase M for this medium");
    if (std::abs(D_[0] - r0_ * r0_ * anchor.sqrt_delta) >
        1e-8 * std::abs(D_[0]) + 1e-300)
      throw Error(ErrorCode::CaseMismatch, "branch walk of sqrt(Delta) did not close");
  }

  auto walk_sqrt = [&](const std::vector<Complex>& H, Complex anchor_val,
                       std::vector<Complex>& out) {
    Complex prev = anchor_val;
    for (int j = 0; j < K_; ++j) {
      Complex cand = std::sqrt(H[j]);
      if (std::abs(cand - prev) > std::abs(-cand - prev)) cand = -cand;
      out[j] = cand;
      prev = cand;
    }
    if (std::abs(out[0] - anchor_val) > 1e-8 * std::abs(anchor_val))
      throw Error(ErrorCode::CaseMismatch, "branch walk of mu did not close");
  };

  for (int j = 0; j < K_; ++j) {
    const Complex s2 = s_[j] * s_[j];
    Hp_[j] = (k.beta1 + k.beta0 * s2 + D_[j]) / (2 * c33 * c22);
    Hm_[j] = (k.beta1 + k.beta0 * s2 - D_[j]) / (2 * c33 * c22);
  }
  walk_sqrt(Hp_, r0_ * anchor.mu_plus, hp_);
  walk_sqrt(Hm_, r0_ * anchor.mu_minus, hm_);

  // h_b(s) = p0 + sigma s + O(s^2); g_b = (h_b - p0 - sigma s)/s.
  auto extract_exponents = [&](const std::vector<Complex>& h, Complex& p0,
                               Complex& sig, std::vector<Complex>& gcoef) {
    auto b = circle_coeffs(h, 0, N0_ + 2);
    p0 = b[0];
    sig = b[1] / r0_;
    // g in normalized form: g(s) = sum_j gcoef[j] (s/r0)^j, gcoef[0] = 0.
    gcoef.assign(N0_ + 2, Complex(0, 0));
    for (int j = 1; j <= N0_ + 1; ++j) gcoef[j] = b[j + 1] / r0_;
    if (std::abs(p0.imag()) < 1e-12)
      throw Error(ErrorCode::CaseMismatch, "Im(p0) must be positive");
    if (std::abs(sig) < 1e-8 * std::abs(p0)) sig = 0;
  };
  extract_exponents(hp_, p0p_, sigp_, gcoef_p_);
  extract_exponents(hm_, p0m_, sigm_, gcoef_m_);
}

std::vector<Complex> TailBuilder::amplitude_coeffs(KernelId kid, DerivOrder d,
                                                   bool plus) const {
  const auto& k = spec_.coeffs();
  const double c11 = k.c11, c12 = k.c12, c22 = k.c22, c33 = k.c33;
  const auto& H = plus ? Hp_ : Hm_;
  const auto& h = plus ? hp_ : hm_;
  std::vector<Complex> vals(K_);
  for (int j = 0; j < K_; ++j) {
    const Complex s = s_[j];
    const Complex s2 = s * s;
    Complex w;
    switch (kid) {
      case KernelId::G11: {
        const Complex num = -c22 * H[j] + s2 - c33;
        w = (plus ? -kImag : kImag) * s * num / (2.0 * D_[j] * h[j]);
        break;
      }
      case KernelId::G22: {
        const Complex num = -c33 * H[j] + s2 - c11;
        w = (plus ? -kImag : kImag) * s * num / (2.0 * D_[j] * h[j]);
        break;
      }
      case KernelId::G21: {
        w = -kImag * s * (c12 + c33) / (2.0 * D_[j]);
        if (!plus) w = -w;
        break;
      }
    }
    switch (d) {
      case DerivOrder::Value: break;
      case DerivOrder::D1: w *= kImag / s; break;
      case DerivOrder::D2: w *= kImag * h[j] / s; break;
    }
    vals[j] = w;
  }
  return circle_coeffs(vals, -1, N0_);  // normalized by r0^k
}

TailExpansion TailBuilder::build(KernelId kid, DerivOrder d, bool plus) const {
  TailExpansion t;
  t.case_tag = classify_case(spec_.coeffs());
  t.kernel = kid;
  t.deriv = d;
  t.plus_branch = plus;
  t.odd = kernel_odd(kid, d);
  t.p0 = plus ? p0p_ : p0m_;
  t.sigma = plus ? sigp_ : sigm_;
  t.n_min = -1;
  t.N0 = N0_;
  t.M = M_;

  const auto wb = amplitude_coeffs(kid, d, plus);   // w[k+1] ~ s^k, k=-1..N0
  const auto& g = plus ? gcoef_p_ : gcoef_m_;        // g[j] ~ s^j, j>=1

  // P_m = (i g)^m / m! in normalized coefficients, then convolve with w.
  const int nrow = N0_ - t.n_min + 1;
  t.A.assign(nrow, {});
  std::vector<Complex> Pm(N0_ + 2, Complex(0, 0));
  Pm[0] = 1;  // m = 0
  for (int n = t.n_min; n <= N0_; ++n)
    t.A[n - t.n_min].assign(n - t.n_min + 1, Complex(0, 0));
  for (int m = 0; m <= N0_ + 1; ++m) {
    if (m > 0) {
      // Pm <- Pm * (i g) / m, truncated.
      std::vector<Complex> next(N0_ + 2, Complex(0, 0));
      for (int a = 0; a + 1 <= N0_ + 1; ++a) {
        if (Pm[a] == Complex(0, 0)) continue;
        for (int b = 1; a + b <= N0_ + 1; ++b)
          next[a + b] += Pm[a] * kImag * g[b] / double(m);
      }
      Pm = std::move(next);
    }
    // A[n][m] = (w * Pm)_n ; un-normalize by r0^{-n} at the end.
    for (int n = t.n_min; n <= N0_; ++n) {
      if (m > n - t.n_min) continue;
      Complex acc = 0;
      for (int kk = t.n_min; kk <= n; ++kk) {
        const int j = n - kk;
        if (j >= 0 && j <= N0_ + 1) acc += wb[kk + 1] * Pm[j];
      }
      t.A[n - t.n_min][m] = acc;
    }
  }
  // Un-normalize: the stored table is in true 1/|xi|^n units.
  for (int n = t.n_min; n <= N0_; ++n) {
    const double r = std::pow(r0_, -n);
    for (auto& a : t.A[n - t.n_min]) a *= r;
  }
  return t;
}

TailExpansion build_tail_expansion(const SpectralEvaluator& spec, KernelId kernel,
                                   DerivOrder deriv, bool plus_branch, int N0,
                                   double M) {
  TailBuilder b(spec, N0, M);
  return b.build(kernel, deriv, plus_branch);
}

Complex tail_integral_IMn(int n, double u, double v, Complex alpha, double M,
                          bool odd) {
  if (!(alpha.imag() > 0))
    throw Error(ErrorCode::InvalidArgument, "tail integral requires Im(alpha) > 0");
  const Complex wp = -kImag * M * (alpha * v + u);
  const Complex wm = -kImag * M * (alpha * v - u);
  const Complex ep = exp_integral_En(n, wp);
  const Complex em = exp_integral_En(n, wm);
  return std::pow(M, 1 - n) * (odd ? ep - em : ep + em);
}

TailIntegralTable make_tail_integral_table(int nmax, double u, double v,
                                           Complex alpha, double M) {
  TailIntegralTable t;
  t.M = M;
  t.nmax = nmax;
  t.Ep = exp_integral_family(nmax, -kImag * M * (alpha * v + u));
  t.Em = exp_integral_family(nmax, -kImag * M * (alpha * v - u));
  return t;
}

Complex TailIntegralTable::I(int n, bool odd) const {
  const Complex ep = Ep[size_t(n + 1)];
  const Complex em = Em[size_t(n + 1)];
  return std::pow(M, 1 - n) * (odd ? ep - em : ep + em);
}

}  // namespace elastg
