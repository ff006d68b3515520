// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "elastg/tails.hpp"
#include "elastg/expint.hpp"
#include "oracles.hpp"

using namespace elastg;

namespace {

SpectralEvaluator make_spec(const std::string& name) {
  const auto k = derive_coefficients(medium_catalog(name), Axis::X2);
  return SpectralEvaluator(k, make_branch_config(k));
}

// Contour-integral Taylor oracle: c_n(v) = (1/2pi) Int F(r e^{i th}, v)
// e^{-i n th} dth / r^n where F(s, v) = W(1/s^2) exp(i (mu(1/s^2) - p0/s -
// sigma) v), with W and mu from the real-axis-consistent evaluator data but
// the full product assembled directly at this v.
Complex cauchy_cn_oracle(const SpectralEvaluator& spec, const TailExpansion& t,
                         double v, int n) {
  const double r = 1.0 / (4 * t.M);  // different radius than the builder's
  const int K = 4096;
  Complex acc = 0;
  for (int j = 0; j < K; ++j) {
    const double th = 2 * kPi * j / K;
    const Complex s = std::polar(r, th);
    // amplitude and mu via analytic continuation anchored on the real axis:
    // walk a straight ray from s0 = r (real) to s, tracking sqrt branches.
    const int steps = 60;
    const double t_anchor = 1.0 / (r * r);
    const auto anchor = spec.eval_mu_real(t_anchor);
    const auto& k = spec.coeffs();
    Complex D_prev = r * r * anchor.sqrt_delta;
    Complex hp_prev = r * anchor.mu_plus;
    Complex hm_prev = r * anchor.mu_minus;
    for (int q = 1; q <= steps; ++q) {
      const double phi = th * q / steps;
      const Complex sq = std::polar(r, phi);
      const Complex s2 = sq * sq;
      Complex D = std::sqrt(k.alpha2 + 2.0 * k.alpha1 * s2 + k.alpha0 * s2 * s2);
      if (std::abs(D - D_prev) > std::abs(-D - D_prev)) D = -D;
      Complex Hp = (k.beta1 + k.beta0 * s2 + D) / (2 * k.c33 * k.c22);
      Complex Hm = (k.beta1 + k.beta0 * s2 - D) / (2 * k.c33 * k.c22);
      Complex hp = std::sqrt(Hp), hm = std::sqrt(Hm);
      if (std::abs(hp - hp_prev) > std::abs(-hp - hp_prev)) hp = -hp;
      if (std::abs(hm - hm_prev) > std::abs(-hm - hm_prev)) hm = -hm;
      D_prev = D;
      hp_prev = hp;
      hm_prev = hm;
    }
    const Complex s2 = s * s;
    const auto& k2 = spec.coeffs();
    const Complex D = D_prev;
    const Complex Hp = (k2.beta1 + k2.beta0 * s2 + D) / (2 * k2.c33 * k2.c22);
    const Complex Hm = (k2.beta1 + k2.beta0 * s2 - D) / (2 * k2.c33 * k2.c22);
    const Complex h = t.plus_branch ? hp_prev : hm_prev;
    const Complex H = t.plus_branch ? Hp : Hm;
    Complex W;
    switch (t.kernel) {
      case KernelId::G11:
        W = (t.plus_branch ? -kImag : kImag) * s * (-k2.c22 * H + s2 - k2.c33) /
            (2.0 * D * h);
        break;
      case KernelId::G22:
        W = (t.plus_branch ? -kImag : kImag) * s * (-k2.c33 * H + s2 - k2.c11) /
            (2.0 * D * h);
        break;
      case KernelId::G21:
        W = -kImag * s * (k2.c12 + k2.c33) / (2.0 * D);
        if (!t.plus_branch) W = -W;
        break;
    }
    if (t.deriv == DerivOrder::D1) W *= kImag / s;
    if (t.deriv == DerivOrder::D2) W *= kImag * h / s;
    const Complex F = W * std::exp(kImag * (h / s - t.p0 / s - t.sigma) * v);
    acc += F * std::polar(1.0, -n * th);
  }
  acc /= double(K);
  return acc / std::pow(r, n) * std::exp(kImag * t.sigma * v);
  // note: F excludes e^{i sigma v}; c_n includes it, so multiply back.
}

}  // namespace

TEST_CASE("case classification") {
  CHECK(classify_case(derive_coefficients(medium_catalog("iso"), Axis::X2)) ==
        CaseTag::Isotropic);
  CHECK(classify_case(derive_coefficients(medium_catalog("IX"), Axis::X2)) ==
        CaseTag::Alpha2Zero);
  CHECK(classify_case(derive_coefficients(medium_catalog("I"), Axis::X2)) ==
        CaseTag::Alpha2Nonzero);
  auto spec = make_spec("iso");
  CHECK_THROWS_AS(build_tail_expansion(spec, KernelId::G11, DerivOrder::Value, true, 8, 20),
                  Error);
}

TEST_CASE("case (ii) exponent structure for medium IX") {
  auto spec = make_spec("IX");
  const auto& k = spec.coeffs();
  TailBuilder b(spec, 8, 20);
  const Complex p0_expect = kImag * std::pow(k.c11 / k.c22, 0.25);
  CHECK(std::abs(b.p0(true) - p0_expect) < 1e-10);
  CHECK(std::abs(b.p0(false) - p0_expect) < 1e-10);
  // c0+ = a0 e^{i b0 v}, c0- = -a0 e^{-i b0 v}
  const auto tp = b.build(KernelId::G11, DerivOrder::Value, true);
  const auto tm = b.build(KernelId::G11, DerivOrder::Value, false);
  CHECK(std::abs(b.sigma(true) + b.sigma(false)) < 1e-9 * std::abs(b.sigma(true)));
  CHECK(std::abs(b.sigma(true)) > 1e-3);
  const Complex a0p = tp.c_n(0, 0.0);
  const Complex a0m = tm.c_n(0, 0.0);
  CHECK(std::abs(a0p + a0m) < 1e-10);
  CHECK(std::abs(a0p) > 1e-4);
}

TEST_CASE("case (iii): c0 = 0 and purely imaginary exponents for medium III") {
  auto spec = make_spec("III");
  TailBuilder b(spec, 8, 20);
  CHECK(std::abs(b.sigma(true)) == 0.0);
  CHECK(std::abs(b.sigma(false)) == 0.0);
  CHECK(b.p0(true).imag() > 0);
  CHECK(b.p0(false).imag() > 0);
  CHECK(std::abs(b.p0(true).real()) < 1e-12);
  const auto t = b.build(KernelId::G11, DerivOrder::Value, true);
  CHECK(std::abs(t.c_n(0, 0.7)) < 1e-12);
  // p0 matches the printed case (iii) table (min Delta in (-inf,0): swap).
  const auto& k = spec.coeffs();
  const Complex pp = std::sqrt(Complex(k.beta1 - std::sqrt(k.alpha2), 0) /
                               (2 * k.c33 * k.c22));
  CHECK(std::abs(b.p0(true) - pp) < 1e-10);
}

TEST_CASE("tail coefficients match the contour-integral Taylor oracle") {
  for (const char* name : {"I", "III", "IX"}) {
    CAPTURE(std::string(name));
    auto spec = make_spec(name);
    TailBuilder b(spec, 8, 20);
    for (KernelId kid : {KernelId::G11, KernelId::G21}) {
      for (bool plus : {true, false}) {
        const auto t = b.build(kid, DerivOrder::Value, plus);
        for (double v : {0.0, 0.4}) {
          for (int n : {1, 2, 3}) {
            const Complex ours = t.c_n(n, v);
            const Complex oracle = cauchy_cn_oracle(spec, t, v, n);
            CHECK(std::abs(ours - oracle) <= 1e-8 * std::abs(oracle) + 1e-11);
          }
        }
      }
    }
  }
}

TEST_CASE("tail expansion reproduces the integrand at large |xi|") {
  // W(xi) e^{i mu xi...}: partial sums vs direct spectral values at |xi| = 2M.
  for (const char* name : {"I", "III", "VII", "IX"}) {
    CAPTURE(std::string(name));
    auto spec = make_spec(name);
    TailBuilder b(spec, 8, 20);
    const double xi = 40.0, v = 0.35;
    const auto sv = spec.eval_coefficients(Complex(xi, 0));
    struct Probe { KernelId k; bool plus; Complex amp, mu; };
    const Probe probes[] = {
        {KernelId::G11, true, sv.p1x1, sv.mu_plus},
        {KernelId::G11, false, sv.q1x1, sv.mu_minus},
        {KernelId::G22, true, sv.p2x2, sv.mu_plus},
        {KernelId::G21, false, -sv.p2x1, sv.mu_minus},
    };
    for (const auto& p : probes) {
      const auto t = b.build(p.k, DerivOrder::Value, p.plus);
      const Complex direct = p.amp * std::exp(kImag * p.mu * v);
      Complex series = 0;
      for (int n = t.n_min; n <= t.N0; ++n)
        series += t.c_n(n, v) / std::pow(xi, n);
      series *= std::exp(kImag * t.p0 * xi * v);
      CHECK(std::abs(series - direct) <= 1e-9 * (std::abs(direct) + 1e-8));
    }
  }
}

TEST_CASE("truncation bound: N0-doubling changes the tail sum below M^-(N0+1)") {
  auto spec = make_spec("III");
  TailBuilder b8(spec, 8, 20), b12(spec, 12, 20);
  const auto t8 = b8.build(KernelId::G11, DerivOrder::Value, true);
  const auto t12 = b12.build(KernelId::G11, DerivOrder::Value, true);
  const double u = 0.3, v = 0.2;
  const auto f8 = make_tail_integral_table(t8.N0, u, v, t8.p0, t8.M);
  const auto f12 = make_tail_integral_table(t12.N0, u, v, t12.p0, t12.M);
  Complex s8 = 0, s12 = 0;
  for (int n = t8.n_min; n <= t8.N0; ++n) s8 += t8.c_n(n, v) * f8.I(n, t8.odd);
  for (int n = t12.n_min; n <= t12.N0; ++n) s12 += t12.c_n(n, v) * f12.I(n, t12.odd);
  CHECK(std::abs(s8 - s12) < 50 * std::pow(20.0, -9));
}

TEST_CASE("tail integral identities") {
  SUBCASE("n=2, x1=0, x2=1, alpha=i, M=20: quadrature oracle") {
    const Complex v = tail_integral_IMn(2, 0.0, 1.0, Complex(0, 1), 20.0, false);
    // direct: 2 Int_20^inf e^-xi / xi^2 dxi
    const Complex q = 2.0 * test::adapt_integrate(
        [](double t) { return Complex(std::exp(-t) / (t * t), 0); }, 20.0, 80.0, 1e-18);
    CHECK(std::abs(v - q) <= 1e-10 * std::abs(q));
    CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(v.real() > 0);
    // closed-form route: M^{-1} * 2 * E_2(20)
    const Complex e2 = exp_integral_En(2, Complex(20, 0));
    CHECK(std::abs(v - 2.0 * e2 / 20.0) < 1e-14);
  }
  SUBCASE("odd combination vanishes at u = 0") {
    const Complex v = tail_integral_IMn(1, 0.0, 0.7, Complex(0.2, 1.1), 20.0, true);
    CHECK(std::abs(v) < 1e-14);
  }
  SUBCASE("oscillatory quadrature cross-check, n = 1, even") {
    const double u = 0.4, v = 0.3;
    const Complex alpha(0.25, 0.8);
    const Complex ours = tail_integral_IMn(1, u, v, alpha, 20.0, false);
    auto f = [&](double xi) {
      return std::exp(kImag * (alpha * xi * v)) *
             (std::exp(kImag * xi * u) + std::exp(-kImag * xi * u)) / xi;
    };
    const Complex q = test::adapt_integrate(f, 20.0, 400.0, 1e-13);
    CHECK(std::abs(ours - q) < 1e-9);
  }
}
