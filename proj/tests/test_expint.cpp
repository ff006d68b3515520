// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "elastg/expint.hpp"
#include "oracles.hpp"

using namespace elastg;

TEST_CASE("E_0 closed form") {
  const Complex v = exp_integral_En(0, Complex(1, 0));
  CHECK(std::abs(v - std::exp(-1.0)) < 1e-15);
}

TEST_CASE("E_1(1) frozen value and quadrature oracle") {
  const Complex v = exp_integral_En(1, Complex(1, 0));
  CHECK(v.real() == doctest::Approx(0.219383934395520274).epsilon(1e-13));
  CHECK(v.imag() == 0.0);
  // independent adaptive quadrature of Int_1^inf e^-t / t dt
  const Complex q = test::adapt_integrate(
      [](double t) { return Complex(std::exp(-t) / t, 0); }, 1.0, 60.0, 1e-14);
  CHECK(std::abs(v - q) < 1e-13);
}

TEST_CASE("recurrence E_{n+1}(z) = (e^-z - z E_n(z))/n at complex points") {
  for (Complex z : {Complex(2, 1), Complex(0.3, -0.7), Complex(0.01, 3),
                    Complex(5, -40), Complex(1e-6, 1e-6), Complex(0, 2.5)}) {
    for (int n = 1; n <= 8; ++n) {
      const Complex lhs = exp_integral_En(n + 1, z);
      const Complex rhs = (std::exp(-z) - z * exp_integral_En(n, z)) / double(n);
      CHECK(std::abs(lhs - rhs) <= 1e-13 * (std::abs(lhs) + std::abs(std::exp(-z))));
    }
  }
}

TEST_CASE("frozen reference values (independent multiprecision table)") {
  struct Row { int n; Complex z, v; };
  const Row rows[] = {
      {2, {2, 1}, {0.00988264883570531334, -0.0343428870920817848}},
      {5, {0.3, -0.7}, {0.103276185950499775, 0.127783659998059614}},
      {3, {0, 2.5}, {-0.255314499261589052, 0.0530564266037825751}},
      {4, {1e-6, 1e-6}, {0.333332833333333338, -4.99999000005170128e-7}},
      {9, {40, 30}, {4.80668180809093866e-20, 5.63089273044621743e-20}},
      {7, {0.01, -3}, {-0.130717093613944378, -0.0480784238301232764}},
  };
  for (const auto& r : rows) {
    const Complex v = exp_integral_En(r.n, r.z);
    CHECK(std::abs(v - r.v) <= 1e-12 * std::abs(r.v));
  }
}

TEST_CASE("E_{-1} matches the derivative relation of E_0") {
  for (Complex z : {Complex(1.5, 0.5), Complex(0.2, -1.1)}) {
    const double h = 1e-6;
    const Complex fd = (exp_integral_En(0, z + h) - exp_integral_En(0, z - h)) / (2 * h);
    CHECK(std::abs(-exp_integral_En(-1, z) - fd) < 1e-7 * std::abs(fd));
  }
}

TEST_CASE("branch cut raises") {
  CHECK_THROWS_AS(exp_integral_En(2, Complex(-1, 0)), Error);
  CHECK_THROWS_AS(exp_integral_En(2, Complex(0, 0)), Error);
}

TEST_CASE("accuracy sweep over the used argument region") {
  // z = -iM(alpha v +- u): right half plane, |z| from 1e-8 to 1e3.
  for (double mod : {1e-8, 1e-4, 0.3, 1.0, 2.9, 3.1, 8.0, 50.0, 900.0}) {
    for (double arg : {-1.5, -0.7, 0.0, 0.7, 1.5}) {
      const Complex z = std::polar(mod, arg);
      for (int n : {1, 4, 9}) {
        const Complex a = exp_integral_En(n, z);
        // two-step recurrence closure as an internal consistency check
        const Complex up = (std::exp(-z) - z * a) / double(n);     // E_{n+1}
        const Complex back = std::exp(-z) - double(n) * up;        // z E_n
        CHECK(std::abs(back - z * a) <= 1e-12 * (std::abs(back) + std::abs(std::exp(-z))));
      }
    }
  }
}
