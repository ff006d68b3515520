// SPDX-License-Identifier: Apache-2.0
#ifndef ELASTG_BESSEL_HPP
#define ELASTG_BESSEL_HPP

#include "elastg/common.hpp"

namespace elastg {

// First-kind and second-kind Bessel functions of orders 0 and 1 for x > 0,
// accurate to ~1e-13 uniformly. Small x: power series; moderate x: exact
// integral representation for J plus Steed's continued fraction for Y;
// large x: Hankel asymptotics.
struct Bessel01 {
  double j0, j1, y0, y1;
};
Bessel01 bessel01(double x);

inline Complex hankel1_0(double x) {
  auto b = bessel01(x);
  return {b.j0, b.y0};
}
inline Complex hankel1_1(double x) {
  auto b = bessel01(x);
  return {b.j1, b.y1};
}

}  // namespace elastg

#endif
