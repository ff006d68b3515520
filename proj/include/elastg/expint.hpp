// SPDX-License-Identifier: Apache-2.0
#ifndef ELASTG_EXPINT_HPP
#define ELASTG_EXPINT_HPP

#include <vector>

#include "elastg/common.hpp"

namespace elastg {

// Generalized exponential integral E_n(z) = z^{n-1} Integral_z^inf t^{-n} e^{-t} dt
// with the principal logarithm branch; supports n >= -1 and complex z off the
// closed negative real axis. Relative accuracy ~1e-13 for |z| in [1e-8, 1e3],
// Re(z) >= 0 (the regime used by the tail integrals).
Complex exp_integral_En(int n, Complex z);

// E_{-1}(z) .. E_{nmax}(z); out[k] = E_{k-1}(z), size nmax + 2.
std::vector<Complex> exp_integral_family(int nmax, Complex z);

}  // namespace elastg

#endif
