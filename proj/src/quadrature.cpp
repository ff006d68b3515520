// SPDX-License-Identifier: Apache-2.0
#include "elastg/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace elastg {

namespace {

struct GlCache {
  std::map<int, std::pair<std::vector<double>, std::vector<double>>> table;
  std::mutex mu;
};
GlCache& gl_cache() {
  static GlCache c;
  return c;
}

void compute_gl(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev initial guess, Newton on P_n.
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1, p2 = 0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2 * j + 1) * z * p2 - j * p3) / (j + 1);
      }
      pp = n * (z * p1 - p2) / (z * z - 1);
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1 - z * z) * pp * pp);
  }
}

const std::pair<std::vector<double>, std::vector<double>>& gl_pair(int n) {
  auto& c = gl_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto it = c.table.find(n);
  if (it == c.table.end()) {
    std::pair<std::vector<double>, std::vector<double>> pr;
    compute_gl(n, pr.first, pr.second);
    it = c.table.emplace(n, std::move(pr)).first;
  }
  return it->second;
}

}  // namespace

const std::vector<double>& gl_nodes(int n) { return gl_pair(n).first; }
const std::vector<double>& gl_weights(int n) { return gl_pair(n).second; }

namespace {

// Appends GL points for [a, b] in a transformed variable xi = map(u),
// weight jacobian jac(u), subdividing so the sampled phase rate satisfies
// the grading limits.
void add_panels_1d(PanelSet& out, double a, double b, int pts,
                   const std::function<double(double)>& map,
                   const std::function<double(double)>& jac,
                   const PanelGrading& g) {
  // Estimate required subdivisions from the rate at the ends and midpoint.
  double rate = 0;
  if (g.local_rate) {
    for (double u : {a, 0.5 * (a + b), b}) {
      const double du = std::abs(jac(u));
      rate = std::max(rate, g.local_rate(map(u)) * du);
    }
  }
  const double len = b - a;
  int nsub = 1;
  if (rate > 0) nsub = std::max(nsub, int(std::ceil(len * rate / g.max_phase_per_panel)));
  nsub = std::max(nsub, int(std::ceil(len / g.max_panel_len)));
  if (nsub > 1 && len > 1e-14) {
    for (int k = 0; k < nsub; ++k)
      add_panels_1d(out, a + len * k / nsub, a + len * (k + 1) / nsub, pts, map, jac,
                    PanelGrading{{}, g.local_rate, g.max_phase_per_panel, 1e300});
    return;
  }
  const auto& xs = gl_nodes(pts);
  const auto& ws = gl_weights(pts);
  for (int i = 0; i < pts; ++i) {
    const double u = 0.5 * (a + b) + 0.5 * len * xs[i];
    out.nodes.push_back(map(u));
    out.weights.push_back(0.5 * len * ws[i] * jac(u));
  }
}

}  // namespace

PanelSet composite_gl_panels(const std::vector<double>& breakpoints,
                             const PanelGrading& grading, int pts) {
  if (breakpoints.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "composite_gl_panels needs >= 2 breakpoints");
  std::vector<double> bp = breakpoints;
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end(),
                       [](double x, double y) { return std::abs(x - y) < 1e-13; }),
           bp.end());
  auto is_sqrt = [&](double b) {
    for (double s : grading.sqrt_endpoints)
      if (std::abs(s - b) < 1e-12 * (1 + std::abs(b))) return true;
    return false;
  };
  PanelSet out;
  auto ident = [](double u) { return u; };
  auto one = [](double) { return 1.0; };
  for (size_t k = 0; k + 1 < bp.size(); ++k) {
    const double bl = bp[k], br = bp[k + 1];
    if (br - bl < 1e-14) continue;
    const bool sl = is_sqrt(bl), sr = is_sqrt(br);
    // Split the interval so each sqrt endpoint owns a substituted zone.
    double m0 = bl, m1 = br;
    if (sl && sr) { m0 = bl + 0.5 * (br - bl); m1 = m0; }
    else if (sl) m0 = bl + 0.6 * (br - bl);
    else if (sr) m1 = bl + 0.4 * (br - bl);
    if (sl) {
      // xi = bl + u^2, u in [0, sqrt(m0-bl)]
      const double umax = std::sqrt(m0 - bl);
      add_panels_1d(out, 0, umax, pts,
                    [bl](double u) { return bl + u * u; },
                    [](double u) { return 2 * u; }, grading);
    }
    if (sl || sr) {
      if (m1 > m0) add_panels_1d(out, m0, m1, pts, ident, one, grading);
    } else {
      add_panels_1d(out, bl, br, pts, ident, one, grading);
    }
    if (sr) {
      // xi = br - u^2, u in [0, sqrt(br-m1)]; keep weights positive by
      // integrating u downward (jacobian 2u, orientation preserved).
      const double umax = std::sqrt(br - m1);
      add_panels_1d(out, 0, umax, pts,
                    [br](double u) { return br - u * u; },
                    [](double u) { return 2 * u; }, grading);
    }
  }
  return out;
}

const AlpertRule& alpert_rule_order6() {
  static const AlpertRule rule = [] {
    AlpertRule r;
    r.order = 6;
    r.grid_shift = 3;
    r.nodes = {4.004884194926570e-03, 7.745655373336686e-02, 3.972849993523248e-01,
               1.075673352915104e+00, 2.003796927111872e+00};
    r.weights = {1.671879691147102e-02, 1.636958371447360e-01, 4.981856569770637e-01,
                 8.372266245578912e-01, 9.841730844088381e-01};
    return r;
  }();
  return rule;
}

int alpert_min_nodes(const AlpertRule& rule) {
  return 2 * int(rule.nodes.size()) + 4;
}

std::vector<double> trig_interp_weights(int N, double delta) {
  // Balanced interpolant S_N(t) = sin(N t/2) / (N tan(t/2)), even N.
  std::vector<double> c(N);
  const double h = 2 * kPi / N;
  for (int l = 0; l < N; ++l) {
    double t = delta - l * h;
    // wrap to (-pi, pi]
    t = std::remainder(t, 2 * kPi);
    if (std::abs(t) < 1e-14) {
      c[l] = 1.0;
    } else {
      c[l] = std::sin(N * t / 2) / (N * std::tan(t / 2));
    }
  }
  return c;
}

Eigen::MatrixXcd alpert_assemble(int N, const AlpertRule& rule,
                                 const std::function<Complex(int, double)>& kernel) {
  if (N % 2 != 0 || N < alpert_min_nodes(rule))
    throw Error(ErrorCode::TooFewNodes, "alpert_assemble: N must be even and >= " +
                                            std::to_string(alpert_min_nodes(rule)));
  const double h = 2 * kPi / N;
  const int a = rule.grid_shift;
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(N, N);
  // Precompute interpolation weight vectors for the correction offsets.
  const size_t nc = rule.nodes.size();
  std::vector<std::vector<double>> interp(2 * nc);
  for (size_t i = 0; i < nc; ++i) {
    interp[2 * i] = trig_interp_weights(N, rule.nodes[i] * h);
    interp[2 * i + 1] = trig_interp_weights(N, -rule.nodes[i] * h);
  }
  for (int j = 0; j < N; ++j) {
    const double tj = j * h;
    for (int k = a; k <= N - a; ++k) {
      const Complex v = kernel(j, tj + k * h) * h;
      M(j, (j + k) % N) += v;
    }
    for (size_t i = 0; i < nc; ++i) {
      for (int sign = 0; sign < 2; ++sign) {
        const double off = (sign ? -1.0 : 1.0) * rule.nodes[i] * h;
        const Complex v = kernel(j, tj + off) * rule.weights[i] * h;
        const auto& c = interp[2 * i + sign];
        for (int l = 0; l < N; ++l) {
          if (c[l] != 0.0) M(j, (j + l) % N) += v * c[l];
        }
      }
    }
  }
  return M;
}

Eigen::MatrixXd spectral_diff_matrix(int N) {
  if (N % 2 != 0 || N < 4)
    throw Error(ErrorCode::InvalidArgument, "spectral_diff_matrix: N even, >= 4");
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(N, N);
  const double h = 2 * kPi / N;
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) {
      if (j == k) continue;
      const int d = j - k;
      const double sign = (d % 2 == 0) ? 1.0 : -1.0;
      D(j, k) = 0.5 * sign / std::tan(d * h / 2);
    }
  return D;
}

std::vector<double> cheb_lobatto(int n) {
  std::vector<double> x(n + 1);
  for (int i = 0; i <= n; ++i) x[i] = std::cos(kPi * i / n);
  return x;
}

Cheb2 cheb2_fit(const Eigen::MatrixXcd& values, double umax, double vmax) {
  const int nu = int(values.rows()) - 1;
  const int nv = int(values.cols()) - 1;
  auto dct = [](int n) {
    // C(k,i): coefficient transform for Lobatto samples (type-I DCT with
    // half-weighted endpoints).
    Eigen::MatrixXd C(n + 1, n + 1);
    for (int k = 0; k <= n; ++k)
      for (int i = 0; i <= n; ++i) {
        double w = (i == 0 || i == n) ? 0.5 : 1.0;
        C(k, i) = 2.0 / n * w * std::cos(kPi * k * i / n);
      }
    return C;
  };
  Eigen::MatrixXd Cu = dct(nu), Cv = dct(nv);
  Eigen::MatrixXcd coef = Cu * values * Cv.transpose();
  coef.row(0) *= 0.5;
  coef.row(nu) *= 0.5;
  coef.col(0) *= 0.5;
  coef.col(nv) *= 0.5;
  Cheb2 c;
  c.nu = nu;
  c.nv = nv;
  c.umax = umax;
  c.vmax = vmax;
  c.coef = std::move(coef);
  return c;
}

Complex Cheb2::eval(double u, double v) const {
  if (u < -1e-12 || u > umax * (1 + 1e-12) || v < -1e-12 || v > vmax * (1 + 1e-12))
    throw Error(ErrorCode::OutOfDomain, "Cheb2::eval outside fitted rectangle");
  const double su = std::clamp(2 * u / umax - 1, -1.0, 1.0);
  const double sv = std::clamp(2 * v / vmax - 1, -1.0, 1.0);
  // T_i(su), T_j(sv) by recurrence; acceptable for degrees ~ 150.
  thread_local std::vector<double> Tu, Tv;
  Tu.resize(nu + 1);
  Tv.resize(nv + 1);
  Tu[0] = 1;
  if (nu >= 1) Tu[1] = su;
  for (int i = 2; i <= nu; ++i) Tu[i] = 2 * su * Tu[i - 1] - Tu[i - 2];
  Tv[0] = 1;
  if (nv >= 1) Tv[1] = sv;
  for (int j = 2; j <= nv; ++j) Tv[j] = 2 * sv * Tv[j - 1] - Tv[j - 2];
  Complex s = 0;
  for (int i = 0; i <= nu; ++i) {
    Complex row = 0;
    for (int j = 0; j <= nv; ++j) row += coef(i, j) * Tv[j];
    s += row * Tu[i];
  }
  return s;
}

}  // namespace elastg
