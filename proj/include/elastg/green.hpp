// SPDX-License-Identifier: Apache-2.0
#ifndef ELASTG_GREEN_HPP
#define ELASTG_GREEN_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "elastg/quadrature.hpp"
#include "elastg/tails.hpp"

namespace elastg {

struct EvalParams {
  double M = 20;
  int N0 = 8;
  double eps_T = 1e-12;
  int gl_points = 16;
  double osc_phase = 3.0;  // max phase change per quadrature panel
};

// Per-branch values and first derivatives of the three distinct tensor
// entries at one displacement (scaled system; quadrant signs applied).
struct BranchValues {
  Complex g11 = 0, g21 = 0, g22 = 0;
  Complex d1g11 = 0, d2g11 = 0, d1g21 = 0, d2g21 = 0, d1g22 = 0, d2g22 = 0;
};

// Fast evaluator of the 2-D elastodynamic Green's tensor: finite spectral
// integral over [-M, M] plus analytic tail terms. Isotropic media dispatch
// to the Hankel closed form. Immutable after construction apart from the
// internal node-table cache (mutex protected).
class GreenEvaluator {
 public:
  explicit GreenEvaluator(const ElasticMedium& medium, EvalParams params = {},
                          const std::string& cache_dir = "");

  const ElasticMedium& medium() const { return medium_; }
  const DerivedCoefficients& coeffs() const { return coeffs_; }
  const BranchConfig& branch() const { return branch_; }
  const SpectralEvaluator& spectral() const { return *spec_; }
  CaseTag case_tag() const { return case_; }
  const EvalParams& params() const { return params_; }
  const TailExpansion& tail(KernelId k, DerivOrder d, bool plus) const;
  Complex p0(bool plus) const { return plus ? p0p_ : p0m_; }

  // G(x;y) with dx = x - y (physical coordinates).
  Mat2c eval(const Vec2& dx) const;
  // G = G+ + G- splitting.
  void eval_split(const Vec2& dx, Mat2c& gplus, Mat2c& gminus) const;
  // grad[k][i][j] = d G_ij / d x_k at fixed y.
  std::array<Mat2c, 2> eval_gradient(const Vec2& dx) const;
  // Everything the boundary assembly needs in one pass (physical units).
  void eval_all_split(const Vec2& dx, BranchValues& plus, BranchValues& minus) const;

  // Max-norm residual of the Navier operator applied by 5-point finite
  // differences at dx (away from the source).
  double pde_residual(const Vec2& dx, double h) const;

  // Chebyshev tensor interpolant of the smooth finite-integral part over
  // |dx1| <= umax, |dx2| <= vmax (physical units). degree <= 0 selects
  // automatically. Throws ProbeToleranceExceeded if probe validation fails.
  void build_interpolant(double umax, double vmax, int degree = 0,
                         double probe_tol = 1e-10);
  // Same, doubling the degree until the probes pass (at most 3 retries).
  void build_interpolant_auto(double umax, double vmax, double probe_tol = 1e-10);
  bool has_interpolant() const { return !interp_.empty(); }

  // Direct-quadrature evaluation of one branch piece of one scalar kernel at
  // (u, v) >= 0 in scaled units, finite part only (test/diagnostic hook).
  Complex finite_part(KernelId k, DerivOrder d, bool plus, double u, double v) const;
  Complex tail_part(KernelId k, DerivOrder d, bool plus, double u, double v) const;

 private:
  struct NodeTable {
    std::vector<double> xi, w;
    std::vector<Complex> mup, mum;
    std::vector<Complex> amp[3][2];  // base amplitude per kernel x branch
  };

  void build_tables(const std::string& cache_dir);
  bool load_cache(const std::string& path);
  void save_cache(const std::string& path) const;
  std::string cache_key() const;
  std::shared_ptr<const NodeTable> node_table(double u, double v) const;
  std::shared_ptr<const NodeTable> make_node_table(double u, double v) const;
  Complex finite_from_table(const NodeTable& t, KernelId k, DerivOrder d, bool plus,
                            double u, double v) const;
  void kernels_at(double u, double v, Complex out[3][3][2]) const;  // [k][d][branch]
  void isotropic_all(const Vec2& dxs, BranchValues& plus, BranchValues& minus) const;

  ElasticMedium medium_;
  DerivedCoefficients coeffs_;
  BranchConfig branch_;
  std::unique_ptr<SpectralEvaluator> spec_;
  CaseTag case_ = CaseTag::Alpha2Nonzero;
  EvalParams params_;
  double scale_ = 1;  // sqrt(rho) * omega

  std::vector<TailExpansion> tails_;  // [k*6 + d*2 + plus], empty for isotropic
  Complex p0p_, p0m_;
  double ks_ = 0, kp_ = 0;  // isotropic wavenumbers (scaled system)

  // interp_[k*6 + d*2 + plus]; empty when not built.
  std::vector<Cheb2> interp_;

  mutable std::map<long, std::shared_ptr<const NodeTable>> table_cache_;
  mutable std::mutex cache_mutex_;
};

}  // namespace elastg

#endif
