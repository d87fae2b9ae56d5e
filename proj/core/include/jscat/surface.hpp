#pragma once

#include <Eigen/Dense>

#include "jscat/curve.hpp"
#include "jscat/paths.hpp"
#include "jscat/periods.hpp"
#include "jscat/theta.hpp"

namespace jscat {

// Spectral curve bundle: path integrals, normalized periods, theta function,
// Abel maps from (E_0, upper), the normalized second/third kind differential
// with poles at the two infinities, the Riemann constant, and third-kind
// differentials with conjugate pole pairs used for transmission formulas.
class SpectralCurve {
public:
  explicit SpectralCurve(const BandEdges& edges, int cheb_order = 96);

  const BandEdges& edges() const { return edges_; }
  const PathEngine& paths() const { return paths_; }
  const PeriodData& periods() const { return periods_; }
  const ThetaFunction& theta() const { return theta_; }
  int genus() const { return edges_.genus(); }

  // Abel map, size g; A(p*) = -A(p), A(conj p) = conj A(p)
  Eigen::VectorXcd abel(const SurfacePoint& p) const;
  const Eigen::VectorXd& abel_infinity() const { return abel_inf_; }

  // Riemann constant, the half period (eps + tau * ones)/2
  const Eigen::VectorXcd& riemann_constant() const { return xi_; }
  const Eigen::VectorXd& riemann_constant_eps() const { return xi_eps_; }

  // omega = (x^g + sum_{m<g} d_m x^m) dx / R^{1/2} with vanishing a-periods
  const Eigen::VectorXd& infinity_kernel_d() const { return d_; }
  cplx infinity_kernel_integral(const SurfacePoint& p) const;
  // w(p) = wave_sign * exp(int omega); w ~ capacity / z at the upper infinity
  cplx map_w(const SurfacePoint& p) const;

  double capacity() const { return capacity_; }   // asymptotic a coefficient
  double b_offset() const { return b_offset_; }   // asymptotic b coefficient
  double wave_sign() const { return wave_sign_; }
  // theta argument advances by -site_shift per lattice site, real, size g
  const Eigen::VectorXd& site_shift() const { return site_shift_; }

  // differential with residue +1 at pole, -1 at its sheet conjugate,
  // vanishing a-periods
  struct ThirdKind {
    SurfacePoint pole;
    cplx rhalf;           // R^{1/2} at the pole
    Eigen::VectorXcd d;   // coefficients of the x^m correction, m = 0..g-1
  };
  ThirdKind third_kind(const SurfacePoint& pole) const;
  // density against dx at the point `at`
  cplx third_kind_density(const ThirdKind& k, const SurfacePoint& at) const;
  // s * exp(int_{E(rho)}^{(rho,+)} omega_k) along the real path from the
  // nearest band edge E(rho); s = -1 when the pole lies on the path and the
  // integral is taken as a principal value, else s = +1
  cplx blaschke_factor(const ThirdKind& k, double rho) const;
  // the band edge the Blaschke path is anchored at
  double blaschke_anchor(double rho) const;

private:
  void solve_infinity_kernel();
  void compute_capacity();
  void compute_site_shift();
  void locate_riemann_constant();

  BandEdges edges_;
  PathEngine paths_;
  PeriodData periods_;
  ThetaFunction theta_;
  Eigen::PartialPivLU<Eigen::MatrixXd> a_period_t_lu_;  // of C^T
  Eigen::VectorXd abel_inf_;
  Eigen::VectorXd d_;
  double capacity_ = 0.0;
  double b_offset_ = 0.0;
  double wave_sign_ = 1.0;
  Eigen::VectorXd site_shift_;
  Eigen::VectorXcd xi_;
  Eigen::VectorXd xi_eps_;
  double tol_;
};

}  // namespace jscat
