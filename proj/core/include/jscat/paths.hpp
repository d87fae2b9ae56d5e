#pragma once

#include <Eigen/Dense>
#include <vector>

#include "jscat/curve.hpp"
#include "jscat/quadrature.hpp"

namespace jscat {

// Integrates the monomial differentials x^m dx / R^{1/2}, m = 0..g, along the
// canonical path family from the base point (E_0, upper sheet):
//   - real targets: along the real axis through upper-rim band values, with
//     per-segment cosine series giving spectrally accurate partial integrals;
//   - complex targets: polyline E_0 -> E_0 + iH -> z (lower half plane by
//     conjugation symmetry);
//   - lower sheet: exact negation;
//   - infinity: 1/x substitution tails.
// Segment s = [E_s, E_{s+1}] for s = 0..2g alternates band, gap, band, ...
class PathEngine {
public:
  PathEngine(const BandEdges& edges, int cheb_order);

  const BandEdges& edges() const { return edges_; }
  int genus() const { return edges_.genus(); }
  int order() const { return order_; }

  // full integral of x^m dx / f_+ over segment s (upper rim)
  cplx segment_full(int s, int m) const;
  // sum of full segments 0..s-1
  cplx prefix(int s, int m) const;

  // per-segment pullback data: x(theta) = mid + half cos(theta), and
  // int_seg f dx / f_+ = kappa * int_0^pi f(x(theta)) * W(theta) d theta.
  const ChebRule& segment_rule(int s) const { return rules_[s]; }
  cplx segment_kappa(int s) const { return kappa_[s]; }
  // cosine coefficients of x(theta)^m * W(theta); row m, column = harmonic
  const Eigen::MatrixXd& segment_coeffs(int s) const { return coeffs_[s]; }
  // cosine coefficients of W alone (row 0 of the above)

  // int of x^m dx / f_+ from E_0 to p along the canonical path, m = 0..g
  Eigen::VectorXcd monomials_to(const SurfacePoint& p) const;
  // same to infinity on the upper sheet; entries m = 0..g-1 (m = g diverges)
  Eigen::VectorXcd monomials_to_infinity_upper() const;

  // int_{E_{2g+1}}^{X} x^m dx / f_+ for finite X beyond the last edge
  cplx right_partial(int m, double X) const;

  // prod_j sqrt(1 - E_j u); equals -f_+(1/u) * u^{g+1} for small real u
  double stilde(double u) const;

private:
  Eigen::VectorXcd monomials_real(double x) const;
  Eigen::VectorXcd monomials_complex(cplx z) const;
  cplx partial_from_left(int s, double x, int m) const;
  cplx left_partial(int m, double x) const;  // int_{E_0}^{x}, x < E_0

  BandEdges edges_;
  int order_;
  std::vector<ChebRule> rules_;
  std::vector<cplx> kappa_;
  std::vector<Eigen::MatrixXd> coeffs_;      // (g+1) x order_
  Eigen::MatrixXcd full_;                    // (2g+1) x (g+1)
  Eigen::MatrixXcd prefix_;                  // (2g+2) x (g+1)
  double tol_;
};

}  // namespace jscat
