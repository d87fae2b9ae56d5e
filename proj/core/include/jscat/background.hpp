#pragma once

#include <Eigen/Dense>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "jscat/surface.hpp"

namespace jscat {

// One Dirichlet divisor point: mu inside an open gap, on one of the sheets.
struct DivisorPoint {
  double mu = 0.0;
  Sheet sheet = Sheet::upper;
};

// Quasi-periodic finite-gap background built from a curve and a Dirichlet
// divisor with exactly one point per gap.  Coefficients and solutions come
// from theta ratios with the real reduced argument
//   z(n) = B - n * site_shift,   B = reduce(A(inf_+) - sum_j A(mu_j) - Xi);
// the reduction subtracts a lattice vector so z(n) is real and theta(z(n))
// is real and positive for every n.
class Background {
public:
  Background(std::shared_ptr<const SpectralCurve> curve,
             std::vector<DivisorPoint> divisor);

  const SpectralCurve& curve() const { return *curve_; }
  const std::vector<DivisorPoint>& divisor() const { return divisor_; }

  double a(int n) const;
  double b(int n) const;

  const Eigen::VectorXd& argument_base() const { return base_; }
  Eigen::VectorXd site_argument(int n) const;
  double theta_site(int n) const;   // theta(z(n)), cached, positive
  double normalization(int n) const;

  // per-point data reused across all sites
  struct WavePoint {
    SurfacePoint p;
    Eigen::VectorXcd abel;
    cplx exponent;    // int of the infinity kernel from the base point to p
    cplx theta_den;   // theta(A(p) + B)
  };
  WavePoint prepare(const SurfacePoint& p) const;
  // quasi-periodic solution psi_q(p, n); normalized so psi_q(p, 0) = 1
  cplx eval(const WavePoint& w, int n) const;
  // prod_{poles on the sheet of p} (z - mu) * psi_q(p, n); finite near poles
  cplx eval_hat(const WavePoint& w, int n) const;

  // divisor points sitting on sheet s (pole locations of psi_q on s)
  std::vector<double> poles_on(Sheet s) const;
  cplx divisor_poly(cplx z) const;              // prod over all divisor points
  cplx divisor_poly_on(Sheet s, cplx z) const;  // prod over sigma == s only

private:
  std::shared_ptr<const SpectralCurve> curve_;
  std::vector<DivisorPoint> divisor_;
  Eigen::VectorXd base_;
  mutable std::map<int, double> theta_cache_;
  mutable std::mutex cache_mutex_;
};

}  // namespace jscat
