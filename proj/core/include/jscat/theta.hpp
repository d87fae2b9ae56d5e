#pragma once

#include <Eigen/Dense>

#include "jscat/curve.hpp"

namespace jscat {

// Riemann theta function
//   theta(z | tau) = sum_{m in Z^g} exp(pi i m^T tau m + 2 pi i m^T z)
// with the lattice sum truncated to |m|_inf <= N, N chosen per evaluation so
// the discarded Gaussian tail is below ~exp(-30).  Genus 0 gives theta == 1.
class ThetaFunction {
public:
  explicit ThetaFunction(const Eigen::MatrixXcd& tau);

  int genus() const { return static_cast<int>(tau_.rows()); }
  const Eigen::MatrixXcd& tau() const { return tau_; }
  double min_im_eigenvalue() const { return lambda_min_; }

  cplx value(const Eigen::VectorXcd& z) const;
  void value_and_gradient(const Eigen::VectorXcd& z, cplx& value,
                          Eigen::VectorXcd& gradient) const;
  int truncation_for(const Eigen::VectorXcd& z) const;

private:
  Eigen::MatrixXcd tau_;
  double lambda_min_ = 1.0;
};

}  // namespace jscat
