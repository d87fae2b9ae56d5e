#pragma once

#include <Eigen/Dense>

#include "jscat/paths.hpp"

namespace jscat {

// Period data of the holomorphic differentials in the homology basis where
// a_k loops around gap k and b_k runs through bands 0..k-1 and back through
// the gaps.  With all branch points real the normalized b-period matrix is
// purely imaginary; sign_b orients the b-cycles so that Im tau > 0.
struct PeriodData {
  Eigen::MatrixXd C;     // C(m, k) = a_{k+1}-period of x^m dx / R^{1/2}
  Eigen::MatrixXd c;     // c = C^{-1}; zeta_k = sum_m c(k, m) x^m dx / R^{1/2}
  Eigen::MatrixXcd tau;  // normalized b-periods, symmetric, Im tau > 0
  double sign_b = 1.0;

  int genus() const { return static_cast<int>(C.rows()); }
};

// All matrices are empty for genus 0.
PeriodData compute_periods(const PathEngine& paths);

}  // namespace jscat
