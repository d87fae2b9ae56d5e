#pragma once

#include <Eigen/Dense>
#include <vector>

#include "jscat/background.hpp"

namespace jscat {

// Chebyshev midpoint nodes on every band, band-major, theta ascending inside
// a band (lambda descending).  Carries the per-node weights of the spectral
// measure of a background:
//   w_i = |prod_j (lambda_i - mu_j)| / (2 N sqrt(prod_{other edges} |lambda_i - E_l|))
// so that <f, g> = 2 sum_i w_i Re[f_i conj(g_i)] reproduces the upper-rim
// band integrals with exponential accuracy.
class SpectralGrid {
public:
  SpectralGrid(const BandEdges& edges, int nodes_per_band);

  const BandEdges& edges() const { return edges_; }
  int nodes_per_band() const { return nodes_per_band_; }
  int total() const { return static_cast<int>(lambda_.size()); }
  int band(int i) const { return i / nodes_per_band_; }
  double theta(int i) const { return theta_[i]; }
  double lambda(int i) const { return lambda_[i]; }
  const std::vector<double>& lambdas() const { return lambda_; }

  Eigen::VectorXd weights(const Background& q) const;

private:
  BandEdges edges_;
  int nodes_per_band_;
  std::vector<double> theta_, lambda_;
};

}  // namespace jscat
