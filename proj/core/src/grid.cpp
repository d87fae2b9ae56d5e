#include "jscat/grid.hpp"

#include <cmath>

#include "jscat/errors.hpp"

namespace jscat {

SpectralGrid::SpectralGrid(const BandEdges& edges, int nodes_per_band)
    : edges_(edges), nodes_per_band_(nodes_per_band) {
  if (nodes_per_band_ < 2)
    throw InvalidConfig("spectral grid needs at least 2 nodes per band");
  const int g = edges_.genus();
  theta_.reserve((g + 1) * nodes_per_band_);
  lambda_.reserve((g + 1) * nodes_per_band_);
  for (int j = 0; j <= g; ++j) {
    const ChebRule rule(edges_.band_lo(j), edges_.band_hi(j), nodes_per_band_);
    theta_.insert(theta_.end(), rule.theta.begin(), rule.theta.end());
    lambda_.insert(lambda_.end(), rule.x.begin(), rule.x.end());
  }
}

Eigen::VectorXd SpectralGrid::weights(const Background& q) const {
  Eigen::VectorXd w(total());
  for (int i = 0; i < total(); ++i) {
    const int j = band(i);
    const double x = lambda_[i];
    const double div = std::abs(q.divisor_poly(cplx(x, 0.0)));
    w(i) = div / (2.0 * nodes_per_band_ *
                  sqrt_abs_r_excluding(edges_, x, 2 * j, 2 * j + 1));
  }
  return w;
}

}  // namespace jscat
