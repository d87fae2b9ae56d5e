#include "jscat/theta.hpp"

#include <cmath>

#include "jscat/errors.hpp"

namespace jscat {

namespace {
constexpr double kTailExponent = 30.0;
}

ThetaFunction::ThetaFunction(const Eigen::MatrixXcd& tau) : tau_(tau) {
  if (tau_.rows() != tau_.cols())
    throw InvalidConfig("period matrix must be square");
  const int g = genus();
  if (g == 0) return;
  const double scale = std::max(1.0, tau_.cwiseAbs().maxCoeff());
  if ((tau_ - tau_.transpose()).cwiseAbs().maxCoeff() > 1e-8 * scale)
    throw InvalidConfig("period matrix must be symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tau_.imag());
  lambda_min_ = es.eigenvalues().minCoeff();
  if (!(lambda_min_ > 0.0))
    throw InvalidConfig("period matrix imaginary part must be positive definite");
}

int ThetaFunction::truncation_for(const Eigen::VectorXcd& z) const {
  const double y = z.imag().norm() / lambda_min_;
  int N = static_cast<int>(
      std::ceil(y + std::sqrt(kTailExponent / (M_PI * lambda_min_))));
  while (M_PI * lambda_min_ * (N - y) * (N - y) <= kTailExponent) ++N;
  return N;
}

void ThetaFunction::value_and_gradient(const Eigen::VectorXcd& z, cplx& value,
                                       Eigen::VectorXcd& gradient) const {
  const int g = genus();
  value = 1.0;
  gradient.resize(g);
  gradient.setZero();
  if (g == 0) return;

  const int N = truncation_for(z);
  const cplx two_pi_i(0.0, 2.0 * M_PI);
  Eigen::VectorXd m(g);
  m.setConstant(-N);
  value = 0.0;
  for (;;) {
    const cplx quad = 0.5 * (m.transpose() * tau_ * m)(0);
    const cplx lin = (m.transpose() * z)(0);
    const cplx term = std::exp(two_pi_i * (quad + lin));
    value += term;
    for (int j = 0; j < g; ++j) gradient(j) += two_pi_i * m(j) * term;
    int d = 0;
    while (d < g && m(d) == N) m(d++) = -N;
    if (d == g) break;
    m(d) += 1.0;
  }
}

cplx ThetaFunction::value(const Eigen::VectorXcd& z) const {
  cplx v;
  Eigen::VectorXcd grad;
  value_and_gradient(z, v, grad);
  return v;
}

}  // namespace jscat
