#include "jscat/background.hpp"

#include <algorithm>
#include <cmath>

#include "jscat/errors.hpp"

namespace jscat {

Background::Background(std::shared_ptr<const SpectralCurve> curve,
                       std::vector<DivisorPoint> divisor)
    : curve_(std::move(curve)), divisor_(std::move(divisor)) {
  const int g = curve_->genus();
  if (static_cast<int>(divisor_.size()) != g)
    throw InvalidConfig("divisor must have one point per gap, got " +
                        std::to_string(divisor_.size()) + " for genus " +
                        std::to_string(g));
  std::sort(divisor_.begin(), divisor_.end(),
            [](const DivisorPoint& l, const DivisorPoint& r) { return l.mu < r.mu; });
  const BandEdges& edges = curve_->edges();
  const double edge_guard = 1e-10 * std::max(1.0, edges.span());
  for (int k = 0; k < g; ++k) {
    const double mu = divisor_[k].mu;
    const double lo = edges.gap_lo(k + 1), hi = edges.gap_hi(k + 1);
    if (!(mu > lo && mu < hi))
      throw InvalidConfig("divisor point " + std::to_string(mu) +
                          " is not inside gap " + std::to_string(k + 1));
    if (mu - lo < edge_guard || hi - mu < edge_guard)
      throw EdgeDivisor("divisor point " + std::to_string(mu) +
                        " is too close to a band edge");
  }

  base_.resize(g);
  if (g == 0) return;

  Eigen::VectorXcd alpha = Eigen::VectorXcd::Zero(g);
  for (const DivisorPoint& dp : divisor_)
    alpha += curve_->abel({cplx(dp.mu, 0.0), dp.sheet});
  Eigen::VectorXcd raw = curve_->abel_infinity().cast<cplx>() - alpha -
                         curve_->riemann_constant();

  // the imaginary part must be an integer combination of b-periods
  const Eigen::MatrixXd im_tau = curve_->periods().tau.imag();
  const Eigen::VectorXd y_real = im_tau.partialPivLu().solve(raw.imag().eval());
  Eigen::VectorXd y(g);
  for (int j = 0; j < g; ++j) y(j) = std::round(y_real(j));
  raw -= curve_->periods().tau * y.cast<cplx>();
  if (raw.imag().cwiseAbs().maxCoeff() > 1e-7)
    throw ThetaZero("divisor argument does not reduce to a real vector");
  base_ = raw.real();
  for (int j = 0; j < g; ++j) base_(j) -= std::round(base_(j));

  // the whole site range must stay clear of the theta divisor
  theta_site(0);
  theta_site(-1);
}

Eigen::VectorXd Background::site_argument(int n) const {
  return base_ - static_cast<double>(n) * curve_->site_shift();
}

double Background::theta_site(int n) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = theta_cache_.find(n);
    if (it != theta_cache_.end()) return it->second;
  }
  const cplx v = curve_->theta().value(site_argument(n).cast<cplx>());
  if (std::fabs(v.imag()) > 1e-10 * (1.0 + std::abs(v)) || v.real() <= 0.0)
    throw ThetaZero("theta at site " + std::to_string(n) +
                    " is not real positive");
  std::lock_guard<std::mutex> lock(cache_mutex_);
  theta_cache_.emplace(n, v.real());
  return v.real();
}

double Background::a(int n) const {
  return curve_->capacity() *
         std::sqrt(theta_site(n + 1) * theta_site(n - 1)) / theta_site(n);
}

double Background::b(int n) const {
  const int g = curve_->genus();
  double acc = curve_->b_offset();
  if (g == 0) return acc;
  const ThetaFunction& theta = curve_->theta();
  cplx v0, v1;
  Eigen::VectorXcd g0, g1;
  theta.value_and_gradient(site_argument(n).cast<cplx>(), v0, g0);
  theta.value_and_gradient(site_argument(n - 1).cast<cplx>(), v1, g1);
  const Eigen::MatrixXd& c = curve_->periods().c;
  for (int k = 0; k < g; ++k)
    acc += c(k, g - 1) * (g0(k) / v0 - g1(k) / v1).real();
  return acc;
}

double Background::normalization(int n) const {
  return std::sqrt(theta_site(0) * theta_site(-1) /
                   (theta_site(n) * theta_site(n - 1)));
}

Background::WavePoint Background::prepare(const SurfacePoint& p) const {
  WavePoint w;
  w.p = p;
  w.abel = curve_->abel(p);
  w.exponent = curve_->infinity_kernel_integral(p);
  w.theta_den = curve_->theta().value(w.abel + base_.cast<cplx>());
  return w;
}

cplx Background::eval(const WavePoint& w, int n) const {
  if (std::abs(w.theta_den) < 1e-12)
    throw DivisorPole("solution evaluated at a divisor pole");
  const Eigen::VectorXcd arg =
      w.abel + site_argument(n).cast<cplx>();
  const cplx num = curve_->theta().value(arg);
  const double sw = curve_->wave_sign() < 0 && (n % 2 != 0) ? -1.0 : 1.0;
  return normalization(n) * (num / w.theta_den) * sw *
         std::exp(static_cast<double>(n) * w.exponent);
}

cplx Background::eval_hat(const WavePoint& w, int n) const {
  if (std::abs(w.theta_den) == 0.0)
    throw DivisorPole("pole-free solution evaluated exactly at a divisor pole");
  const cplx factor = divisor_poly_on(w.p.sheet, w.p.z);
  const Eigen::VectorXcd arg =
      w.abel + site_argument(n).cast<cplx>();
  const cplx num = curve_->theta().value(arg);
  const double sw = curve_->wave_sign() < 0 && (n % 2 != 0) ? -1.0 : 1.0;
  return factor * normalization(n) * (num / w.theta_den) * sw *
         std::exp(static_cast<double>(n) * w.exponent);
}

std::vector<double> Background::poles_on(Sheet s) const {
  std::vector<double> out;
  for (const DivisorPoint& dp : divisor_)
    if (dp.sheet == s) out.push_back(dp.mu);
  return out;
}

cplx Background::divisor_poly(cplx z) const {
  cplx p = 1.0;
  for (const DivisorPoint& dp : divisor_) p *= z - dp.mu;
  return p;
}

cplx Background::divisor_poly_on(Sheet s, cplx z) const {
  cplx p = 1.0;
  for (const DivisorPoint& dp : divisor_)
    if (dp.sheet == s) p *= z - dp.mu;
  return p;
}

}  // namespace jscat
