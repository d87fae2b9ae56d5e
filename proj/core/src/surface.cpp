#include "jscat/surface.hpp"

#include <cmath>
#include <vector>

#include "jscat/errors.hpp"

namespace jscat {

SpectralCurve::SpectralCurve(const BandEdges& edges, int cheb_order)
    : edges_(edges),
      paths_(edges, cheb_order),
      periods_(compute_periods(paths_)),
      theta_(periods_.tau) {
  const int g = genus();
  tol_ = 1e-13 * std::max(1.0, edges_.span());
  if (g > 0) a_period_t_lu_.compute(periods_.C.transpose());

  abel_inf_.resize(g);
  if (g > 0) {
    const Eigen::VectorXcd inf = periods_.c * paths_.monomials_to_infinity_upper();
    if (inf.imag().cwiseAbs().maxCoeff() > 1e-8)
      throw SingularQuadrature("Abel map at infinity has nonreal value");
    abel_inf_ = inf.real();
  }

  solve_infinity_kernel();
  compute_capacity();
  compute_site_shift();
  locate_riemann_constant();
}

Eigen::VectorXcd SpectralCurve::abel(const SurfacePoint& p) const {
  const int g = genus();
  if (g == 0) return Eigen::VectorXcd(0);
  return periods_.c * paths_.monomials_to(p).head(g);
}

void SpectralCurve::solve_infinity_kernel() {
  const int g = genus();
  d_.resize(g);
  double esum = 0.0;
  for (double Ej : edges_.E) esum += Ej;
  if (g == 0) {
    b_offset_ = esum / 2.0;
    return;
  }
  Eigen::VectorXd P(g);
  for (int k = 0; k < g; ++k) {
    const cplx v = 2.0 * paths_.segment_full(2 * k + 1, g);
    P(k) = v.real();
  }
  d_ = a_period_t_lu_.solve(-P);
  b_offset_ = d_(g - 1) + esum / 2.0;
}

// regularized integral to the upper infinity:
// lim_{X->inf} [ int_{E_0}^{X} omega + ln X ], split at L1 = E_last + span
// with a 1/x substitution for the far part
void SpectralCurve::compute_capacity() {
  const int g = genus();
  const double e_last = edges_.E.back();
  const double span = edges_.span();
  const double L1 = e_last + span;

  auto polyval = [&](cplx x) {
    cplx v = std::pow(x, g);
    for (int m = 0; m < g; ++m) v += d_(m) * std::pow(x, m);
    return v;
  };

  cplx acc = 0.0;
  for (int m = 0; m <= g; ++m) {
    const double coeff = (m == g) ? 1.0 : d_(m);
    acc += coeff * paths_.prefix(2 * g + 1, m);
  }
  auto near_piece = [&](double t) -> cplx {
    const double x = e_last + t * t;
    return 2.0 * t * polyval(x) / sheet_root(edges_, cplx(x, 0.0));
  };
  acc += integrate_adaptive(near_piece, 0.0, std::sqrt(span), tol_);

  // ((1 + sum_m d_m u^{g-m}) / stilde(u) - 1)/u -> b_offset as u -> 0
  auto far_piece = [&](double u) -> cplx {
    double num = 1.0;
    for (int m = 0; m < g; ++m) num += d_(m) * std::pow(u, g - m);
    return (num / paths_.stilde(u) - 1.0) / u;
  };
  acc -= integrate_adaptive(far_piece, 0.0, 1.0 / L1, tol_);
  acc += std::log(L1);

  if (std::fabs(std::sin(acc.imag())) > 1e-6)
    throw SingularNormalization("regularized infinity integral has phase " +
                                std::to_string(acc.imag()));
  wave_sign_ = std::cos(acc.imag()) > 0.0 ? 1.0 : -1.0;
  capacity_ = std::exp(acc.real());
}

cplx SpectralCurve::infinity_kernel_integral(const SurfacePoint& p) const {
  const int g = genus();
  const Eigen::VectorXcd I = paths_.monomials_to(p);
  cplx acc = I(g);
  for (int m = 0; m < g; ++m) acc += d_(m) * I(m);
  return acc;
}

cplx SpectralCurve::map_w(const SurfacePoint& p) const {
  return wave_sign_ * std::exp(infinity_kernel_integral(p));
}

void SpectralCurve::compute_site_shift() {
  const int g = genus();
  site_shift_.resize(g);
  cplx acc = 0.0;
  for (int k = 0; k < g; ++k) {
    cplx band = paths_.segment_full(2 * k, g);
    for (int m = 0; m < g; ++m) band += d_(m) * paths_.segment_full(2 * k, m);
    acc += band;
    const cplx raw = periods_.sign_b * 2.0 * acc;
    if (std::fabs(raw.real()) > 1e-9 * (1.0 + std::abs(raw)))
      throw SingularQuadrature("site shift has nonreal value");
    site_shift_(k) = -raw.imag() / (2.0 * M_PI);
  }
}

// The Riemann constant is located among the 4^g half periods by requiring
// theta(A(p) - sum_j A(mu_j) - Xi) to vanish exactly when p is one of the
// probe points mu_j (gap midpoints, upper sheet) and nowhere generic.
void SpectralCurve::locate_riemann_constant() {
  const int g = genus();
  xi_.resize(g);
  xi_eps_.resize(g);
  if (g == 0) return;

  std::vector<Eigen::VectorXcd> a_mu(g);
  Eigen::VectorXcd alpha = Eigen::VectorXcd::Zero(g);
  for (int k = 0; k < g; ++k) {
    const double mid = (edges_.gap_lo(k + 1) + edges_.gap_hi(k + 1)) / 2.0;
    a_mu[k] = abel({cplx(mid, 0.0), Sheet::upper});
    alpha += a_mu[k];
  }
  const double band_mid = (edges_.band_lo(0) + edges_.band_hi(0)) / 2.0;
  const Eigen::VectorXcd a_generic =
      abel({cplx(band_mid, 0.3 * edges_.span()), Sheet::upper});

  const double theta_scale = std::abs(theta_.value(Eigen::VectorXcd::Zero(g)));
  const double vanish_tol = 1e-5 * theta_scale;
  const double generic_tol = 1e-3 * theta_scale;

  int found = -1;
  int found_eps = -1, found_epsp = -1;
  for (int code = 0; code < (1 << (2 * g)); ++code) {
    const int eps_bits = code & ((1 << g) - 1);
    const int epsp_bits = code >> g;
    Eigen::VectorXcd cand(g);
    for (int j = 0; j < g; ++j) {
      cand(j) = 0.5 * ((eps_bits >> j) & 1);
      for (int l = 0; l < g; ++l)
        cand(j) += 0.5 * ((epsp_bits >> l) & 1) * periods_.tau(j, l);
    }
    double vanish = 0.0;
    double generic = std::abs(theta_.value(a_generic - alpha - cand));
    for (int k = 0; k < g; ++k) {
      vanish = std::max(vanish, std::abs(theta_.value(a_mu[k] - alpha - cand)));
      generic = std::min(generic, std::abs(theta_.value(-a_mu[k] - alpha - cand)));
    }
    if (vanish < vanish_tol && generic > generic_tol) {
      if (found >= 0)
        throw SingularNormalization("Riemann constant is ambiguous");
      found = code;
      found_eps = eps_bits;
      found_epsp = epsp_bits;
      xi_ = cand;
    }
  }
  if (found < 0)
    throw SingularNormalization("Riemann constant not found among half periods");
  if (found_epsp != (1 << g) - 1)
    throw SingularNormalization(
        "Riemann constant half period is incompatible with real reduction");
  for (int j = 0; j < g; ++j) xi_eps_(j) = (found_eps >> j) & 1;
}

SpectralCurve::ThirdKind SpectralCurve::third_kind(const SurfacePoint& pole) const {
  const int g = genus();
  ThirdKind k;
  k.pole = pole;
  k.rhalf = r_sqrt(edges_, pole);
  k.d.resize(g);
  if (g == 0) return k;

  const int order = paths_.order();
  std::vector<cplx> kernel(order);
  Eigen::VectorXcd K(g);
  for (int gap = 0; gap < g; ++gap) {
    const int s = 2 * gap + 1;
    const ChebRule& rule = paths_.segment_rule(s);
    const cplx c = (pole.z - rule.mid) / rule.half;
    const bool pv = pole.z.imag() == 0.0 && pole.z.real() > rule.mid - rule.half &&
                    pole.z.real() < rule.mid + rule.half;
    if (pv) {
      std::vector<double> pv_kernel(order);
      cauchy_cosine_kernel_pv(c.real(), order, pv_kernel);
      for (int m = 0; m < order; ++m) kernel[m] = pv_kernel[m];
    } else {
      cauchy_cosine_kernel(c, order, kernel);
    }
    const Eigen::MatrixXd& coeffs = paths_.segment_coeffs(s);
    cplx acc = 0.5 * coeffs(0, 0) * kernel[0];
    for (int m = 1; m < order; ++m) acc += coeffs(0, m) * kernel[m];
    K(gap) = 2.0 * paths_.segment_kappa(s) * k.rhalf / rule.half * acc;
  }
  k.d = -(a_period_t_lu_.solve(K.real().eval()) +
          cplx(0.0, 1.0) * a_period_t_lu_.solve(K.imag().eval()));
  return k;
}

cplx SpectralCurve::third_kind_density(const ThirdKind& k,
                                       const SurfacePoint& at) const {
  cplx val = k.rhalf / (at.z - k.pole.z);
  for (int m = 0; m < genus(); ++m) val += k.d(m) * std::pow(at.z, m);
  return val / r_sqrt(edges_, at);
}

double SpectralCurve::blaschke_anchor(double rho) const {
  if (rho < edges_.E.front()) return edges_.E.front();
  if (rho > edges_.E.back()) return edges_.E.back();
  const int gap = edges_.gap_of(rho);
  if (gap == 0)
    throw RhoInSpectrum("Blaschke anchor requested inside a band at " +
                        std::to_string(rho));
  const double lo = edges_.gap_lo(gap), hi = edges_.gap_hi(gap);
  return (rho - lo < hi - rho) ? lo : hi;
}

cplx SpectralCurve::blaschke_factor(const ThirdKind& k, double rho) const {
  const double anchor = blaschke_anchor(rho);
  if (rho == anchor)
    throw RhoInSpectrum("Blaschke path is empty at " + std::to_string(rho));

  const double lo = std::min(anchor, rho), hi = std::max(anchor, rho);
  const bool pv = k.pole.z.imag() == 0.0 && k.pole.z.real() > lo &&
                  k.pole.z.real() < hi;
  const double zx = k.pole.z.real();
  cplx res = 0.0;
  if (pv) res = k.rhalf / sheet_root(edges_, cplx(zx, 0.0));

  auto dens = [&](double x) -> cplx {
    cplx v = third_kind_density(k, {cplx(x, 0.0), Sheet::upper});
    if (pv) v -= res / (x - zx);
    return v;
  };
  const double sgn = (rho > anchor) ? 1.0 : -1.0;
  auto sub = [&](double t) -> cplx {
    return dens(anchor + sgn * t * t) * (2.0 * sgn * t);
  };
  cplx I = integrate_adaptive(sub, 0.0, std::sqrt(hi - lo), tol_);
  if (pv) I += res * std::log(std::fabs((rho - zx) / (anchor - zx)));
  const cplx factor = std::exp(I);
  return pv ? -factor : factor;
}

}  // namespace jscat
