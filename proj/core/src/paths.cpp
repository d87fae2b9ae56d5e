#include "jscat/paths.hpp"

#include <cmath>

namespace jscat {

namespace {

// distance from point q to the segment [p0, p1] in the complex plane
double segment_distance(cplx p0, cplx p1, cplx q) {
  const cplx d = p1 - p0;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(q - p0);
  double t = ((q.real() - p0.real()) * d.real() + (q.imag() - p0.imag()) * d.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(q - (p0 + t * d));
}

}  // namespace

PathEngine::PathEngine(const BandEdges& edges, int cheb_order)
    : edges_(edges), order_(cheb_order) {
  const int g = genus();
  const int segs = 2 * g + 1;
  rules_.reserve(segs);
  kappa_.reserve(segs);
  coeffs_.reserve(segs);
  full_.resize(segs, g + 1);
  prefix_.resize(segs + 1, g + 1);
  tol_ = 1e-13 * std::max(1.0, edges_.span());

  for (int s = 0; s < segs; ++s) {
    rules_.emplace_back(edges_.E[s], edges_.E[s + 1], order_);
    // kappa: band j contributes i(-1)^{g-j}, gap k contributes (-1)^{g-k}
    if (s % 2 == 0) {
      const int j = s / 2;
      kappa_.push_back(cplx(0.0, 1.0) * (((g - j) % 2 == 0) ? 1.0 : -1.0));
    } else {
      const int k = (s + 1) / 2;
      kappa_.push_back(cplx((((g - k) % 2 == 0) ? 1.0 : -1.0), 0.0));
    }
    // W(theta) = 1 / sqrt(prod over other edges |x - E_l|), smooth and even
    const ChebRule& rule = rules_.back();
    std::vector<double> base(order_);
    for (int i = 0; i < order_; ++i)
      base[i] = 1.0 / sqrt_abs_r_excluding(edges_, rule.x[i], s, s + 1);
    Eigen::MatrixXd cm(g + 1, order_);
    std::vector<double> nodes(order_);
    for (int m = 0; m <= g; ++m) {
      for (int i = 0; i < order_; ++i)
        nodes[i] = std::pow(rule.x[i], m) * base[i];
      const auto cc = cosine_coefficients(nodes, order_);
      for (int q = 0; q < order_; ++q) cm(m, q) = cc[q];
    }
    coeffs_.push_back(std::move(cm));
  }

  prefix_.row(0).setZero();
  for (int s = 0; s < segs; ++s) {
    for (int m = 0; m <= g; ++m)
      full_(s, m) = kappa_[s] * (M_PI / 2.0) * coeffs_[s](m, 0);
    prefix_.row(s + 1) = prefix_.row(s) + full_.row(s);
  }
}

cplx PathEngine::segment_full(int s, int m) const { return full_(s, m); }
cplx PathEngine::prefix(int s, int m) const { return prefix_(s, m); }

double PathEngine::stilde(double u) const {
  double p = 1.0;
  for (double Ej : edges_.E) p *= 1.0 - Ej * u;
  return std::sqrt(p);
}

// int from the left edge of segment s up to x inside it, via the cosine series:
// int_{theta_x}^{pi} cos(q theta) d theta = -sin(q theta_x)/q  (q >= 1).
cplx PathEngine::partial_from_left(int s, double x, int m) const {
  const ChebRule& rule = rules_[s];
  double u = (x - rule.mid) / rule.half;
  u = std::clamp(u, -1.0, 1.0);
  const double tx = std::acos(u);
  const Eigen::MatrixXd& cm = coeffs_[s];
  double acc = 0.5 * cm(m, 0) * (M_PI - tx);
  for (int q = 1; q < order_; ++q) acc -= cm(m, q) * std::sin(q * tx) / q;
  return kappa_[s] * acc;
}

cplx PathEngine::right_partial(int m, double X) const {
  const int g = genus();
  const double Elast = edges_.E.back();
  const double span = edges_.span();
  const double split = std::min(X, Elast + span);
  // t^2 substitution at the branch point end
  auto near_piece = [&](double t) -> cplx {
    const double x = Elast + t * t;
    return 2.0 * t * std::pow(x, m) / sheet_root(edges_, cplx(x, 0.0));
  };
  cplx acc = integrate_adaptive(near_piece, 0.0, std::sqrt(split - Elast), tol_);
  if (X > split) {
    auto far_piece = [&](double u) -> cplx {
      return std::pow(u, g - 1 - m) / stilde(u);
    };
    acc -= integrate_adaptive(far_piece, 1.0 / X, 1.0 / split, tol_);
  }
  return acc;
}

cplx PathEngine::left_partial(int m, double x) const {
  const double E0 = edges_.E.front();
  const double span = edges_.span();
  const double split = std::max(x, E0 - span);
  auto near_piece = [&](double t) -> cplx {
    const double xx = E0 - t * t;
    return 2.0 * t * std::pow(xx, m) / sheet_root(edges_, cplx(xx, 0.0));
  };
  // int_x^{E_0} = near piece (+ far piece); the path integral is its negative
  cplx acc = integrate_adaptive(near_piece, 0.0, std::sqrt(E0 - split), tol_);
  if (x < split) {
    auto far_piece = [&](double t) -> cplx {
      return std::pow(t, m) / sheet_root(edges_, cplx(t, 0.0));
    };
    acc += integrate_adaptive(far_piece, x, split, tol_, 40);
  }
  return -acc;
}

Eigen::VectorXcd PathEngine::monomials_real(double x) const {
  const int g = genus();
  Eigen::VectorXcd out(g + 1);
  if (x >= edges_.E.front() && x <= edges_.E.back()) {
    int s = 0;
    while (s < 2 * g && x > edges_.E[s + 1]) ++s;
    for (int m = 0; m <= g; ++m) out(m) = prefix_(s, m) + partial_from_left(s, x, m);
    return out;
  }
  if (x > edges_.E.back()) {
    for (int m = 0; m <= g; ++m) out(m) = prefix_(2 * g + 1, m) + right_partial(m, x);
    return out;
  }
  for (int m = 0; m <= g; ++m) out(m) = left_partial(m, x);
  return out;
}

Eigen::VectorXcd PathEngine::monomials_complex(cplx z) const {
  if (z.imag() < 0.0) return monomials_complex(std::conj(z)).conjugate();
  const int g = genus();
  const double span = edges_.span();
  const double guard = 1e-12 * span;
  for (double Ej : edges_.E)
    if (std::abs(z - Ej) < guard)
      throw PathThroughBranchPoint("complex target too close to a branch point");
  const double E0 = edges_.E.front();
  const double H = 0.6 * span + z.imag();
  const cplx corner(E0, H);
  Eigen::VectorXcd out(g + 1);
  for (int m = 0; m <= g; ++m) {
    auto leg1 = [&](double t) -> cplx {
      const cplx zz = E0 + cplx(0.0, 1.0) * t * t;
      return 2.0 * cplx(0.0, 1.0) * t * std::pow(zz, m) / sheet_root(edges_, zz);
    };
    auto leg2 = [&](double s) -> cplx {
      const cplx zz = corner + s * (z - corner);
      return (z - corner) * std::pow(zz, m) / sheet_root(edges_, zz);
    };
    out(m) = integrate_adaptive(leg1, 0.0, std::sqrt(H), tol_) +
             integrate_adaptive(leg2, 0.0, 1.0, tol_);
  }
  // the descending leg must clear every branch point
  for (double Ej : edges_.E)
    if (segment_distance(corner, z, cplx(Ej, 0.0)) < guard)
      throw PathThroughBranchPoint("path segment passes through a branch point");
  return out;
}

Eigen::VectorXcd PathEngine::monomials_to(const SurfacePoint& p) const {
  Eigen::VectorXcd v = (p.z.imag() == 0.0) ? monomials_real(p.z.real())
                                           : monomials_complex(p.z);
  if (p.sheet == Sheet::lower) v = -v;
  return v;
}

Eigen::VectorXcd PathEngine::monomials_to_infinity_upper() const {
  const int g = genus();
  const double Elast = edges_.E.back();
  const double span = edges_.span();
  Eigen::VectorXcd out(g);
  for (int m = 0; m < g; ++m) {
    auto near_piece = [&](double t) -> cplx {
      const double x = Elast + t * t;
      return 2.0 * t * std::pow(x, m) / sheet_root(edges_, cplx(x, 0.0));
    };
    cplx tail = integrate_adaptive(near_piece, 0.0, std::sqrt(span), tol_);
    auto far_piece = [&](double u) -> cplx {
      return std::pow(u, g - 1 - m) / stilde(u);
    };
    tail -= integrate_adaptive(far_piece, 0.0, 1.0 / (Elast + span), tol_);
    out(m) = prefix_(2 * g + 1, m) + tail;
  }
  return out;
}

}  // namespace jscat
