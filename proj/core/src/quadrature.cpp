#include "jscat/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace jscat {

std::vector<double> cheb_angles(int N) {
  std::vector<double> t(N);
  for (int k = 1; k <= N; ++k) t[k - 1] = (k - 0.5) * M_PI / N;
  return t;
}

ChebRule::ChebRule(double A, double B, int N)
    : mid(0.5 * (A + B)), half(0.5 * (B - A)), theta(cheb_angles(N)), x(N) {
  if (!(B > A)) throw SingularQuadrature("empty interval for Chebyshev rule");
  for (int k = 0; k < N; ++k) x[k] = mid + half * std::cos(theta[k]);
}

namespace {

// Newton iteration on P_n; standard construction of Gauss-Legendre rules.
std::pair<std::vector<double>, std::vector<double>> build_gl(int n) {
  std::vector<double> x(n), w(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double p0, p1, dp;
    for (int it = 0; it < 100; ++it) {
      p0 = 1.0;
      p1 = t;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::fabs(dt) < 1e-15) break;
    }
    x[i] = t;
    w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
  return {x, w};
}

}  // namespace

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int order) {
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_gl(order)).first;
  return it->second;
}

namespace {

cplx gl_apply(const std::function<cplx(double)>& f, double a, double b, int order) {
  const auto& [xs, ws] = gauss_legendre(order);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  cplx s = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) s += ws[i] * f(mid + half * xs[i]);
  return half * s;
}

cplx adapt_rec(const std::function<cplx(double)>& f, double a, double b, cplx whole,
               double tol, int depth) {
  const double m = 0.5 * (a + b);
  const cplx left = gl_apply(f, a, m, 20);
  const cplx right = gl_apply(f, m, b, 20);
  const cplx delta = left + right - whole;
  if (std::abs(delta) <= tol) return left + right + delta / 63.0;
  if (depth <= 0)
    throw SingularQuadrature("adaptive refinement did not converge on [" +
                             std::to_string(a) + ", " + std::to_string(b) + "]");
  return adapt_rec(f, a, m, left, 0.5 * tol, depth - 1) +
         adapt_rec(f, m, b, right, 0.5 * tol, depth - 1);
}

}  // namespace

cplx integrate_adaptive(const std::function<cplx(double)>& f, double a, double b,
                        double tol, int max_depth) {
  if (a == b) return 0.0;
  return adapt_rec(f, a, b, gl_apply(f, a, b, 20), tol, max_depth);
}

template <typename T>
static std::vector<T> cosine_coefficients_impl(const std::vector<T>& f, int M) {
  const int N = static_cast<int>(f.size());
  std::vector<T> c(M, T(0));
  for (int m = 0; m < M; ++m) {
    T s(0);
    for (int k = 0; k < N; ++k) s += f[k] * std::cos(m * (k + 0.5) * M_PI / N);
    c[m] = s * (2.0 / N);
  }
  return c;
}

std::vector<double> cosine_coefficients(const std::vector<double>& f_nodes, int M) {
  return cosine_coefficients_impl(f_nodes, M);
}
std::vector<cplx> cosine_coefficients(const std::vector<cplx>& f_nodes, int M) {
  return cosine_coefficients_impl(f_nodes, M);
}

void cauchy_cosine_kernel(cplx c, int M, std::vector<cplx>& out) {
  cplx s = std::sqrt(c - 1.0) * std::sqrt(c + 1.0);
  cplx w = c - s;
  if (std::abs(w) > 1.0) {
    w = c + s;
    s = -s;
  }
  if (std::abs(s) == 0.0) throw SingularQuadrature("Cauchy kernel at a band edge");
  out.assign(M, cplx(0));
  cplx wp(1.0, 0.0);
  for (int m = 0; m < M; ++m) {
    out[m] = -M_PI * wp / s;
    wp *= w;
  }
}

void cauchy_cosine_kernel_pv(double c, int M, std::vector<double>& out) {
  const double phi = std::acos(c);
  const double sp = std::sin(phi);
  if (sp == 0.0) throw SingularQuadrature("principal value pole at interval end");
  out.assign(M, 0.0);
  for (int m = 1; m < M; ++m) out[m] = M_PI * std::sin(m * phi) / sp;
}

double log_cosine_kernel_minus(int m) { return m == 0 ? 0.0 : -M_PI / m; }

double log_cosine_kernel_plus(int m) {
  if (m == 0) return 0.0;
  return (m % 2 == 0 ? -1.0 : 1.0) * M_PI / m;
}

}  // namespace jscat
