#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "jscat/errors.hpp"

namespace jscat {

using cplx = std::complex<double>;

// Chebyshev-Gauss angles theta_k = (k - 1/2) pi / N for k = 1..N.
std::vector<double> cheb_angles(int N);

// Nodes of the rule  int_A^B f(x) dx / sqrt((x-A)(B-x)) = (pi/N) sum_k f(x_k),
// x_k = mid + half*cos(theta_k).  x runs from near B down to near A.
struct ChebRule {
  double mid = 0, half = 0;
  std::vector<double> theta, x;
  ChebRule() = default;
  ChebRule(double A, double B, int N);
  double angle_weight() const { return M_PI / static_cast<double>(theta.size()); }
};

// Gauss-Legendre nodes and weights on [-1, 1], cached per order.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int order);

// Adaptive Gauss-Legendre: subdivides until |whole - (left+right)| <= tol
// with tol treated against the accumulated scale; SingularQuadrature past
// max_depth levels.
cplx integrate_adaptive(const std::function<cplx(double)>& f, double a, double b,
                        double tol, int max_depth = 32);

// Cosine coefficients on the midpoint grid: given f at cheb_angles(N) nodes,
// returns c_m, m = 0..M-1, with f(theta) ~= c_0/2 + sum_{m>=1} c_m cos(m theta).
// Exact for cosine polynomials of degree < N.
std::vector<double> cosine_coefficients(const std::vector<double>& f_nodes, int M);
std::vector<cplx> cosine_coefficients(const std::vector<cplx>& f_nodes, int M);

// I_m(c) = int_0^pi cos(m theta) / (cos theta - c) d theta for c off [-1,1]:
// I_m = -pi w^m / s with s = sqrt(c-1)sqrt(c+1), w = c - s chosen so |w| <= 1.
void cauchy_cosine_kernel(cplx c, int M, std::vector<cplx>& out);

// Principal value version for real c in (-1, 1):
// I_m = pi sin(m phi) / sin(phi), phi = acos(c); I_0 = 0.
void cauchy_cosine_kernel_pv(double c, int M, std::vector<double>& out);

// J_m(-) = int_0^pi ln(2 - 2 cos theta) cos(m theta) d theta = -pi/m (0 for m=0)
// J_m(+) = int_0^pi ln(2 + 2 cos theta) cos(m theta) d theta = -pi(-1)^m/m.
double log_cosine_kernel_minus(int m);
double log_cosine_kernel_plus(int m);

}  // namespace jscat
