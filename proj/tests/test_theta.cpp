#include <cmath>
#include <complex>

#include "doctest.h"
#include "jscat/theta.hpp"

using namespace jscat;

namespace {

Eigen::VectorXcd vec1(cplx z) {
  Eigen::VectorXcd v(1);
  v(0) = z;
  return v;
}

bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

const cplx tau1(0.0, 0.6396307855855032330925782);

}  // namespace

TEST_CASE("genus zero theta is one") {
  ThetaFunction theta{Eigen::MatrixXcd(0, 0)};
  CHECK(theta.genus() == 0);
  CHECK(theta.value(Eigen::VectorXcd(0)) == cplx(1.0, 0.0));
}

TEST_CASE("period matrix validation") {
  Eigen::MatrixXcd bad(2, 2);
  bad << cplx(0, 1), cplx(0.3, 0), cplx(0.1, 0), cplx(0, 1);
  CHECK_THROWS_AS(ThetaFunction{bad}, InvalidConfig);
  Eigen::MatrixXcd neg(1, 1);
  neg << cplx(0.0, -0.5);
  CHECK_THROWS_AS(ThetaFunction{neg}, InvalidConfig);
  Eigen::MatrixXcd rect(1, 2);
  CHECK_THROWS_AS(ThetaFunction{rect}, InvalidConfig);
}

TEST_CASE("one dimensional values") {
  Eigen::MatrixXcd tau(1, 1);
  tau << tau1;
  ThetaFunction theta{tau};

  cplx v;
  Eigen::VectorXcd grad;
  theta.value_and_gradient(vec1(0.25), v, grad);
  CHECK(close(v, 0.9993539866104215820549, 1e-14));
  CHECK(close(grad(0), -1.684661337511900536985, 1e-13));

  theta.value_and_gradient(vec1(cplx(0.2, 0.1)), v, grad);
  CHECK(close(v, cplx(1.098761695261894646621, -0.1715860303165392465076), 1e-13));
  CHECK(close(grad(0), cplx(-1.938075304877784065166, -0.338441951018196173988), 1e-12));

  theta.value_and_gradient(vec1(cplx(-0.37, 0.22)), v, grad);
  CHECK(close(v, cplx(0.6110213048881924885461, 0.3597220747465899848083), 1e-13));
  CHECK(close(grad(0), cplx(2.535919397717262144655, 2.156554014088325294861), 1e-12));
}

TEST_CASE("two dimensional value and gradient") {
  Eigen::MatrixXcd tau(2, 2);
  tau << cplx(0.0, 1.2), cplx(0.3, 0.1), cplx(0.3, 0.1), cplx(0.0, 0.9);
  ThetaFunction theta{tau};
  Eigen::VectorXcd z(2);
  z << cplx(0.2, 0.3), cplx(-0.1, 0.05);
  cplx v;
  Eigen::VectorXcd grad;
  theta.value_and_gradient(z, v, grad);
  CHECK(close(v, cplx(1.141041811023773181445, -0.1053399994960625190952), 1e-12));
  CHECK(close(grad(0), cplx(-0.8440067114277168798218, -0.2352109034363059534922), 1e-12));
}

TEST_CASE("quasi periodicity") {
  Eigen::MatrixXcd tau(2, 2);
  tau << cplx(0.0, 1.2), cplx(0.3, 0.1), cplx(0.3, 0.1), cplx(0.0, 0.9);
  ThetaFunction theta{tau};
  Eigen::VectorXcd z(2);
  z << cplx(0.17, -0.21), cplx(-0.4, 0.13);

  for (int k = 0; k < 2; ++k) {
    Eigen::VectorXcd shift = Eigen::VectorXcd::Zero(2);
    shift(k) = 1.0;
    CHECK(close(theta.value(z + shift), theta.value(z), 1e-10));

    const Eigen::VectorXcd tshift = tau.col(k);
    const cplx factor =
        std::exp(cplx(0.0, -M_PI) * (tau(k, k) + 2.0 * z(k)));
    CHECK(close(theta.value(z + tshift), factor * theta.value(z), 1e-10));
  }
}

TEST_CASE("parity and conjugation") {
  Eigen::MatrixXcd tau(1, 1);
  tau << tau1;
  ThetaFunction theta{tau};
  const Eigen::VectorXcd z = vec1(cplx(0.31, -0.08));
  CHECK(close(theta.value(-z), theta.value(z), 1e-14));
  // purely imaginary tau: theta(conj z) = conj theta(z)
  CHECK(close(theta.value(z.conjugate()), std::conj(theta.value(z)), 1e-14));
}

TEST_CASE("truncation rule grows with the argument") {
  Eigen::MatrixXcd tau(1, 1);
  tau << tau1;
  ThetaFunction theta{tau};
  const int n_small = theta.truncation_for(vec1(0.2));
  const int n_large = theta.truncation_for(vec1(cplx(0.2, 3.0)));
  CHECK(n_small >= 3);
  CHECK(n_large > n_small);
  const double lmin = theta.min_im_eigenvalue();
  const double y = 3.0 / lmin;
  CHECK(M_PI * lmin * (n_large - y) * (n_large - y) > 30.0);
  CHECK(M_PI * lmin * (n_large - 1 - y) * (n_large - 1 - y) <= 30.0);
}
