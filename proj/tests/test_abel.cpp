#include <cmath>
#include <complex>

#include "doctest.h"
#include "jscat/surface.hpp"

using namespace jscat;

namespace {

bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

// independent gap integral with square-root substitutions at both ends
cplx gap_integral(const BandEdges& e, int k,
                  const std::function<cplx(double)>& density) {
  const double lo = e.gap_lo(k), hi = e.gap_hi(k), mid = 0.5 * (lo + hi);
  auto left = [&](double t) { return density(lo + t * t) * 2.0 * t; };
  auto right = [&](double t) { return density(hi - t * t) * 2.0 * t; };
  return integrate_adaptive(left, 0.0, std::sqrt(mid - lo), 1e-13) +
         integrate_adaptive(right, 0.0, std::sqrt(hi - mid), 1e-13);
}

}  // namespace

TEST_CASE("abel map symmetries") {
  SpectralCurve curve(BandEdges({-2.0, -1.0, 1.0, 2.0}), 96);
  const SurfacePoint p{cplx(0.7, 1.3), Sheet::upper};
  const Eigen::VectorXcd a = curve.abel(p);
  CHECK((curve.abel(conjugate_point(p)) + a).cwiseAbs().maxCoeff() == 0.0);
  const Eigen::VectorXcd ac = curve.abel({std::conj(p.z), Sheet::upper});
  CHECK(close(ac(0), std::conj(a(0)), 1e-12));
}

TEST_CASE("normalized a periods re-integrated") {
  SpectralCurve curve(BandEdges({-2.0, -1.0, -0.3, 0.4, 1.0, 2.0}), 128);
  const Eigen::MatrixXd& c = curve.periods().c;
  for (int k = 1; k <= 2; ++k) {
    for (int j = 0; j < 2; ++j) {
      auto density = [&](double x) -> cplx {
        cplx num = 0.0;
        for (int m = 0; m < 2; ++m) num += c(j, m) * std::pow(x, m);
        return num / sheet_root(curve.edges(), cplx(x, 0.0));
      };
      const cplx period = 2.0 * gap_integral(curve.edges(), k, density);
      const double expect = (j == k - 1) ? 1.0 : 0.0;
      CHECK(std::abs(period - expect) < 1e-10);
    }
  }
}

TEST_CASE("symmetric genus one constants") {
  SpectralCurve curve(BandEdges({-2.0, -1.0, 1.0, 2.0}), 96);
  CHECK(curve.abel_infinity()(0) == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(std::fabs(curve.infinity_kernel_d()(0)) < 1e-12);
  CHECK(curve.b_offset() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(curve.capacity() ==
        doctest::Approx(0.8660254037844386467637).epsilon(1e-11));
  CHECK(curve.wave_sign() == -1.0);
  CHECK(curve.site_shift()(0) == doctest::Approx(0.5).epsilon(1e-11));
  // Riemann constant (1 + tau)/2
  CHECK(curve.riemann_constant_eps()(0) == 1.0);
  CHECK(close(curve.riemann_constant()(0),
              0.5 + 0.5 * curve.periods().tau(0, 0), 1e-14));
}

TEST_CASE("infinity kernel has vanishing a periods") {
  SpectralCurve curve(BandEdges({-2.0, -1.0, -0.3, 0.4, 1.0, 2.0}), 128);
  const Eigen::VectorXd& d = curve.infinity_kernel_d();
  for (int k = 1; k <= 2; ++k) {
    auto density = [&](double x) -> cplx {
      cplx num = std::pow(x, 2);
      for (int m = 0; m < 2; ++m) num += d(m) * std::pow(x, m);
      return num / sheet_root(curve.edges(), cplx(x, 0.0));
    };
    CHECK(std::abs(gap_integral(curve.edges(), k, density)) < 1e-10);
  }
}

TEST_CASE("joukowski map at genus zero") {
  SpectralCurve curve(BandEdges({-1.0, 1.0}), 64);
  CHECK(curve.capacity() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(curve.b_offset() == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(curve.wave_sign() == -1.0);
  for (cplx z : {cplx(2.0, 0.0), cplx(0.5, 0.25), cplx(-3.0, -1.0), cplx(0.3, 0.0)}) {
    const cplx w = curve.map_w({z, Sheet::upper});
    CHECK(close((w + 1.0 / w) / 2.0, z, 1e-11));
    CHECK(std::abs(w) < 1.0 + 1e-12);
  }
  // explicit value: w(2) = 2 - sqrt(3)
  CHECK(close(curve.map_w({cplx(2.0, 0.0), Sheet::upper}),
              2.0 - std::sqrt(3.0), 1e-12));
  // on the band the map is unimodular
  const cplx wb = curve.map_w({cplx(0.4, 0.0), Sheet::upper});
  CHECK(std::fabs(std::abs(wb) - 1.0) < 1e-11);
}

TEST_CASE("third kind pole pair") {
  SpectralCurve curve(BandEdges({-2.0, -1.0, 1.0, 2.0}), 96);
  const SurfacePoint pole{cplx(0.3, 0.8), Sheet::upper};
  const auto k = curve.third_kind(pole);

  // residue +1 at the pole on its own sheet
  const cplx near = pole.z + cplx(1e-7, -2e-8);
  const cplx dens = curve.third_kind_density(k, {near, Sheet::upper});
  CHECK(close(dens * (near - pole.z), 1.0, 1e-6));
  // residue -1 on the other sheet
  const cplx dens2 = curve.third_kind_density(k, {near, Sheet::lower});
  CHECK(close(dens2 * (near - pole.z), -1.0, 1e-6));

  // vanishing a period
  auto density = [&](double x) -> cplx {
    return curve.third_kind_density(k, {cplx(x, 0.0), Sheet::upper});
  };
  CHECK(std::abs(gap_integral(curve.edges(), 1, density)) < 1e-10);
}

TEST_CASE("third kind principal value pole in a gap") {
  SpectralCurve curve(BandEdges({-2.0, -1.0, 1.0, 2.0}), 96);
  const auto k = curve.third_kind({cplx(0.2, 0.0), Sheet::upper});
  CHECK(k.d.imag().cwiseAbs().maxCoeff() < 1e-12);

  // principal value a period vanishes: symmetric exclusion window
  auto density = [&](double x) -> cplx {
    return curve.third_kind_density(k, {cplx(x, 0.0), Sheet::upper});
  };
  const double d = 1e-6;
  auto left_sub = [&](double t) { return density(-1.0 + t * t) * 2.0 * t; };
  auto right_sub = [&](double t) { return density(1.0 - t * t) * 2.0 * t; };
  const cplx pv = integrate_adaptive(left_sub, 0.0, std::sqrt(0.2 - d + 1.0), 1e-13) +
                  integrate_adaptive(right_sub, 0.0, std::sqrt(1.0 - 0.2 - d), 1e-13);
  CHECK(std::abs(pv) < 1e-4);
}

TEST_CASE("blaschke closed form at genus zero") {
  SpectralCurve curve(BandEdges({-1.0, 1.0}), 64);
  auto wmap = [&](cplx z) { return curve.map_w({z, Sheet::upper}); };

  for (double rho : {1.8, -1.5, 1.05}) {
    const double sign = rho > 0 ? 1.0 : -1.0;
    for (cplx z : {cplx(0.4, 0.9), cplx(-2.5, 0.0), cplx(0.1, -0.6)}) {
      const auto k = curve.third_kind({z, Sheet::upper});
      const cplx wz = wmap(z), wr = wmap(cplx(rho, 0.0));
      const cplx expect = sign * (wr - wz) / (1.0 - wr * wz);
      CHECK(close(curve.blaschke_factor(k, rho), expect, 1e-10));
    }
  }
  // principal value configuration: pole between the anchor and rho
  {
    const double rho = 2.2, z = 1.7;
    const auto k = curve.third_kind({cplx(z, 0.0), Sheet::upper});
    const cplx wz = wmap(cplx(z, 0.0)), wr = wmap(cplx(rho, 0.0));
    const cplx expect = (wr - wz) / (1.0 - wr * wz);
    CHECK(expect.real() < 0.0);
    CHECK(close(curve.blaschke_factor(k, rho), expect, 1e-10));
  }
}

TEST_CASE("blaschke factor is unimodular for poles on the spectrum") {
  SpectralCurve curve(BandEdges({-2.0, -1.0, 1.0, 2.0}), 96);
  for (double lambda : {-1.7, -1.05, 1.3, 1.97}) {
    const auto k = curve.third_kind({cplx(lambda, 0.0), Sheet::upper});
    for (double rho : {0.5, -0.8, 2.4, -2.6}) {
      const cplx B = curve.blaschke_factor(k, rho);
      CHECK(std::fabs(std::abs(B) - 1.0) < 1e-8);
    }
  }
}

TEST_CASE("branch point collisions are rejected") {
  SpectralCurve curve(BandEdges({-2.0, -1.0, 1.0, 2.0}), 96);
  CHECK_THROWS_AS(curve.abel({cplx(-1.0, 1e-13), Sheet::upper}),
                  PathThroughBranchPoint);
  CHECK_THROWS_AS(curve.blaschke_anchor(1.5), RhoInSpectrum);
}
