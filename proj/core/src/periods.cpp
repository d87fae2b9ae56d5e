#include "jscat/periods.hpp"

#include <cmath>

#include "jscat/errors.hpp"

namespace jscat {

PeriodData compute_periods(const PathEngine& paths) {
  const int g = paths.genus();
  PeriodData pd;
  pd.C.resize(g, g);
  pd.c.resize(g, g);
  pd.tau.resize(g, g);
  if (g == 0) return pd;

  // a-periods: twice the upper-rim gap integrals, real by construction
  for (int k = 0; k < g; ++k) {
    const int s = 2 * k + 1;
    for (int m = 0; m < g; ++m) {
      const cplx v = 2.0 * paths.segment_full(s, m);
      if (std::fabs(v.imag()) > 1e-10 * (1.0 + std::fabs(v.real())))
        throw SingularQuadrature("a-period of x^" + std::to_string(m) +
                                 " on gap " + std::to_string(k + 1) +
                                 " has nonreal value");
      pd.C(m, k) = v.real();
    }
  }

  Eigen::FullPivLU<Eigen::MatrixXd> lu(pd.C);
  if (!lu.isInvertible())
    throw SingularQuadrature("a-period matrix is singular");
  pd.c = lu.inverse();
  const double unit_err =
      (pd.c * pd.C - Eigen::MatrixXd::Identity(g, g)).cwiseAbs().maxCoeff();
  if (unit_err > 1e-12)
    throw SingularQuadrature("a-period normalization residual " +
                             std::to_string(unit_err));

  // b-periods with the cycles collapsed onto the spectrum: b_{j} picks up
  // twice the upper-rim band integrals of zeta_k over bands 0..j
  Eigen::MatrixXcd raw(g, g);
  for (int jb = 0; jb < g; ++jb) {
    for (int k = 0; k < g; ++k) {
      cplx acc = 0.0;
      for (int i = 0; i <= jb; ++i)
        for (int m = 0; m < g; ++m)
          acc += pd.c(k, m) * paths.segment_full(2 * i, m);
      raw(jb, k) = 2.0 * acc;
    }
  }

  const double scale = std::max(1.0, raw.cwiseAbs().maxCoeff());
  const double sym_err = (raw - raw.transpose()).cwiseAbs().maxCoeff();
  if (sym_err > 1e-9 * scale)
    throw SingularQuadrature("b-period matrix asymmetry " +
                             std::to_string(sym_err));
  raw = ((raw + raw.transpose()) / 2.0).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(raw.imag());
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (lo > 0.0)
    pd.sign_b = 1.0;
  else if (hi < 0.0)
    pd.sign_b = -1.0;
  else
    throw SingularQuadrature("b-period imaginary part is indefinite");
  pd.tau = pd.sign_b * raw;
  return pd;
}

}  // namespace jscat
