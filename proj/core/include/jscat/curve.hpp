#pragma once

#include <complex>
#include <vector>

#include "jscat/errors.hpp"

namespace jscat {

using cplx = std::complex<double>;

enum class Sheet : int { upper = +1, lower = -1 };

// Branch points E_0 < E_1 < ... < E_{2g+1}, in pairs: band j = [E_{2j}, E_{2j+1}]
// for j = 0..g, gap k = (E_{2k-1}, E_{2k}) for k = 1..g.  genus() == g.
struct BandEdges {
  std::vector<double> E;

  explicit BandEdges(std::vector<double> edges);

  int genus() const { return static_cast<int>(E.size()) / 2 - 1; }
  int num_bands() const { return genus() + 1; }
  double band_lo(int j) const { return E[2 * j]; }
  double band_hi(int j) const { return E[2 * j + 1]; }
  double gap_lo(int k) const { return E[2 * k - 1]; }  // k in 1..g
  double gap_hi(int k) const { return E[2 * k]; }
  double span() const { return E.back() - E.front(); }

  // index of the closed band containing x, or -1
  int band_of(double x) const;
  // index in 1..g of the open gap containing x, or 0
  int gap_of(double x) const;
  bool in_spectrum(double x) const { return band_of(x) >= 0; }
};

struct SurfacePoint {
  cplx z;
  Sheet sheet = Sheet::upper;
};

inline SurfacePoint conjugate_point(const SurfacePoint& p) {
  return {p.z, p.sheet == Sheet::upper ? Sheet::lower : Sheet::upper};
}

// sqrt of prod_j (z - E_j) on the upper sheet: minus the product of principal
// square roots of the factors.  Single valued and continuous off the bands.
// Real z is treated as the upper rim limit z + i0 (std complex +0.0 imag).
cplx sheet_root(const BandEdges& e, cplx z);

inline cplx r_sqrt(const BandEdges& e, const SurfacePoint& p) {
  cplx v = sheet_root(e, p.z);
  return p.sheet == Sheet::upper ? v : -v;
}

// prod_j (z - E_j)
cplx r_poly(const BandEdges& e, cplx z);

// sqrt(prod over all edges except indices skip1, skip2 of |x - E_l|);
// pass -1 to skip nothing.
double sqrt_abs_r_excluding(const BandEdges& e, double x, int skip1, int skip2);

}  // namespace jscat
