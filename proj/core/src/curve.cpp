#include "jscat/curve.hpp"

#include <cmath>
#include <utility>

namespace jscat {

BandEdges::BandEdges(std::vector<double> edges) : E(std::move(edges)) {
  if (E.size() < 2 || E.size() % 2 != 0)
    throw InvalidConfig("band edges must come in pairs, got " + std::to_string(E.size()));
  for (std::size_t i = 0; i + 1 < E.size(); ++i)
    if (!(E[i] < E[i + 1]))
      throw InvalidConfig("band edges must be strictly increasing");
  for (double v : E)
    if (!std::isfinite(v)) throw InvalidConfig("band edges must be finite");
}

int BandEdges::band_of(double x) const {
  for (int j = 0; j <= genus(); ++j)
    if (x >= band_lo(j) && x <= band_hi(j)) return j;
  return -1;
}

int BandEdges::gap_of(double x) const {
  for (int k = 1; k <= genus(); ++k)
    if (x > gap_lo(k) && x < gap_hi(k)) return k;
  return 0;
}

cplx sheet_root(const BandEdges& e, cplx z) {
  cplx p(1.0, 0.0);
  for (double Ej : e.E) p *= std::sqrt(z - Ej);
  return -p;
}

cplx r_poly(const BandEdges& e, cplx z) {
  cplx p(1.0, 0.0);
  for (double Ej : e.E) p *= z - Ej;
  return p;
}

double sqrt_abs_r_excluding(const BandEdges& e, double x, int skip1, int skip2) {
  double p = 1.0;
  for (int l = 0; l < static_cast<int>(e.E.size()); ++l) {
    if (l == skip1 || l == skip2) continue;
    p *= std::fabs(x - e.E[l]);
  }
  return std::sqrt(p);
}

}  // namespace jscat
