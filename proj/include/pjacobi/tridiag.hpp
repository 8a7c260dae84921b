#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace pjacobi {

/// Number of eigenvalues of the symmetric tridiagonal matrix strictly below
/// sigma, by the sign count of the LDL^T pivots (Sturm sequence).
inline int sturm_count(std::span<const double> diag, std::span<const double> off, double sigma) {
  int count = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const double off2 = i ? off[i - 1] * off[i - 1] : 0.0;
    d = diag[i] - sigma - off2 / d;
    if (d == 0.0) d = -std::numeric_limits<double>::denorm_min();
    if (d < 0) ++count;
  }
  return count;
}

/// All eigenvalues of the symmetric tridiagonal matrix (diag, off), sorted
/// ascending, each located by Sturm-count bisection to ~1e-13 times the
/// spectral radius. Deterministic and order-guaranteed by construction.
inline std::vector<double> tridiag_eigs(std::span<const double> diag, std::span<const double> off) {
  const std::size_t n = diag.size();
  if (n == 0) throw std::invalid_argument("tridiag_eigs: empty diagonal");
  if (off.size() + 1 != n) throw std::invalid_argument("tridiag_eigs: off-diagonal length must be n-1");
  // Gershgorin enclosure.
  double lo = diag[0], hi = diag[0];
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i ? std::abs(off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(off[i]) : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  const double radius = std::max({std::abs(lo), std::abs(hi), 1e-300});
  const double tol = 1e-13 * radius;
  std::vector<double> eigs(n);
  for (std::size_t k = 0; k < n; ++k) {
    double a = lo, b = hi;
    for (int it = 0; it < 200 && b - a > tol; ++it) {
      const double mid = a + (b - a) / 2;
      if (sturm_count(diag, off, mid) <= static_cast<int>(k))
        a = mid;
      else
        b = mid;
    }
    eigs[k] = a + (b - a) / 2;
  }
  return eigs;
}

}  // namespace pjacobi
