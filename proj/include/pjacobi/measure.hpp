#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "bands.hpp"
#include "quadrature.hpp"
#include "recurrence.hpp"

namespace pjacobi {

struct MassPoint {
  double y = 0;  // zero of P_{N-1}
  double m = 0;  // discrete mass, >= 0
};

/// Discrete masses m_k = 4 sqrt|g_N^2(y_k) - 1| / |P'_{N-1}(y_k)| when
/// |P_N(y_k)| < 1, else 0. The boundary |P_N| = 1 (where the square root
/// vanishes and both branches agree) maps to 0 below a 1e-12 margin.
inline std::vector<MassPoint> masses(const RecurrenceSpec<double>& spec, const ZeroSets& zs) {
  std::vector<MassPoint> out;
  for (double y : zs.y) {
    const double pn = eval_P(spec, spec.N, y);
    if (std::abs(pn) >= 1 - 1e-12) {
      out.push_back({y, 0.0});
      continue;
    }
    const double g = eval_g(spec, y);
    const double dp = eval_P_deriv(spec, spec.N - 1, y);
    out.push_back({y, 4 * std::sqrt(std::abs(g * g - 1)) / std::abs(dp)});
  }
  return out;
}

/// Continuous weight w(x) = 2 sqrt|1 - g_N^2(x)| / (pi |P_{N-1}(x)|) on band
/// interiors. At a flagged double turning point the removable singularity is
/// evaluated as the average of one-sided values at x -+ 1e-7.
inline double weight(const RecurrenceSpec<double>& spec, const BandStructure& bs, double x) {
  const auto value = [&](double t) {
    const double g = eval_g(spec, t);
    const double p = eval_P(spec, spec.N - 1, t);
    return 2 * std::sqrt(std::abs(1 - g * g)) / (std::numbers::pi * std::abs(p));
  };
  if (band_containing(bs, x)) return value(x);
  for (int k : bs.double_roots) {
    const double xi = bs.bands[static_cast<std::size_t>(k - 1)].second;
    if (std::abs(x - xi) <= 1e-12 * std::max(1.0, std::abs(xi)))
      return (value(xi - 1e-7) + value(xi + 1e-7)) / 2;
  }
  throw std::domain_error("weight: x outside all bands");
}

/// Moment oracle: integral of x^k d(mu) equals the (0,0) entry of J^k for the
/// semi-infinite Jacobi matrix J = tridiag(1/2, alpha_j/2, 1/2); a size k+2
/// truncation is exact because k applications reach at most index k.
inline double jacobi_moment(const RecurrenceSpec<double>& spec, int k) {
  if (k < 0) throw std::invalid_argument("jacobi_moment: k must be >= 0");
  const int n = k + 2;
  std::vector<double> v(static_cast<std::size_t>(n), 0.0), w(v);
  v[0] = 1.0;
  const std::size_t N = spec.alpha.size();
  for (int step = 0; step < k; ++step) {
    for (int i = 0; i < n; ++i) {
      double s = spec.alpha[static_cast<std::size_t>(i) % N] / 2 * v[static_cast<std::size_t>(i)];
      if (i > 0) s += v[static_cast<std::size_t>(i - 1)] / 2;
      if (i + 1 < n) s += v[static_cast<std::size_t>(i + 1)] / 2;
      w[static_cast<std::size_t>(i)] = s;
    }
    std::swap(v, w);
  }
  return v[0];
}

/// The orthogonality measure d(mu) = w(x) dx + sum m_k delta_{y_k}: bands,
/// weight evaluator, mass points, and integrals against the measure.
class OrthogonalityMeasure {
 public:
  explicit OrthogonalityMeasure(const RecurrenceSpec<double>& spec)
      : spec_(spec),
        disc_(discriminant(spec)),
        zeros_(zero_sets(spec)),
        bands_(turning_points(spec)),
        masses_(pjacobi::masses(spec, zeros_)) {}

  const RecurrenceSpec<double>& spec() const { return spec_; }
  const BandStructure& bands() const { return bands_; }
  const ZeroSets& zeros() const { return zeros_; }
  const std::vector<MassPoint>& mass_points() const { return masses_; }

  double weight(double x) const { return pjacobi::weight(spec_, bands_, x); }

  /// Total integral of the measure; equals 1 (Stieltjes normalization).
  double total_mass(const QuadratureOptions& opts = {}) const {
    double total = 0;
    for (const auto& [lo, hi] : bands_.bands)
      total += integrate_band([this](double x) { return weight_fast(x); }, lo, hi, opts).value;
    for (const auto& mp : masses_) total += mp.m;
    return total;
  }

  /// Gram matrix G[m][n] = integral of P_m P_n d(mu), m, n <= max_deg.
  /// Dropping the mass points (include_masses = false) is the negative
  /// control: it must break orthogonality whenever some m_k > 0.
  std::vector<std::vector<double>> gram(int max_deg, bool include_masses = true,
                                        const QuadratureOptions& opts = {}) const {
    if (max_deg < 0 || max_deg > 24)
      throw std::invalid_argument("gram: max_deg must be in [0, 24] (growth control)");
    const std::size_t d = static_cast<std::size_t>(max_deg) + 1;
    const std::size_t dim = d * (d + 1) / 2;
    std::vector<double> acc(dim, 0.0), part(dim, 0.0);
    std::vector<double> pv(d, 0.0);
    for (const auto& [lo, hi] : bands_.bands) {
      integrate_band_vec(
          [&](double x, std::span<double> out) {
            eval_family(x, pv);
            const double w = weight_fast(x);
            std::size_t idx = 0;
            for (std::size_t m = 0; m < d; ++m)
              for (std::size_t n = m; n < d; ++n) out[idx++] = w * pv[m] * pv[n];
          },
          lo, hi, dim, part, opts);
      for (std::size_t i = 0; i < dim; ++i) acc[i] += part[i];
    }
    if (include_masses) {
      for (const auto& mp : masses_) {
        if (mp.m == 0) continue;
        eval_family(mp.y, pv);
        std::size_t idx = 0;
        for (std::size_t m = 0; m < d; ++m)
          for (std::size_t n = m; n < d; ++n) acc[idx++] += mp.m * pv[m] * pv[n];
      }
    }
    std::vector<std::vector<double>> G(d, std::vector<double>(d, 0.0));
    std::size_t idx = 0;
    for (std::size_t m = 0; m < d; ++m)
      for (std::size_t n = m; n < d; ++n) {
        G[m][n] = acc[idx];
        G[n][m] = acc[idx];
        ++idx;
      }
    return G;
  }

  /// Numerical Stieltjes transform: integral of d(mu)(x) / (z - x), Im z != 0.
  std::complex<double> stieltjes(std::complex<double> z, const QuadratureOptions& opts = {}) const {
    if (z.imag() == 0) throw std::domain_error("stieltjes: Im z must be nonzero");
    std::complex<double> total = 0;
    double part[2];
    for (const auto& [lo, hi] : bands_.bands) {
      integrate_band_vec(
          [&](double x, std::span<double> out) {
            const std::complex<double> u = weight_fast(x) / (z - x);
            out[0] = u.real();
            out[1] = u.imag();
          },
          lo, hi, 2, std::span<double>(part, 2), opts);
      total += std::complex<double>(part[0], part[1]);
    }
    for (const auto& mp : masses_) total += mp.m / (z - mp.y);
    return total;
  }

 private:
  RecurrenceSpec<double> spec_;
  Discriminant disc_;
  ZeroSets zeros_;
  BandStructure bands_;
  std::vector<MassPoint> masses_;

  // Weight via the precomputed discriminant polynomial (Horner) instead of the
  // forward recurrence; identical values within roundoff, cheaper per node.
  double weight_fast(double x) const {
    const double g = disc_.gN(x);
    const double p = eval_P(spec_, spec_.N - 1, x);
    return 2 * std::sqrt(std::abs(1 - g * g)) / (std::numbers::pi * std::abs(p));
  }

  void eval_family(double x, std::vector<double>& pv) const {
    const std::size_t N = spec_.alpha.size();
    double prev = 0, cur = 1;
    for (std::size_t n = 0; n < pv.size(); ++n) {
      pv[n] = cur;
      const double next = (2 * x - spec_.alpha[n % N]) * cur - prev;
      prev = cur;
      cur = next;
    }
  }
};

/// Free-function form of the total-mass operation.
inline double total_mass(const RecurrenceSpec<double>& spec, const QuadratureOptions& opts = {}) {
  return OrthogonalityMeasure(spec).total_mass(opts);
}

}  // namespace pjacobi
