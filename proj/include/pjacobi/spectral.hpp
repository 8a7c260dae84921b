#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "bands.hpp"
#include "measure.hpp"
#include "recurrence.hpp"

namespace pjacobi {

using CX = std::complex<double>;

/// sqrt(g_N^2(z) - 1) = 2^{N-1} prod_j (z - xi_j)^{1/2} with the principal
/// branch per factor. This fixes the sheet globally: the value is analytic off
/// the union of bands and behaves like g_N(z) at infinity. Taking sqrt of the
/// assembled polynomial value instead would be wrong across the cuts.
class BranchedSqrt {
 public:
  BranchedSqrt(std::vector<double> xi, int N)
      : xi_(std::move(xi)), lead_(std::ldexp(1.0, N - 1)) {}
  explicit BranchedSqrt(const BandStructure& bs)
      : BranchedSqrt(bs.xi, static_cast<int>(bs.xi.size()) / 2) {}

  CX operator()(CX z) const {
    CX prod = lead_;
    for (double x : xi_) prod *= std::sqrt(z - x);
    return prod;
  }

  const std::vector<double>& turning_points() const { return xi_; }

 private:
  std::vector<double> xi_;
  double lead_;
};

/// Truncated continued fraction phi = 2/(2z - a_0 - 1/(2z - a_1 - ...)),
/// evaluated bottom-up with tail 0. A near-zero denominator during the sweep
/// retries at depth+1 (forward Wallis recurrence would overflow instead).
inline CX phi_cf(const RecurrenceSpec<double>& s, CX z, int depth) {
  if (z.imag() == 0) throw std::domain_error("phi_cf: Im z must be nonzero");
  if (depth < 1) throw std::invalid_argument("phi_cf: depth must be >= 1");
  const std::size_t N = s.alpha.size();
  for (int attempt = 0; attempt < 8; ++attempt) {
    const int d = depth + attempt;
    bool bad = false;
    CX t = 0;
    for (int k = d - 1; k >= 1; --k) {
      const CX den = 2.0 * z - s.alpha[static_cast<std::size_t>(k) % N] - t;
      if (std::abs(den) < 1e-150) {
        bad = true;
        break;
      }
      t = 1.0 / den;
    }
    if (!bad) {
      const CX den = 2.0 * z - s.alpha[0] - t;
      if (std::abs(den) >= 1e-150) return 2.0 / den;
    }
  }
  throw std::runtime_error("phi_cf: persistent near-zero truncation denominators");
}

struct ResolventEntries {
  CX r00, r01, r11;
};

/// Density evaluators of the 2x2 spectral measure of the doubly infinite
/// Jacobi matrix, valid on band interiors.
class SpectralDensities {
 public:
  SpectralDensities(RecurrenceSpec<double> spec, BandStructure bands)
      : spec_(std::move(spec)), bands_(std::move(bands)) {}

  const BandStructure& bands() const { return bands_; }

  double d00(double x) const {
    const double psn = eval_P_star(spec_, spec_.N, x);
    return std::abs(psn) / (2 * std::numbers::pi * sin_theta(x));
  }
  double d01(double x) const { return (x - spec_.a) * d00(x); }
  double d11(double x) const {
    const double pn1 = eval_P(spec_, spec_.N - 1, x);
    return std::abs(pn1) / (std::numbers::pi * sin_theta(x));
  }

 private:
  RecurrenceSpec<double> spec_;
  BandStructure bands_;

  // sqrt(1 - g_N^2(x)), rejecting out-of-band x.
  double sin_theta(double x) const {
    if (!band_containing(bands_, x))
      throw std::domain_error("SpectralDensities: x outside band interiors");
    const double g = eval_g(spec_, x);
    const double s = 1 - g * g;
    if (!(s > 0)) throw std::domain_error("SpectralDensities: x at a band edge");
    return std::sqrt(s);
  }
};

/// Closed-form Stieltjes transform, resolvent entries and densities for one
/// recurrence spec; bands and the branched square root are computed once.
class SpectralModel {
 public:
  explicit SpectralModel(const RecurrenceSpec<double>& spec)
      : spec_(spec),
        bands_(turning_points(spec)),
        sqrt_(bands_),
        masses_(spec.N >= 2 ? masses(spec, zero_sets(spec)) : std::vector<MassPoint>{}) {}

  const RecurrenceSpec<double>& spec() const { return spec_; }
  const BandStructure& bands() const { return bands_; }
  const BranchedSqrt& branched_sqrt() const { return sqrt_; }
  const std::vector<MassPoint>& mass_points() const { return masses_; }

  /// phi(z) = 2 [P_N - g_N - sqrt(g_N^2 - 1)] / P_{N-1}. Near zeros of P_{N-1}
  /// the conjugate-rationalized form P*_N / (P_N - g_N + sqrt(g_N^2 - 1))
  /// avoids the 0/0; a massive pole y_k on the real axis is rejected.
  CX phi_closed(CX z) const {
    if (z.imag() == 0)
      for (const auto& mp : masses_)
        if (mp.m > 0 && z.real() == mp.y)
          throw std::domain_error("phi_closed: z at a mass point pole");
    const CX pn = eval_P(spec_, spec_.N, z);
    const CX psn1 = eval_P_star(spec_, spec_.N - 1, z);
    const CX pn1 = eval_P(spec_, spec_.N - 1, z);
    const CX g = (pn - psn1 / 2.0) / 2.0;
    const CX sq = sqrt_(z);
    if (std::abs(pn1) < 1e-8) {
      const CX psn = eval_P_star(spec_, spec_.N, z);
      return psn / (pn - g + sq);
    }
    return 2.0 * (pn - g - sq) / pn1;
  }

  CX phi_cf(CX z, int depth) const { return pjacobi::phi_cf(spec_, z, depth); }

  /// Relative residual of the quadratic satisfied by phi: the explicit
  /// quadratic for N <= 2, the one-period fixed-point map for general N.
  CX quadratic_residual(CX z) const {
    if (z.imag() == 0) throw std::domain_error("quadratic_residual: Im z must be nonzero");
    const CX phi = phi_closed(z);
    const double a = spec_.a;
    if (spec_.N == 1) {
      const CX r = phi * phi - 4.0 * (z - a) * phi + 4.0;
      const double scale = std::max({std::abs(phi * phi), std::abs(4.0 * (z - a) * phi), 4.0});
      return r / scale;
    }
    if (spec_.N == 2) {
      const CX r = (z - a) * phi * phi - 4.0 * (z * z - a * a) * phi + 4.0 * (z + a);
      const double scale = std::max({std::abs((z - a) * phi * phi),
                                     std::abs(4.0 * (z * z - a * a) * phi),
                                     std::abs(4.0 * (z + a))});
      return r / scale;
    }
    CX t = phi / 2.0;
    for (int k = spec_.N - 1; k >= 1; --k)
      t = 1.0 / (2.0 * z - spec_.alpha[static_cast<std::size_t>(k)] - t);
    const CX mapped = 2.0 / (2.0 * z - spec_.alpha[0] - t);
    return (mapped - phi) / std::max(1.0, std::abs(phi));
  }

  /// Resolvent entries of the doubly infinite Jacobi matrix from phi, verified
  /// on the fly against the simplified P*_N / P_{N-1} forms.
  ResolventEntries resolvent_entries(CX z) const {
    if (z.imag() == 0) throw std::domain_error("resolvent_entries: Im z must be nonzero");
    const CX phi = phi_closed(z);
    const CX u = (z - spec_.a) * phi;
    const CX den = 2.0 - u;
    ResolventEntries r{phi / den, -2.0 * (1.0 - u) / den, -4.0 / phi * (1.0 - u) / den};

    const CX sq = sqrt_(z);
    const CX psn = eval_P_star(spec_, spec_.N, z);
    const CX pn1 = eval_P(spec_, spec_.N - 1, z);
    const CX s00 = psn / (2.0 * sq);
    const CX s01 = (z - spec_.a) * psn / (2.0 * sq) - 1.0;
    const CX s11 = pn1 / sq;
    const auto close = [](CX p, CX q) { return std::abs(p - q) <= 1e-9 * std::max(1.0, std::abs(p)); };
    if (!close(r.r00, s00) || !close(r.r01, s01) || !close(r.r11, s11))
      throw std::logic_error("resolvent_entries: simplified-form cross-check failed");
    return r;
  }

  SpectralDensities densities() const { return {spec_, bands_}; }

 private:
  RecurrenceSpec<double> spec_;
  BandStructure bands_;
  BranchedSqrt sqrt_;
  std::vector<MassPoint> masses_;
};

/// Center resolvent entries of the (2M+1)-point truncation of the doubly
/// infinite matrix, by complex tridiagonal elimination. With Im z != 0 every
/// pivot keeps |Im| >= |Im z|, so the sweep needs no pivoting. Serves as the
/// operator-side oracle for the closed forms.
inline ResolventEntries truncated_resolvent_center(const RecurrenceSpec<double>& spec, CX z, int M) {
  if (z.imag() == 0) throw std::domain_error("truncated_resolvent_center: Im z must be nonzero");
  const int n = 2 * M + 1;
  const std::size_t N = spec.alpha.size();
  const auto diag_at = [&](int i) {
    const int j = i - M;
    const int jm = ((j % static_cast<int>(N)) + static_cast<int>(N)) % static_cast<int>(N);
    return z - spec.alpha[static_cast<std::size_t>(jm)] / 2;
  };
  // Forward elimination of (zI - A), off-diagonals -1/2, two right-hand sides.
  std::vector<CX> d(static_cast<std::size_t>(n));
  std::vector<CX> r0(static_cast<std::size_t>(n), 0.0), r1(r0);
  r0[static_cast<std::size_t>(M)] = 1.0;
  r1[static_cast<std::size_t>(M + 1)] = 1.0;
  d[0] = diag_at(0);
  for (int i = 1; i < n; ++i) {
    const CX w = -0.5 / d[static_cast<std::size_t>(i - 1)];
    d[static_cast<std::size_t>(i)] = diag_at(i) + 0.5 * w;
    r0[static_cast<std::size_t>(i)] -= w * r0[static_cast<std::size_t>(i - 1)];
    r1[static_cast<std::size_t>(i)] -= w * r1[static_cast<std::size_t>(i - 1)];
  }
  std::vector<CX> u0(static_cast<std::size_t>(n)), u1(u0);
  u0[static_cast<std::size_t>(n - 1)] = r0[static_cast<std::size_t>(n - 1)] / d[static_cast<std::size_t>(n - 1)];
  u1[static_cast<std::size_t>(n - 1)] = r1[static_cast<std::size_t>(n - 1)] / d[static_cast<std::size_t>(n - 1)];
  for (int i = n - 2; i >= 0; --i) {
    u0[static_cast<std::size_t>(i)] =
        (r0[static_cast<std::size_t>(i)] + 0.5 * u0[static_cast<std::size_t>(i + 1)]) / d[static_cast<std::size_t>(i)];
    u1[static_cast<std::size_t>(i)] =
        (r1[static_cast<std::size_t>(i)] + 0.5 * u1[static_cast<std::size_t>(i + 1)]) / d[static_cast<std::size_t>(i)];
  }
  return {u0[static_cast<std::size_t>(M)], u0[static_cast<std::size_t>(M + 1)],
          u1[static_cast<std::size_t>(M + 1)]};
}

/// Boundary-jump extraction (S(x - i eps) - S(x + i eps)) / (2 pi i) over the
/// ladder eps = 1e-4, 1e-5, 1e-6, Richardson-extrapolated in eps (orders 1
/// then 2). Throws if the refinement is not contracting.
template <class SFn>
double plemelj_extract(SFn&& S, double x, const std::array<double, 3>& eps = {1e-4, 1e-5, 1e-6}) {
  std::array<double, 3> v{};
  for (std::size_t i = 0; i < 3; ++i) {
    const CX up = S(CX(x, eps[i]));
    const CX dn = S(CX(x, -eps[i]));
    v[i] = ((dn - up) / (2.0 * std::numbers::pi * CX(0, 1))).real();
  }
  const double d1 = std::abs(v[1] - v[0]);
  const double d2 = std::abs(v[2] - v[1]);
  if (d2 > 1.5 * d1 + 1e-14)
    throw std::runtime_error("plemelj_extract: ladder not contracting (x too close to a band edge?)");
  const double w1 = (10 * v[1] - v[0]) / 9;
  const double w2 = (10 * v[2] - v[1]) / 9;
  return (100 * w2 - w1) / 99;
}

}  // namespace pjacobi
