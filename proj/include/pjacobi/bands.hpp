#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "recurrence.hpp"
#include "tridiag.hpp"

namespace pjacobi {

/// Zeros of P_N (x), P_{N-1} (y) and P*_N (z), each sorted ascending.
struct ZeroSets {
  std::vector<double> x;  // N entries
  std::vector<double> y;  // N-1 entries (empty for N = 1)
  std::vector<double> z;  // N-1 entries (empty for N = 1)
};

/// Turning points and the bands they bound.
struct BandStructure {
  std::vector<double> xi;                        // 2N sorted values, double roots listed twice
  std::vector<std::pair<double, double>> bands;  // N intervals (xi_{2k-1}, xi_{2k})
  std::vector<int> double_roots;                 // 1-based k with xi_{2k} == xi_{2k+1}
  double b = 0;                                  // all xi lie in [-b, b]
};

/// Zero-localization bound b from the diagonal-dominance argument.
inline double band_bound(double a) {
  const double aa = std::abs(a);
  return aa >= 1 ? 1 + aa : 2;
}

namespace detail {

/// Two Newton polish steps on (value, derivative).
template <class F>
double newton_polish(F&& fdf, double x, int steps = 2) {
  for (int i = 0; i < steps; ++i) {
    const auto [f, df] = fdf(x);
    if (df == 0) break;
    x -= f / df;
  }
  return x;
}

/// Bracketed bisection to 1e-13 absolute; requires a strict sign change.
template <class F>
double bisect(F&& f, double lo, double hi, const char* what) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if (std::signbit(flo) == std::signbit(fhi))
    throw std::logic_error(std::string("bisect: no sign change for ") + what);
  while (hi - lo > 1e-13) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

}  // namespace detail

/// Zeros via the symmetric tridiagonal eigenproblems: x = eigs(T)/2,
/// y = eigs(T+)/2, z = eigs(T-)/2, Newton-polished on the defining
/// polynomial and verified by residual against the local derivative scale.
inline ZeroSets zero_sets(const RecurrenceSpec<double>& spec) {
  const int N = spec.N;
  ZeroSets out;

  struct Family {
    std::vector<double> diag;
    std::function<std::pair<double, double>(double)> fdf;
    std::vector<double>* dst;
  };
  const auto p_fdf = [&spec](int n) {
    return [&spec, n](double x) {
      return eval_recurrence_deriv<double, double>(spec.alpha, 0.0, 1.0, n, x);
    };
  };
  const auto ps_fdf = [&spec](int n) {
    return [&spec, n](double x) {
      return eval_recurrence_deriv<double, double>(spec.alpha, -2.0, 0.0, n, x);
    };
  };

  std::vector<Family> families;
  families.push_back({spec.alpha, p_fdf(N), &out.x});
  if (N >= 2) {
    std::vector<double> dplus(spec.alpha.begin(), spec.alpha.end() - 1);   // T+: alpha_0..alpha_{N-2}
    std::vector<double> dminus(spec.alpha.begin() + 1, spec.alpha.end());  // T-: alpha_1..alpha_{N-1}
    families.push_back({std::move(dplus), p_fdf(N - 1), &out.y});
    families.push_back({std::move(dminus), ps_fdf(N), &out.z});
  }

  for (auto& fam : families) {
    const std::vector<double> offs(fam.diag.size() - 1, 1.0);
    auto eigs = tridiag_eigs(fam.diag, offs);
    for (auto& e : eigs) {
      double root = detail::newton_polish(fam.fdf, e / 2);
      const auto [val, der] = fam.fdf(root);
      if (std::abs(val) > 1e-8 * std::max(1.0, std::abs(der)))
        throw std::logic_error("zero_sets: eigenvalue/polynomial residual check failed");
      fam.dst->push_back(root);
    }
    std::sort(fam.dst->begin(), fam.dst->end());
  }
  return out;
}

/// Turning points: the 2N roots of g_N^2 = 1 located by the Theorem 5.3 sign
/// pattern. On each window around a zero y_k of P_{N-1}, the equation
/// g_N = (-1)^{N-k} has two roots; a tangency within `delta` of the extremal
/// value is flagged as a double root placed at the extremum.
inline BandStructure turning_points(const RecurrenceSpec<double>& spec, double delta = 1e-10) {
  const int N = spec.N;
  const double b = band_bound(spec.a);

  if (spec.a == 0) {
    // Chebyshev case: all interior turning points are tangencies and the
    // bands tile [-1, 1].
    BandStructure bs;
    bs.b = b;
    std::vector<double> t(static_cast<std::size_t>(N) + 1);
    for (int j = 0; j <= N; ++j) t[static_cast<std::size_t>(j)] = -std::cos(std::numbers::pi * j / N);
    t.front() = -1;
    t.back() = 1;
    for (int k = 1; k <= N; ++k) {
      bs.xi.push_back(t[static_cast<std::size_t>(k - 1)]);
      bs.xi.push_back(t[static_cast<std::size_t>(k)]);
      bs.bands.emplace_back(t[static_cast<std::size_t>(k - 1)], t[static_cast<std::size_t>(k)]);
      if (k < N) bs.double_roots.push_back(k);
    }
    return bs;
  }

  if (spec.a < 0) {
    // Mirror map (a, x) -> (-a, -x).
    const BandStructure pos = turning_points(make_spec(-spec.a, N), delta);
    BandStructure bs;
    bs.b = pos.b;
    bs.xi.assign(pos.xi.rbegin(), pos.xi.rend());
    for (auto& v : bs.xi) v = -v;
    for (auto it = pos.bands.rbegin(); it != pos.bands.rend(); ++it)
      bs.bands.emplace_back(-it->second, -it->first);
    for (int k : pos.double_roots) bs.double_roots.push_back(N - k);
    std::sort(bs.double_roots.begin(), bs.double_roots.end());
    return bs;
  }

  if (N == 1) {
    // Case I: single band [a-1, a+1]; the general bracketing needs N >= 2.
    BandStructure bs;
    bs.b = b;
    bs.xi = {spec.a - 1, spec.a + 1};
    bs.bands.emplace_back(spec.a - 1, spec.a + 1);
    return bs;
  }

  const Discriminant disc = discriminant(spec);
  const PolyD g2 = disc.gN_prime.derivative();
  const auto g = [&](double x) { return disc.gN(x); };
  const auto gp = [&](double x) { return disc.gN_prime(x); };

  const ZeroSets zs = zero_sets(spec);
  std::vector<double> ys;
  ys.push_back(-b);
  ys.insert(ys.end(), zs.y.begin(), zs.y.end());
  ys.push_back(b);

  BandStructure bs;
  bs.b = b;
  std::vector<double>& xi = bs.xi;

  // Group k = 0: single root of g = (-1)^N in (-b, y_1).
  {
    const double s0 = (N % 2 == 0) ? 1.0 : -1.0;
    const auto h = [&](double x) { return s0 * g(x) - 1; };
    double r = detail::bisect(h, ys[0], ys[1], "xi_1");
    r = detail::newton_polish([&](double x) { return std::pair{s0 * g(x) - 1, s0 * gp(x)}; }, r);
    xi.push_back(r);
  }

  for (int k = 1; k <= N - 1; ++k) {
    const double s = ((N - k) % 2 == 0) ? 1.0 : -1.0;
    const double wlo = ys[static_cast<std::size_t>(k - 1)];
    const double yk = ys[static_cast<std::size_t>(k)];
    const double whi = ys[static_cast<std::size_t>(k + 1)];
    // g changes sign across y_k within the window; bracket its zeros, then
    // locate the unique critical point between them.
    const double eta_lo = detail::bisect(g, wlo, yk, "eta_lo");
    const double eta_hi = detail::bisect(g, yk, whi, "eta_hi");
    double xstar = detail::bisect(gp, eta_lo, eta_hi, "extremum");
    xstar = detail::newton_polish([&](double x) { return std::pair{gp(x), g2(x)}; }, xstar);
    const double hmax = s * g(xstar) - 1;
    if (hmax > delta) {
      const auto h = [&](double x) { return s * g(x) - 1; };
      const auto hdf = [&](double x) { return std::pair{s * g(x) - 1, s * gp(x)}; };
      double r1 = detail::newton_polish(hdf, detail::bisect(h, eta_lo, xstar, "xi pair lo"));
      double r2 = detail::newton_polish(hdf, detail::bisect(h, xstar, eta_hi, "xi pair hi"));
      xi.push_back(r1);
      xi.push_back(r2);
    } else if (hmax >= -delta) {
      xi.push_back(xstar);
      xi.push_back(xstar);
      bs.double_roots.push_back(k);
    } else {
      throw std::logic_error("turning_points: window extremum below 1 - fewer than 2N roots");
    }
  }

  // Group k = N: single root of g = 1 in (y_{N-1}, b).
  {
    const auto h = [&](double x) { return g(x) - 1; };
    double r = detail::bisect(h, ys[static_cast<std::size_t>(N - 1)], ys[static_cast<std::size_t>(N)], "xi_2N");
    r = detail::newton_polish([&](double x) { return std::pair{g(x) - 1, gp(x)}; }, r);
    xi.push_back(r);
  }

  if (static_cast<int>(xi.size()) != 2 * N)
    throw std::logic_error("turning_points: expected 2N turning points");
  if (!std::is_sorted(xi.begin(), xi.end()))
    throw std::logic_error("turning_points: turning points out of order");
  for (int k = 1; k <= N; ++k)
    bs.bands.emplace_back(xi[static_cast<std::size_t>(2 * k - 2)], xi[static_cast<std::size_t>(2 * k - 1)]);
  return bs;
}

/// Index of the band whose open interior contains x, or nullopt.
inline std::optional<int> band_containing(const BandStructure& bs, double x) {
  for (std::size_t k = 0; k < bs.bands.size(); ++k)
    if (x > bs.bands[k].first && x < bs.bands[k].second) return static_cast<int>(k);
  return std::nullopt;
}

/// Maximal support intervals: adjacent bands joined across double roots.
inline std::vector<std::pair<double, double>> merged_support(const BandStructure& bs) {
  std::vector<std::pair<double, double>> out;
  for (std::size_t k = 0; k < bs.bands.size(); ++k) {
    const bool joined = k > 0 && std::find(bs.double_roots.begin(), bs.double_roots.end(),
                                           static_cast<int>(k)) != bs.double_roots.end();
    if (joined)
      out.back().second = bs.bands[k].second;
    else
      out.push_back(bs.bands[k]);
  }
  return out;
}

struct ConjectureReport {
  bool common_eigenvalue_found = false;
  std::optional<double> value;
  double min_gap = std::numeric_limits<double>::infinity();
};

/// Minimal distance between the spectra of T+ and T-; a gap below 1e-10 is
/// reported as a common eigenvalue (evidence only, never asserted as theorem).
inline ConjectureReport conjecture_scan(const RecurrenceSpec<double>& spec) {
  if (!(spec.a > 0)) throw std::domain_error("conjecture_scan: requires a > 0");
  ConjectureReport rep;
  if (spec.N < 2) return rep;
  const std::vector<double> dplus(spec.alpha.begin(), spec.alpha.end() - 1);
  const std::vector<double> dminus(spec.alpha.begin() + 1, spec.alpha.end());
  const std::vector<double> offs(dplus.size() - 1, 1.0);
  const auto ep = tridiag_eigs(dplus, offs);
  const auto em = tridiag_eigs(dminus, offs);
  for (double lp : ep)
    for (double lm : em) {
      const double gap = std::abs(lp - lm);
      if (gap < rep.min_gap) {
        rep.min_gap = gap;
        rep.value = (lp + lm) / 2;
      }
    }
  rep.common_eigenvalue_found = rep.min_gap < 1e-10;
  if (!rep.common_eigenvalue_found) rep.value.reset();
  return rep;
}

}  // namespace pjacobi
