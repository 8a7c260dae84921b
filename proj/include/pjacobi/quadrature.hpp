#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pjacobi {

/// Quadrature failed to converge (CLI exit code 3 semantics).
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadratureOptions {
  double abs_tol = 1e-11;   // per-band convergence target on level differences
  double fail_tol = 1e-9;   // above this at the last level -> QuadratureError
  int max_level = 12;
  double t_max = 4.0;       // covers endpoint distances down to ~5e-38
};

struct QuadratureResult {
  double value = 0;
  double err_estimate = 0;
  int level = 0;
  bool converged = false;
};

namespace detail {

struct TanhSinhNode {
  double x;       // abscissa in (lo, hi)
  double weight;  // jacobian weight (includes neither h nor the half-width)
};

/// Node at parameter t for the interval (lo, hi); invalid (weight 0) when the
/// abscissa rounds onto an endpoint (its true contribution is below 1e-17 for
/// integrable endpoint singularities at t_max = 4).
inline TanhSinhNode tanh_sinh_node(double t, double lo, double hi) {
  const double half = (hi - lo) / 2;
  const double mid = lo + half;
  const double w = std::numbers::pi / 2 * std::sinh(t);
  const double u = std::tanh(w);
  const double jac = std::numbers::pi / 2 * std::cosh(t) / std::pow(std::cosh(w), 2);
  const double x = mid + half * u;
  if (x <= lo || x >= hi) return {0, 0};
  return {x, half * jac};
}

}  // namespace detail

/// Double-exponential (tanh-sinh) quadrature of a vector integrand over the
/// open interval (lo, hi). f(x, out) fills `dim` values; inverse-square-root
/// endpoint singularities are handled by construction. Levels are doubled
/// until successive estimates agree to abs_tol in every component; exceeding
/// fail_tol at the final level raises QuadratureError. Summation order is
/// fixed, so results are deterministic.
template <class F>
QuadratureResult integrate_band_vec(F&& f, double lo, double hi, std::size_t dim,
                                    std::span<double> out, const QuadratureOptions& opts = {}) {
  if (!(lo < hi)) throw std::invalid_argument("integrate_band_vec: empty interval");
  if (out.size() != dim) throw std::invalid_argument("integrate_band_vec: output size mismatch");

  std::vector<double> sum(dim, 0.0), prev(dim, 0.0), buf(dim, 0.0);
  const auto add_point = [&](double t, std::vector<double>& acc) {
    const auto node = detail::tanh_sinh_node(t, lo, hi);
    if (node.weight == 0) return;
    f(node.x, std::span<double>(buf));
    for (std::size_t i = 0; i < dim; ++i) {
      const double v = buf[i] * node.weight;
      if (!std::isfinite(v))
        throw QuadratureError("integrate_band_vec: non-finite integrand inside the interval");
      acc[i] += v;
    }
  };

  QuadratureResult res;
  double h = 1.0;
  // Level 0: trapezoid in t with h = 1.
  add_point(0.0, sum);
  for (int j = 1; j * h <= opts.t_max; ++j) {
    add_point(j * h, sum);
    add_point(-j * h, sum);
  }
  double diff = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= opts.max_level; ++level) {
    h /= 2;
    std::vector<double> fine(dim, 0.0);
    for (int j = 1; j * h <= opts.t_max; j += 2) {  // new midpoints only
      add_point(j * h, fine);
      add_point(-j * h, fine);
    }
    diff = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      prev[i] = sum[i] * 2 * h;  // previous level estimate
      sum[i] += fine[i];
      diff = std::max(diff, std::abs(sum[i] * h - prev[i]));
    }
    res.level = level;
    res.err_estimate = diff;
    if (diff <= opts.abs_tol) {
      res.converged = true;
      break;
    }
  }
  if (!res.converged && diff > opts.fail_tol)
    throw QuadratureError("integrate_band_vec: level " + std::to_string(res.level) +
                          " difference " + std::to_string(diff) + " exceeds fail tolerance");
  for (std::size_t i = 0; i < dim; ++i) out[i] = sum[i] * h;
  res.value = out.empty() ? 0 : out[0];
  return res;
}

/// Scalar integrand convenience wrapper.
template <class F>
QuadratureResult integrate_band(F&& f, double lo, double hi, const QuadratureOptions& opts = {}) {
  double value = 0;
  auto res = integrate_band_vec(
      [&f](double x, std::span<double> out) { out[0] = f(x); }, lo, hi, 1,
      std::span<double>(&value, 1), opts);
  res.value = value;
  return res;
}

}  // namespace pjacobi
