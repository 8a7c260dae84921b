#pragma once

// Test-only oracles, independent of the library's computation paths:
//  - closed forms for the N = 1..4 special cases (Stieltjes transform,
//    weight, densities, resolvent entries, turning points, masses),
//  - a pointwise-recurrence interpolation oracle for polynomial coefficients,
//  - exact Sturm-chain root isolation over rationals.

#include <cmath>
#include <complex>
#include <initializer_list>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "pjacobi/poly.hpp"
#include "pjacobi/rational.hpp"
#include "pjacobi/recurrence.hpp"

namespace oracles {

using pjacobi::PolyQ;
using pjacobi::Rat;
using CX = std::complex<double>;

/// sqrt(lead * prod (z - r_j)) with the principal branch per factor; the same
/// sheet convention the closed forms in the paper use.
inline CX prod_sqrt(const std::vector<double>& roots, double lead, CX z) {
  CX p = std::sqrt(lead);
  for (double r : roots) p *= std::sqrt(z - r);
  return p;
}

// --- turning points, zeros and masses ---------------------------------------

inline std::vector<double> xi_case(int N, double a) {
  const double s2 = std::sqrt(a * a + 2);
  switch (N) {
    case 1:
      return {a - 1, a + 1};
    case 2:
      return {-std::sqrt(a * a + 1), -a, a, std::sqrt(a * a + 1)};
    case 3: {
      const double sp = std::sqrt(9 * a * a + 6 * a + 9);
      const double sm = std::sqrt(9 * a * a - 6 * a + 9);
      return {(a - 1 - sp) / 4, (-a - 1) / 2, (a + 1 - sm) / 4,
              (-a + 1) / 2, (a - 1 + sp) / 4, (a + 1 + sm) / 4};
    }
    case 4:
      return {-std::sqrt(a * a + 1), -(s2 + a) / 2, -(s2 - a) / 2, 0.0,
              0.0, (s2 - a) / 2, (s2 + a) / 2, std::sqrt(a * a + 1)};
    default:
      throw std::invalid_argument("xi_case: closed forms only for N <= 4");
  }
}

inline std::vector<double> y_case(int N, double a) {
  switch (N) {
    case 2:
      return {a};
    case 3:
      return {(a - std::sqrt(9 * a * a + 4)) / 4, (a + std::sqrt(9 * a * a + 4)) / 4};
    case 4:
      return {-std::sqrt(a * a + 0.5), 0.0, std::sqrt(a * a + 0.5)};
    default:
      throw std::invalid_argument("y_case: closed forms only for N in {2,3,4}");
  }
}

inline std::vector<double> mass_case(int N, double a) {
  switch (N) {
    case 2:
      return {0.0};
    case 3:
      return {0.0, a / std::sqrt(a * a + 4.0 / 9.0)};
    case 4:
      return {0.0, 0.0, a / std::sqrt(a * a + 0.5)};
    default:
      throw std::invalid_argument("mass_case: closed forms only for N in {2,3,4}");
  }
}

// --- Stieltjes transforms ----------------------------------------------------

inline CX sqrt_case(int N, double a, CX z) {
  switch (N) {
    case 1:
      return prod_sqrt(xi_case(1, a), 1.0, z);  // sqrt((z-a)^2 - 1)
    case 2:
      return prod_sqrt(xi_case(2, a), 1.0, z);  // sqrt((z^2-a^2)(z^2-a^2-1))
    case 3:
      return prod_sqrt(xi_case(3, a), 16.0, z);  // sqrt((2z+a+1)(2z+a-1) G(z))
    case 4: {
      auto xi = xi_case(4, a);
      xi.erase(xi.begin() + 3, xi.begin() + 5);  // the double zero was cancelled
      return prod_sqrt(xi, 4.0, z);  // sqrt((z^2-a^2-1)(2z^2-2az-1)(2z^2+2az-1))
    }
    default:
      throw std::invalid_argument("sqrt_case: closed forms only for N <= 4");
  }
}

inline CX phi_case(int N, double a, CX z) {
  const CX sq = sqrt_case(N, a, z);
  switch (N) {
    case 1:
      return 2.0 * (z - a) - 2.0 * sq;
    case 2:
      return (2.0 * (z * z - a * a) - 2.0 * sq) / (z - a);
    case 3:
      return 2.0 * (4.0 * z * z * z - (3 * a * a + 1) * z - a * a * a + a - sq) /
             (4.0 * z * z - 2 * a * z - 2 * a * a - 1.0);
    case 4:
      return 2.0 * (2.0 * z * z * z - (2 * a * a + 1) * z + a - sq) /
             (2.0 * z * z - (2 * a * a + 1));
    default:
      throw std::invalid_argument("phi_case: closed forms only for N <= 4");
  }
}

struct ResolventCase {
  CX r00, r01, r11;
};

inline ResolventCase resolvent_case(int N, double a, CX z) {
  const CX sq = sqrt_case(N, a, z);
  switch (N) {
    case 1:
      return {1.0 / sq, (z - a) / sq - 1.0, 1.0 / sq};
    case 2:
      return {(z + a) / sq, (z * z - a * a) / sq - 1.0, (z - a) / sq};
    case 3: {
      const CX num = (2.0 * z + a + 1.0) * (2.0 * z + a - 1.0);
      return {num / sq, (z - a) * num / sq - 1.0,
              (4.0 * z * z - 2 * a * z - 2 * a * a - 1.0) / sq};
    }
    case 4: {
      const CX num = 2.0 * z * z + 2.0 * a * z - 1.0;
      return {num / sq, (z - a) * num / sq - 1.0, (2.0 * z * z - (2 * a * a + 1)) / sq};
    }
    default:
      throw std::invalid_argument("resolvent_case: closed forms only for N <= 4");
  }
}

// --- weights and densities ---------------------------------------------------

inline double weight_case(int N, double a, double x) {
  switch (N) {
    case 1:
      return 2 / std::numbers::pi * std::sqrt(1 - (x - a) * (x - a));
    case 2:
      return 2 / std::numbers::pi *
             std::sqrt(std::abs(x + a) / std::abs(x - a) * (a * a + 1 - x * x));
    case 3: {
      const double G = (2 * x * x - (a + 1) * x - (a * a - a + 1)) *
                       (2 * x * x - (a - 1) * x - (a * a + a + 1));
      return 2 * std::sqrt(std::abs((2 * x + a + 1) * (2 * x + a - 1) * G)) /
             (std::numbers::pi * std::abs(4 * x * x - 2 * a * x - 2 * a * a - 1));
    }
    case 4: {
      const double prod = (x * x - a * a - 1) * (2 * x * x - 2 * a * x - 1) *
                          (2 * x * x + 2 * a * x - 1);
      return 2 * std::sqrt(std::abs(prod)) /
             (std::numbers::pi * std::abs(2 * x * x - 2 * a * a - 1));
    }
    default:
      throw std::invalid_argument("weight_case: closed forms only for N <= 4");
  }
}

struct DensityCase {
  double d00, d01, d11;
};

inline DensityCase density_case(int N, double a, double x) {
  switch (N) {
    case 1: {
      const double s = std::sqrt(1 - (x - a) * (x - a));
      return {1 / (std::numbers::pi * s), (x - a) / (std::numbers::pi * s),
              1 / (std::numbers::pi * s)};
    }
    case 2: {
      const double den = a * a + 1 - x * x;
      const double d00 = std::sqrt(std::abs(x + a) / (std::abs(x - a) * den)) / std::numbers::pi;
      // The in-band radicand is x^2 - a^2 (the printed a^2 - x^2 is negative
      // there); equivalent to (x - a) * d00.
      const double d01 =
          (x > 0 ? 1.0 : -1.0) * std::sqrt(std::abs(x * x - a * a) / den) / std::numbers::pi;
      const double d11 = std::sqrt(std::abs(x - a) / (std::abs(x + a) * den)) / std::numbers::pi;
      return {d00, d01, d11};
    }
    case 3: {
      const double G = (2 * x * x - (a + 1) * x - (a * a - a + 1)) *
                       (2 * x * x - (a - 1) * x - (a * a + a + 1));
      const double quad = (2 * x + a + 1) * (2 * x + a - 1);
      const double d00 = std::sqrt(std::abs(quad) / std::abs(G)) / std::numbers::pi;
      const double d11 = std::abs(4 * x * x - 2 * a * x - 2 * a * a - 1) /
                         (std::numbers::pi * std::sqrt(std::abs(quad * G)));
      return {d00, (x - a) * d00, d11};
    }
    case 4: {
      const double quad = 2 * x * x - 2 * a * a - 1;
      const double other = (x * x - a * a - 1) * (2 * x * x - 2 * a * x - 1);
      const double full = other * (2 * x * x + 2 * a * x - 1);
      const double d00 = std::sqrt(std::abs(quad) / std::abs(other)) / std::numbers::pi;
      const double d11 = std::abs(quad) / (std::numbers::pi * std::sqrt(std::abs(full)));
      return {d00, (x - a) * d00, d11};
    }
    default:
      throw std::invalid_argument("density_case: closed forms only for N <= 4");
  }
}

// --- pointwise-recurrence interpolation oracle -------------------------------

/// Coefficients of the degree-n interpolating polynomial through samples of
/// P_n (or P*_n) taken by the scalar recurrence at Chebyshev points; Newton
/// divided differences expanded to the monomial basis.
inline std::vector<double> interpolated_coeffs(const pjacobi::RecurrenceSpec<double>& spec, int n,
                                               bool star = false, int n_samples = 20) {
  const int m = n + 1;
  if (m > n_samples) throw std::invalid_argument("interpolated_coeffs: need n+1 <= samples");
  std::vector<double> xs(static_cast<std::size_t>(m)), fs(xs.size());
  for (int i = 0; i < m; ++i) {
    xs[static_cast<std::size_t>(i)] = std::cos(std::numbers::pi * (2 * i + 1) / (2.0 * n_samples));
    fs[static_cast<std::size_t>(i)] = star ? pjacobi::eval_P_star(spec, n, xs[static_cast<std::size_t>(i)])
                                           : pjacobi::eval_P(spec, n, xs[static_cast<std::size_t>(i)]);
  }
  // Divided-difference table in place.
  for (int level = 1; level < m; ++level)
    for (int i = m - 1; i >= level; --i)
      fs[static_cast<std::size_t>(i)] =
          (fs[static_cast<std::size_t>(i)] - fs[static_cast<std::size_t>(i - 1)]) /
          (xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(i - level)]);
  // Horner expansion of the Newton form.
  std::vector<double> coeffs(static_cast<std::size_t>(m), 0.0);
  for (int i = m - 1; i >= 0; --i) {
    for (int d = m - 1; d > 0; --d)
      coeffs[static_cast<std::size_t>(d)] =
          coeffs[static_cast<std::size_t>(d - 1)] - coeffs[static_cast<std::size_t>(d)] * xs[static_cast<std::size_t>(i)];
    coeffs[0] = fs[static_cast<std::size_t>(i)] - coeffs[0] * xs[static_cast<std::size_t>(i)];
  }
  return coeffs;
}

// --- exact Sturm-chain root isolation ----------------------------------------

inline std::vector<PolyQ> sturm_chain(const PolyQ& p) {
  std::vector<PolyQ> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    const auto [q, r] = chain[chain.size() - 2].divmod(chain.back());
    if (r.is_zero()) break;
    chain.push_back(PolyQ() - r);
  }
  return chain;
}

inline int sign_variations(const std::vector<PolyQ>& chain, const Rat& x) {
  int v = 0, prev = 0;
  for (const auto& p : chain) {
    const Rat val = p(x);
    const int s = val == 0 ? 0 : (val > 0 ? 1 : -1);
    if (s != 0) {
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
  }
  return v;
}

/// All real roots of p in (lo, hi), isolated by Sturm counts and bisected in
/// exact arithmetic to interval width 2^-60; returned as doubles.
inline std::vector<double> isolate_roots(const PolyQ& p, const Rat& lo, const Rat& hi) {
  const auto chain = sturm_chain(p);
  const auto count = [&](const Rat& a, const Rat& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
  };
  std::vector<double> out;
  const Rat width_goal = Rat(1, pjacobi::BigInt(1) << 60);
  std::vector<std::pair<Rat, Rat>> stack{{lo, hi}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    const int n = count(a, b);
    if (n == 0) continue;
    if (n == 1 && b - a < width_goal) {
      out.push_back(pjacobi::to_double((a + b) / 2));
      continue;
    }
    const Rat mid = (a + b) / 2;
    if (p(mid) == 0 && n == 1) {
      out.push_back(pjacobi::to_double(mid));
      continue;
    }
    stack.push_back({a, mid});
    stack.push_back({mid, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracles
