#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "poly.hpp"
#include "recurrence.hpp"

namespace pjacobi {

/// Truncated power series in t whose coefficients are polynomials in x.
template <class S>
struct TruncatedSeries {
  std::vector<Poly<S>> coeffs;  // coeffs[k] multiplies t^k
  int order = 0;                // coefficients 0..order are meaningful
};

/// P(t) = sum P_k(x) t^k truncated at the given order.
template <class S>
TruncatedSeries<S> polynomial_series(const RecurrenceSpec<S>& spec, int order) {
  TruncatedSeries<S> s;
  s.order = order;
  for (auto& pp : build_polys(spec, order)) s.coeffs.push_back(std::move(pp.p));
  return s;
}

struct SeriesReport {
  bool ok = true;
  int first_failing = -1;    // t-index of the first failing coefficient
  double max_residual = 0.0;  // largest |coefficient| of a should-be-zero poly
};

namespace detail {

/// Zero test with the exact/inexact-period split: exact coefficients must
/// vanish identically, dyadic-rationalized periods get the 1e-20 ceiling.
inline void account(SeriesReport& rep, const PolyQ& diff, double scale, bool exact, int where) {
  const double resid = diff.max_abs_coeff() / std::max(1.0, scale);
  rep.max_residual = std::max(rep.max_residual, resid);
  const bool pass = exact ? diff.is_zero() : resid <= inexact_period_tol;
  if (!pass && rep.first_failing < 0) {
    rep.ok = false;
    rep.first_failing = where;
  }
}

/// Coefficient of t^k in (t^{2N} - 2 g t^N + 1) * P(t).
inline PolyQ genfun_product_coeff(const TruncatedSeries<Rat>& P, const PolyQ& g, int N, int k) {
  PolyQ acc = P.coeffs[static_cast<std::size_t>(k)];
  if (k >= N) acc = acc - Rat(2) * g * P.coeffs[static_cast<std::size_t>(k - N)];
  if (k >= 2 * N) acc = acc + P.coeffs[static_cast<std::size_t>(k - 2 * N)];
  return acc;
}

/// The right-hand side of the generating-function identity: the numerator
/// F(t) has degree 2N-2 with the two-branch coefficients.
inline PolyQ genfun_rhs_coeff(const TruncatedSeries<Rat>& P, const PolyQ& g, int N, int k) {
  if (k <= N - 1) return P.coeffs[static_cast<std::size_t>(k)];
  if (k <= 2 * N - 2)
    return P.coeffs[static_cast<std::size_t>(k)] - Rat(2) * g * P.coeffs[static_cast<std::size_t>(k - N)];
  return {};
}

}  // namespace detail

/// Coefficientwise verification of the generating-function identity
/// (t^{2N} - 2 g_N t^N + 1) sum P_k t^k = sum_{k<=2N-2} P_k t^k
///                                        - 2 g_N sum_{k<=N-2} P_k t^{k+N}.
inline SeriesReport genfun_identity(const RecurrenceSpec<Rat>& spec, int order) {
  const int N = spec.N;
  if (order < 2 * N) throw std::invalid_argument("genfun_identity: order must be >= 2N");
  const auto P = polynomial_series(spec, order);
  const PolyQ g = discriminant_exact(spec);
  const bool exact = exact_cosine_period(N);
  SeriesReport rep;
  for (int k = 0; k <= order; ++k) {
    const PolyQ diff = detail::genfun_product_coeff(P, g, N, k) - detail::genfun_rhs_coeff(P, g, N, k);
    detail::account(rep, diff, P.coeffs[static_cast<std::size_t>(k)].max_abs_coeff(), exact, k);
  }
  return rep;
}

/// Lacunary three-term relation P_k - 2 g_N P_{k-N} + P_{k-2N} = 0, k >= 2N-1.
inline SeriesReport tail_recursion_check(const RecurrenceSpec<Rat>& spec, int k_max) {
  const int N = spec.N;
  if (k_max < 2 * N - 1) throw std::invalid_argument("tail_recursion_check: k_max must be >= 2N-1");
  const auto P = polynomial_series(spec, k_max);
  const PolyQ g = discriminant_exact(spec);
  const bool exact = exact_cosine_period(N);
  SeriesReport rep;
  for (int k = 2 * N - 1; k <= k_max; ++k) {
    const PolyQ diff = detail::genfun_product_coeff(P, g, N, k);
    detail::account(rep, diff, P.coeffs[static_cast<std::size_t>(k)].max_abs_coeff(), exact, k);
  }
  return rep;
}

/// Numerator-coefficient agreement: the series product recovers exactly the
/// two-branch formula for F_k (and vanishes beyond degree 2N-2).
inline SeriesReport f_k_agreement(const RecurrenceSpec<Rat>& spec, int order) {
  return genfun_identity(spec, order);
}

/// Functional equation Q(t)P(t) + a t [P(tq) + P(t/q)] = 1 with q = e^{2pi i/N},
/// checked on truncated series at numeric x samples. Returns the largest
/// |coefficient| of the residual series over all samples.
inline double functional_equation_residual(const RecurrenceSpec<double>& spec, int order,
                                           std::span<const double> xs) {
  if (order < 4) throw std::invalid_argument("functional_equation_residual: order must be >= 4");
  using C = std::complex<double>;
  const C q = std::exp(C(0, 2 * std::numbers::pi / spec.N));
  double worst = 0;
  for (double x : xs) {
    std::vector<double> s(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) s[static_cast<std::size_t>(n)] = eval_P(spec, n, x);
    for (int n = 0; n <= order; ++n) {
      C c = s[static_cast<std::size_t>(n)];
      if (n >= 1) {
        c += -2.0 * x * s[static_cast<std::size_t>(n - 1)];
        c += spec.a * (std::pow(q, n - 1) + std::pow(q, -(n - 1))) * s[static_cast<std::size_t>(n - 1)];
      }
      if (n >= 2) c += s[static_cast<std::size_t>(n - 2)];
      if (n == 0) c -= 1.0;
      worst = std::max(worst, std::abs(c));
    }
  }
  return worst;
}

inline bool functional_equation(const RecurrenceSpec<double>& spec, int order,
                                int n_samples = 10, unsigned seed = 20240901) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> xs(static_cast<std::size_t>(n_samples));
  for (auto& x : xs) x = dist(rng);
  return functional_equation_residual(spec, order, xs) < 1e-10;
}

// ---------------------------------------------------------------------------
// det M(t) by cofactor expansion in exact cyclotomic arithmetic (N <= 4).
// ---------------------------------------------------------------------------

namespace detail {

template <class P>
P det_cofactor(const std::vector<std::vector<P>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  P acc{};
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<P>> sub(n - 1, std::vector<P>(n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        sub[r - 1][cc++] = m[r][c];
      }
    }
    const P term = m[0][j] * det_cofactor(sub);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

template <int NV>
SeriesReport det_m_check_impl(const RecurrenceSpec<Rat>& spec) {
  using C = Cyclo<NV>;
  using XPoly = Poly<C>;   // polynomial in x
  using TPoly = Poly<XPoly>;  // polynomial in t
  const int N = NV;
  const Rat& a = spec.a;

  std::vector<std::vector<TPoly>> M(static_cast<std::size_t>(N),
                                    std::vector<TPoly>(static_cast<std::size_t>(N)));
  for (int j = 0; j < N; ++j) {
    const C qj = C::q_pow(j);
    const C q2j = C::q_pow(2 * j);
    // Q(t q^j) = q^{2j} t^2 - 2 q^j x t + 1
    TPoly qt(std::vector<XPoly>{XPoly(1),
                                XPoly(std::vector<C>{C(0), C(Rat(-2)) * qj}),
                                XPoly(std::vector<C>{q2j})});
    M[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] =
        M[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] + qt;
    // neighbor entries a t q^j; for N <= 2 both wrap onto the same slot
    TPoly off(std::vector<XPoly>{XPoly(0), XPoly(std::vector<C>{C(a) * qj})});
    M[static_cast<std::size_t>(j)][static_cast<std::size_t>((j + 1) % N)] =
        M[static_cast<std::size_t>(j)][static_cast<std::size_t>((j + 1) % N)] + off;
    M[static_cast<std::size_t>(j)][static_cast<std::size_t>((j + N - 1) % N)] =
        M[static_cast<std::size_t>(j)][static_cast<std::size_t>((j + N - 1) % N)] + off;
  }

  const TPoly det = det_cofactor(M);
  const PolyQ g = discriminant_exact(spec);

  SeriesReport rep;
  // Expected: t^{2N} - 2 g_N(x) t^N + 1, purely rational coefficients.
  for (int k = 0; k <= std::max(det.degree(), 2 * N); ++k) {
    XPoly expect(0);
    if (k == 0 || k == 2 * N) expect = XPoly(1);
    if (k == N) {
      std::vector<C> cs;
      for (const auto& c : g.coeffs()) cs.emplace_back(Rat(-2) * c);
      expect = expect + XPoly(std::move(cs));
    }
    const XPoly diff = det.coeff(static_cast<std::size_t>(k)) - expect;
    if (!diff.is_zero() && rep.first_failing < 0) {
      rep.ok = false;
      rep.first_failing = k;
    }
  }
  return rep;
}

}  // namespace detail

/// Builds det M(t) symbolically (cofactors, exact cyclotomic coefficients) and
/// compares with t^{2N} - 2 g_N t^N + 1; requires N <= 4 and an exact period.
inline SeriesReport det_m_check(const RecurrenceSpec<Rat>& spec) {
  switch (spec.N) {
    case 1: return detail::det_m_check_impl<1>(spec);
    case 2: return detail::det_m_check_impl<2>(spec);
    case 3: return detail::det_m_check_impl<3>(spec);
    case 4: return detail::det_m_check_impl<4>(spec);
    default:
      throw std::invalid_argument("det_m_check: cofactor construction capped at N <= 4");
  }
}

}  // namespace pjacobi
