#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "poly.hpp"
#include "rational.hpp"

namespace pjacobi {

/// Residual ceiling replacing "exactly zero" when the period's cosines had to
/// be rationalized (N outside {1,2,3,4,6}).
inline constexpr double inexact_period_tol = 1e-20;

/// The pair (a, N) with the derived coefficient sequence alpha[j] = 2a cos(2pi j/N).
/// alpha[j] == alpha[N-j] holds exactly (computed once per mirror pair).
template <class S>
struct RecurrenceSpec {
  S a{};
  int N = 1;
  std::vector<S> alpha;
};

inline RecurrenceSpec<double> make_spec(double a, int N) {
  if (N < 1) throw std::invalid_argument("make_spec: N must be >= 1");
  std::vector<double> alpha(static_cast<std::size_t>(N));
  for (int j = 0; j <= N / 2; ++j) {
    const double v = 2 * a * std::cos(2 * std::numbers::pi * j / N);
    alpha[static_cast<std::size_t>(j)] = v;
    if (j > 0) alpha[static_cast<std::size_t>(N - j)] = v;
  }
  return {a, N, std::move(alpha)};
}

inline RecurrenceSpec<Rat> make_exact_spec(const Rat& a, int N) {
  if (N < 1) throw std::invalid_argument("make_exact_spec: N must be >= 1");
  std::vector<Rat> alpha(static_cast<std::size_t>(N));
  for (int j = 0; j <= N / 2; ++j) {
    const Rat v = a * two_cos_rational(j, N);
    alpha[static_cast<std::size_t>(j)] = v;
    if (j > 0) alpha[static_cast<std::size_t>(N - j)] = v;
  }
  return {a, N, std::move(alpha)};
}

/// Lift a floating spec to the exact backing (the double a is itself rational).
inline RecurrenceSpec<Rat> exact_spec_from(const RecurrenceSpec<double>& s) {
  return make_exact_spec(rat_from_double(s.a), s.N);
}

// ---------------------------------------------------------------------------
// Forward recurrence evaluation: f_{k+1} = (2x - alpha_{k mod N}) f_k - f_{k-1}.
// P seeds (f_{-1}, f_0) = (0, 1); the numerator family P* seeds (-2, 0).
// ---------------------------------------------------------------------------

template <class S, class X>
X eval_recurrence(std::span<const S> alpha, X fm1, X f0, int n, const X& x) {
  if (n < 0) throw std::invalid_argument("eval_recurrence: n must be >= 0");
  const std::size_t N = alpha.size();
  X prev = fm1, cur = f0;
  for (int k = 0; k < n; ++k) {
    X next = (X(2) * x - X(alpha[static_cast<std::size_t>(k) % N])) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Value and derivative together, via the differentiated recurrence
/// f'_{k+1} = 2 f_k + (2x - alpha_k) f'_k - f'_{k-1}.
template <class S, class X>
std::pair<X, X> eval_recurrence_deriv(std::span<const S> alpha, X fm1, X f0, int n, const X& x) {
  if (n < 0) throw std::invalid_argument("eval_recurrence_deriv: n must be >= 0");
  const std::size_t N = alpha.size();
  X prev = fm1, cur = f0;
  X dprev{}, dcur{};
  for (int k = 0; k < n; ++k) {
    const X t = X(2) * x - X(alpha[static_cast<std::size_t>(k) % N]);
    X next = t * cur - prev;
    X dnext = X(2) * cur + t * dcur - dprev;
    prev = cur;
    cur = next;
    dprev = dcur;
    dcur = dnext;
  }
  return {cur, dcur};
}

template <class X = double>
X eval_P(const RecurrenceSpec<double>& s, int n, const X& x) {
  return eval_recurrence<double, X>(s.alpha, X(0), X(1), n, x);
}
template <class X = double>
X eval_P_star(const RecurrenceSpec<double>& s, int n, const X& x) {
  return eval_recurrence<double, X>(s.alpha, X(-2), X(0), n, x);
}
template <class X = double>
X eval_P_deriv(const RecurrenceSpec<double>& s, int n, const X& x) {
  return eval_recurrence_deriv<double, X>(s.alpha, X(0), X(1), n, x).second;
}
template <class X = double>
X eval_P_star_deriv(const RecurrenceSpec<double>& s, int n, const X& x) {
  return eval_recurrence_deriv<double, X>(s.alpha, X(-2), X(0), n, x).second;
}

inline Rat eval_P_exact(const RecurrenceSpec<Rat>& s, int n, const Rat& x) {
  return eval_recurrence<Rat, Rat>(s.alpha, Rat(0), Rat(1), n, x);
}

/// Discriminant value g_N(x) = (P_N(x) - P*_{N-1}(x)/2)/2 by forward recurrence.
template <class X = double>
X eval_g(const RecurrenceSpec<double>& s, const X& x) {
  return (eval_P<X>(s, s.N, x) - eval_P_star<X>(s, s.N - 1, x) / X(2)) / X(2);
}

/// Chebyshev U_n by its own recurrence (n >= -1; U_{-1} = 0).
template <class X>
X chebyshev_u(int n, const X& x) {
  if (n < -1) throw std::invalid_argument("chebyshev_u: n must be >= -1");
  X prev{}, cur = X(1);  // U_{-1}, U_0
  if (n == -1) return prev;
  for (int k = 0; k < n; ++k) {
    X next = X(2) * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Polynomial family construction.
// ---------------------------------------------------------------------------

template <class S>
struct PolyPair {
  Poly<S> p;   // P_k
  Poly<S> ps;  // P*_k
};

/// P_0..P_{n_max} and P*_0..P*_{n_max} in the monomial basis.
template <class S>
std::vector<PolyPair<S>> build_polys(const RecurrenceSpec<S>& spec, int n_max) {
  if (n_max < 0) throw std::invalid_argument("build_polys: n_max must be >= 0");
  std::vector<PolyPair<S>> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  Poly<S> p_prev = Poly<S>(),        ps_prev = Poly<S>::constant(S(-2));  // P_{-1}, P*_{-1}
  Poly<S> p_cur = Poly<S>::constant(S(1)), ps_cur = Poly<S>();            // P_0, P*_0
  out.push_back({p_cur, ps_cur});
  const std::size_t N = spec.alpha.size();
  for (int k = 0; k < n_max; ++k) {
    const Poly<S> step(std::vector<S>{-spec.alpha[static_cast<std::size_t>(k) % N], S(2)});
    Poly<S> p_next = step * p_cur - p_prev;
    Poly<S> ps_next = step * ps_cur - ps_prev;
    p_prev = std::move(p_cur);
    p_cur = std::move(p_next);
    ps_prev = std::move(ps_cur);
    ps_cur = std::move(ps_next);
    out.push_back({p_cur, ps_cur});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Discriminant polynomial.
// ---------------------------------------------------------------------------

struct Discriminant {
  PolyD gN;        // degree N, leading coefficient 2^{N-1}
  PolyD gN_prime;  // derivative
};

/// g_N = (P_N - P*_{N-1}/2)/2 in exact arithmetic, cross-checked against the
/// alternative form P_{2N-1}/(2 P_{N-1}) by polynomial division. A nonzero
/// remainder signals an implementation bug, not a user error.
inline PolyQ discriminant_exact(const RecurrenceSpec<Rat>& spec) {
  const int N = spec.N;
  const auto polys = build_polys(spec, 2 * N - 1);
  const Rat half(1, 2);
  PolyQ g = (polys[static_cast<std::size_t>(N)].p -
             polys[static_cast<std::size_t>(N - 1)].ps * half) *
            half;
  const PolyQ& p2n1 = polys[static_cast<std::size_t>(2 * N - 1)].p;
  const PolyQ& pn1 = polys[static_cast<std::size_t>(N - 1)].p;
  const auto [q, r] = p2n1.divmod(pn1);
  const PolyQ diff = q - g * Rat(2);
  const double scale = std::max(1.0, p2n1.max_abs_coeff());
  const bool ok = exact_cosine_period(N)
                      ? (r.is_zero() && diff.is_zero())
                      : (r.max_abs_coeff() <= inexact_period_tol * scale &&
                         diff.max_abs_coeff() <= inexact_period_tol * scale);
  if (!ok) throw std::logic_error("discriminant: P_{2N-1}/(2 P_{N-1}) division self-check failed");
  return g;
}

inline Discriminant discriminant(const RecurrenceSpec<double>& spec) {
  const PolyQ g = discriminant_exact(exact_spec_from(spec));
  PolyD gd = lower(g);
  PolyD gdp = gd.derivative();
  return {std::move(gd), std::move(gdp)};
}

/// Half the trace of the N-step transfer matrix; agrees with g_N(x).
inline double transfer_trace(const RecurrenceSpec<double>& s, double x) {
  // One-step matrix A_k = [[2x - alpha_k, -1], [1, 0]]; T_N = A_{N-1}...A_0.
  double m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  for (int k = 0; k < s.N; ++k) {
    const double t = 2 * x - s.alpha[static_cast<std::size_t>(k)];
    const double n00 = t * m00 - m10;
    const double n01 = t * m01 - m11;
    m10 = m00;
    m11 = m01;
    m00 = n00;
    m01 = n01;
  }
  return (m00 + m11) / 2;
}

// ---------------------------------------------------------------------------
// Symmetry and Chebyshev-reduction checks.
// ---------------------------------------------------------------------------

/// P_n(x; -a) = (-1)^n P_n(-x; a) within the stated relative tolerance.
inline bool symmetry_check(const RecurrenceSpec<double>& s, int n, double x, double tol = 1e-12) {
  const auto neg = make_spec(-s.a, s.N);
  const double lhs = eval_P(neg, n, x);
  const double rhs = (n % 2 ? -1.0 : 1.0) * eval_P(s, n, -x);
  return std::abs(lhs - rhs) <= tol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

struct ShiftCheck {
  bool ok;
  double lhs, rhs, residual, tol;
};

namespace detail {
inline ShiftCheck shift_check_impl(const RecurrenceSpec<double>& s, int k, int j, double x, bool star) {
  if (k < 0 || j < 1) throw std::invalid_argument("chebyshev_shift_check: need k >= 0, j >= 1");
  const double g = eval_g(s, x);
  const auto P = [&](int n) { return star ? eval_P_star(s, n, x) : eval_P(s, n, x); };
  const double lhs = P(k + j * s.N);
  const double rhs = P(k + s.N) * chebyshev_u(j - 1, g) - P(k) * chebyshev_u(j - 2, g);
  const double tol = std::max(1e-10, 1e-13 * std::abs(lhs));
  const double resid = std::abs(lhs - rhs);
  return {resid <= tol, lhs, rhs, resid, tol};
}
}  // namespace detail

/// P_{k+jN} = P_{k+N} U_{j-1}(g_N) - P_k U_{j-2}(g_N), U by its own recurrence.
inline ShiftCheck chebyshev_shift_check(const RecurrenceSpec<double>& s, int k, int j, double x) {
  return detail::shift_check_impl(s, k, j, x, false);
}
/// Numerator analogue: P*_{k+jN} = P*_{k+N} U_{j-1}(g_N) - P*_k U_{j-2}(g_N).
inline ShiftCheck chebyshev_shift_check_star(const RecurrenceSpec<double>& s, int k, int j, double x) {
  return detail::shift_check_impl(s, k, j, x, true);
}

struct RatioAsymptotics {
  double theta;  // arccos g_N(x)
  double rho;    // > 0
  double phase;  // in [0, 2pi)
};

/// In-band ratio representation: P_{k+jN}(x)/P_k(x) = rho sin(j theta + phase)/sin theta.
inline RatioAsymptotics ratio_asymptotics(const RecurrenceSpec<double>& s, int k, double x) {
  const double g = eval_g(s, x);
  if (!(std::abs(g) < 1)) throw std::domain_error("ratio_asymptotics: |g_N(x)| >= 1 (x not inside a band)");
  const double pk = eval_P(s, k, x);
  if (pk == 0) throw std::domain_error("ratio_asymptotics: P_k(x) = 0");
  const double theta = std::acos(g);
  const double c = eval_P(s, k + s.N, x) / pk - std::cos(theta);
  const double sn = std::sin(theta);
  const double rho = std::hypot(c, sn);
  double phase = std::atan2(sn, c);
  if (phase < 0) phase += 2 * std::numbers::pi;
  return {theta, rho, phase};
}

/// P_{k+jN}(x)/P_k(x) by renormalized forward recurrence; safe for large j
/// (the pair is rescaled once per period, so growth lands in one exp() call).
inline double eval_ratio(const RecurrenceSpec<double>& s, int k, int j, double x) {
  const std::size_t N = s.alpha.size();
  double prev = 0, cur = 1;
  for (int m = 0; m < k; ++m) {
    const double next = (2 * x - s.alpha[static_cast<std::size_t>(m) % N]) * cur - prev;
    prev = cur;
    cur = next;
  }
  if (cur == 0) throw std::domain_error("eval_ratio: P_k(x) = 0");
  const double pk = cur;
  prev /= pk;
  cur = 1;
  double log_scale = 0;
  for (int step = 0; step < j * s.N; ++step) {
    const int m = k + step;
    const double next = (2 * x - s.alpha[static_cast<std::size_t>(m) % N]) * cur - prev;
    prev = cur;
    cur = next;
    const double mag = std::max(std::abs(prev), std::abs(cur));
    if (mag > 1e100) {
      prev /= mag;
      cur /= mag;
      log_scale += std::log(mag);
    }
  }
  return cur * std::exp(log_scale);
}

}  // namespace pjacobi
