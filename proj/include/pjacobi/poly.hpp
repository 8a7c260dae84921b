#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace pjacobi {

/// Dense monomial-basis polynomial over a field scalar S (double or Rat).
/// Invariant: the trailing coefficient is nonzero; the zero polynomial stores
/// no coefficients and reports degree() == -1.
template <class S>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(int v) : Poly(std::vector<S>{S(v)}) {}  // constant; lets Poly nest as a coefficient ring

  static Poly constant(S v) { return Poly(std::vector<S>{std::move(v)}); }
  static Poly monomial(int deg, S coeff) {
    std::vector<S> c(static_cast<std::size_t>(deg) + 1, S(0));
    c.back() = std::move(coeff);
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::span<const S> coeffs() const { return c_; }

  /// Coefficient of x^i (zero beyond the degree).
  S coeff(std::size_t i) const { return i < c_.size() ? c_[i] : S(0); }

  S leading() const { return c_.empty() ? S(0) : c_.back(); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<S> c(std::max(a.c_.size(), b.c_.size()), S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<S> c(std::max(a.c_.size(), b.c_.size()), S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a) { return Poly::constant(S(-1)) * a; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<S> c(a.c_.size() + b.c_.size() - 1, S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const S& s) {
    std::vector<S> c = a.c_;
    for (auto& v : c) v *= s;
    return Poly(std::move(c));
  }
  friend Poly operator*(const S& s, const Poly& a) { return a * s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Multiply by x^k.
  Poly shifted(int k) const {
    if (is_zero()) return {};
    std::vector<S> c(c_.size() + static_cast<std::size_t>(k), S(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return Poly(std::move(c));
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<S> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * S(static_cast<int>(i));
    return Poly(std::move(c));
  }

  /// Horner evaluation; X may be a wider type than S (e.g. complex for S = double).
  template <class X>
  X operator()(const X& x) const {
    X acc{};
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + X(c_[i]);
    return acc;
  }

  /// Euclidean division: returns (quotient, remainder).
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw std::invalid_argument("Poly::divmod: division by zero polynomial");
    Poly r = *this;
    std::vector<S> q;
    const int dd = d.degree();
    if (degree() >= dd) q.assign(static_cast<std::size_t>(degree() - dd) + 1, S(0));
    while (!r.is_zero() && r.degree() >= dd) {
      const int k = r.degree() - dd;
      const S f = r.c_.back() / d.c_.back();
      q[static_cast<std::size_t>(k)] = f;
      for (std::size_t i = 0; i < d.c_.size(); ++i) r.c_[i + k] -= f * d.c_[i];
      r.c_.pop_back();
      r.trim();
    }
    return {Poly(std::move(q)), std::move(r)};
  }

  /// Largest |coefficient| as a double (residual checks on near-zero polys).
  double max_abs_coeff() const {
    double m = 0;
    for (const auto& v : c_) m = std::max(m, std::abs(to_double(v)));
    return m;
  }

 private:
  std::vector<S> c_;
  void trim() {
    while (!c_.empty() && c_.back() == S(0)) c_.pop_back();
  }
};

using PolyD = Poly<double>;
using PolyQ = Poly<Rat>;

inline PolyD lower(const PolyQ& p) {
  std::vector<double> c(p.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = to_double(p.coeff(i));
  return PolyD(std::move(c));
}

}  // namespace pjacobi
