#pragma once

#include <stdexcept>
#include <utility>

#include "rational.hpp"

namespace pjacobi {

/// Exact arithmetic in Q[q]/Phi_N(q) for N <= 4, where q = e^{2pi i/N}.
/// Phi_N has degree <= 2, so elements are u + v q with the reductions
/// q = 1 (N=1), q = -1 (N=2), q^2 = -1 - q (N=3), q^2 = -1 (N=4).
template <int N>
class Cyclo {
  static_assert(N >= 1 && N <= 4, "Cyclo: only cyclotomic degrees <= 2 supported");

 public:
  Cyclo() = default;
  Cyclo(int v) : u_(v) {}
  Cyclo(Rat u) : u_(std::move(u)) {}
  Cyclo(Rat u, Rat v) : u_(std::move(u)), v_(std::move(v)) { fold(); }

  static Cyclo q() {
    if constexpr (N == 1) return Cyclo(Rat(1));
    else if constexpr (N == 2) return Cyclo(Rat(-1));
    else return Cyclo(Rat(0), Rat(1));
  }
  static Cyclo q_pow(int k) {
    k = ((k % N) + N) % N;
    Cyclo acc(1);
    for (int i = 0; i < k; ++i) acc = acc * q();
    return acc;
  }

  const Rat& u() const { return u_; }
  const Rat& v() const { return v_; }
  bool is_rational() const { return v_ == 0; }

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b) { return raw(a.u_ + b.u_, a.v_ + b.v_); }
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b) { return raw(a.u_ - b.u_, a.v_ - b.v_); }
  friend Cyclo operator-(const Cyclo& a) { return raw(-a.u_, -a.v_); }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    const Rat uu = a.u_ * b.u_;
    const Rat cross = a.u_ * b.v_ + a.v_ * b.u_;
    const Rat vv = a.v_ * b.v_;
    if constexpr (N == 3) return raw(uu - vv, cross - vv);  // q^2 = -1 - q
    else return raw(uu - vv, cross);                         // q^2 = -1 (N=4); v_=0 for N<=2
  }
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.u_ == b.u_ && a.v_ == b.v_; }

 private:
  Rat u_{}, v_{};

  static Cyclo raw(Rat u, Rat v) {
    Cyclo c;
    c.u_ = std::move(u);
    c.v_ = std::move(v);
    c.fold();
    return c;
  }
  void fold() {
    if constexpr (N == 1) {
      u_ += v_;
      v_ = 0;
    } else if constexpr (N == 2) {
      u_ -= v_;
      v_ = 0;
    }
  }
};

}  // namespace pjacobi
