#pragma once

#include <string>
#include <utility>

#include "quadcf/errors.hpp"
#include "quadcf/gaussian.hpp"

namespace quadcf {

/// u + v*sqrt(N) in the quadratic extension F(sqrt N). F is Rational or GaussianRational;
/// N is carried by every element and must agree between operands.
template <class F>
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(F u, F v, F radicand) : u_(std::move(u)), v_(std::move(v)), n_(std::move(radicand)) {}

  static QuadExt constant(F u, F radicand) { return QuadExt(std::move(u), F(0L), std::move(radicand)); }
  static QuadExt root(F radicand) { return QuadExt(F(0L), F(1L), std::move(radicand)); }

  const F& u() const { return u_; }
  const F& v() const { return v_; }
  const F& radicand() const { return n_; }

  /// u^2 - v^2 N, the field norm down to F.
  F norm() const { return u_ * u_ - v_ * v_ * n_; }

  QuadExt conjugate() const { return QuadExt(u_, -v_, n_); }

  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.u_ == b.u_ && a.v_ == b.v_ && a.n_ == b.n_;
  }

  friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
    check(a, b);
    return QuadExt(a.u_ + b.u_, a.v_ + b.v_, a.n_);
  }
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
    check(a, b);
    return QuadExt(a.u_ - b.u_, a.v_ - b.v_, a.n_);
  }
  friend QuadExt operator-(const QuadExt& a) { return QuadExt(-a.u_, -a.v_, a.n_); }
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    check(a, b);
    return QuadExt(a.u_ * b.u_ + a.v_ * b.v_ * a.n_, a.u_ * b.v_ + a.v_ * b.u_, a.n_);
  }
  friend QuadExt operator*(const QuadExt& a, const F& s) { return QuadExt(a.u_ * s, a.v_ * s, a.n_); }

  friend QuadExt inverse(const QuadExt& a) {
    F nrm = a.norm();
    if (nrm == F(0L)) throw Error(Errc::DivisionByZero, "inverse of a zero-norm element");
    F inv = F(1L) / nrm;
    return QuadExt(a.u_ * inv, -(a.v_ * inv), a.n_);
  }
  friend QuadExt operator/(const QuadExt& a, const QuadExt& b) { return a * inverse(b); }

  QuadExt pow(unsigned e) const {
    QuadExt result = constant(F(1L), n_);
    QuadExt base = *this;
    while (e != 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return result;
  }

  friend std::string to_string(const QuadExt& a) {
    using quadcf::to_string;
    return to_string(a.u_) + " + (" + to_string(a.v_) + ")*sqrt(" + to_string(a.n_) + ")";
  }

 private:
  static void check(const QuadExt& a, const QuadExt& b) {
    if (!(a.n_ == b.n_)) throw Error(Errc::Parse, "mixing elements of different quadratic fields");
  }

  F u_{0L};
  F v_{0L};
  F n_{0L};
};

}  // namespace quadcf
