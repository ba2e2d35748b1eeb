#pragma once

#include <string>
#include <utility>

#include "quadcf/errors.hpp"
#include "quadcf/gaussian.hpp"

namespace quadcf {

/// [[a, b], [c, d]] over a commutative ring R (BigInt or GaussianInt).
template <class R>
struct Mat2 {
  R a{0L}, b{0L}, c{0L}, d{0L};

  static Mat2 identity() { return {R(1L), R(0L), R(0L), R(1L)}; }

  R det() const { return R(a * d - b * c); }
  R trace() const { return R(a + d); }

  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {R(x.a * y.a + x.b * y.c), R(x.a * y.b + x.b * y.d), R(x.c * y.a + x.d * y.c),
            R(x.c * y.b + x.d * y.d)};
  }
  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {R(x.a + y.a), R(x.b + y.b), R(x.c + y.c), R(x.d + y.d)};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {R(x.a - y.a), R(x.b - y.b), R(x.c - y.c), R(x.d - y.d)};
  }
  friend Mat2 operator*(const R& s, const Mat2& x) { return {R(s * x.a), R(s * x.b), R(s * x.c), R(s * x.d)}; }

  Mat2 pow(unsigned long e) const {
    Mat2 result = identity();
    Mat2 base = *this;
    while (e != 0) {
      if (e & 1UL) result = result * base;
      e >>= 1UL;
      if (e != 0) base = base * base;
    }
    return result;
  }
};

template <class R>
Mat2<R> mat_mul(const Mat2<R>& x, const Mat2<R>& y) {
  return x * y;
}

/// t*A + s*B.
template <class R>
Mat2<R> lin_comb(const R& t, const Mat2<R>& x, const R& s, const Mat2<R>& y) {
  return {R(t * x.a + s * y.a), R(t * x.b + s * y.b), R(t * x.c + s * y.c), R(t * x.d + s * y.d)};
}

/// Exact inverse of a matrix whose determinant is a unit of R: adj(A) * det^-1.
template <class R>
Mat2<R> mat_inv_unimodular(const Mat2<R>& x) {
  R det = x.det();
  if (!is_unit(det)) {
    using quadcf::to_string;
    throw Error(Errc::NonUnimodular, "determinant " + to_string(det) + " is not a unit");
  }
  R inv = unit_inverse(det);
  return {R(inv * x.d), R(-(inv * x.b)), R(-(inv * x.c)), R(inv * x.a)};
}

template <class R>
std::string to_string(const Mat2<R>& x) {
  using quadcf::to_string;
  return "[[" + to_string(x.a) + ", " + to_string(x.b) + "], [" + to_string(x.c) + ", " + to_string(x.d) + "]]";
}

}  // namespace quadcf
