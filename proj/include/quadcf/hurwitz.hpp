#pragma once

#include <gmpxx.h>

#include "quadcf/gaussian.hpp"
#include "quadcf/quad_ext.hpp"

namespace quadcf {

/// Complete quotient of a Hurwitz expansion: u + v sqrt(N) over the Gaussian rationals.
using ComplexSurd = QuadExt<GaussianRational>;

namespace detail {

/// sign(p*sqrt(R) + q) for rationals p, q and R >= 0.
inline int sign_lin_sqrt(const Rational& p, const Rational& q, const Rational& R) {
  int sp = (R == 0) ? 0 : sign(p);
  int sq = sign(q);
  if (sp == 0) return sq;
  if (sq == 0 || sq == sp) return sp;
  Rational lhs = p * p * R;
  Rational rhs = q * q;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sp : -sp;
}

/// sign(x + y) given sign(x), sign(y) and sign(x^2 - y^2).
inline int sign_of_sum(int sx, int sy, int sq_diff) {
  if (sx == 0) return sy;
  if (sy == 0 || sx == sy) return sx;
  if (sq_diff == 0) return 0;
  return sq_diff > 0 ? sx : sy;
}

/// w = v * sqrt(N) on the principal branch, described through M = w^2 = m1 + m2 i:
///   re(w) = re_sign * sqrt((|M| + m1)/2),  im(w) = im_sign * sqrt((|M| - m1)/2).
struct ScaledRoot {
  Rational m1, m2, modulus_sq;
  int re_sign = 0;
  int im_sign = 0;
};

inline ScaledRoot scaled_root(const GaussianRational& v, const GaussianRational& n) {
  const Rational a = n.re(), b = n.im();
  const Rational A = v.re(), B = v.im();
  const Rational n_sq = a * a + b * b;

  // principal sqrt(N) = x + y i: x >= 0 (zero only on the non-positive real axis)
  const int sx = (b == 0 && a <= 0) ? 0 : 1;
  const int sy = (b != 0) ? sign(b) : (a < 0 ? 1 : 0);

  const Rational A2 = A * A, B2 = B * B;
  // re(w) = A x - B y, and (A x)^2 - (B y)^2 = ((A^2 - B^2)|N| + a(A^2 + B^2)) / 2
  const int re = sign_of_sum(sign(A) * sx, -sign(B) * sy, sign_lin_sqrt(A2 - B2, a * (A2 + B2), n_sq));
  // im(w) = A y + B x, and (A y)^2 - (B x)^2 = ((A^2 - B^2)|N| - a(A^2 + B^2)) / 2
  const int im = sign_of_sum(sign(A) * sy, sign(B) * sx, sign_lin_sqrt(A2 - B2, -a * (A2 + B2), n_sq));

  const GaussianRational m = v * v * n;
  ScaledRoot out;
  out.m1 = m.re();
  out.m2 = m.im();
  out.modulus_sq = out.m1 * out.m1 + out.m2 * out.m2;
  const int principal_im = out.m2 != 0 ? sign(out.m2) : (out.m1 < 0 ? 1 : 0);
  const int sigma = (re > 0 || (re == 0 && im >= 0)) ? 1 : -1;
  out.re_sign = sigma;
  out.im_sign = sigma * principal_im;
  return out;
}

/// floor(c + rho * sqrt(Y)) with Y = (|M| + kappa*m1)/2, kappa = +1 (real part) or -1 (imaginary part).
inline BigInt floor_component(const Rational& c, int rho, int kappa, const ScaledRoot& w) {
  const Rational km1 = kappa * w.m1;
  // sign(sqrt(Y) - e)
  auto sign_root_minus = [&](const Rational& e) -> int {
    if (e < 0) return 1;
    return sign_lin_sqrt(Rational(1), Rational(km1 - 2 * e * e), w.modulus_sq);
  };
  // sign(c + rho sqrt(Y) - k)
  auto cmp = [&](const BigInt& k) -> int {
    Rational d = Rational(k) - c;
    if (rho == 0) return -sign(d);
    if (rho > 0) return sign_root_minus(d);
    return -sign_root_minus(Rational(-d));
  };

  // floating estimate, then exact correction
  mpf_class modulus(0, 256), y(0, 256), approx(0, 256);
  modulus = sqrt(mpf_class(w.modulus_sq, 256));
  y = (modulus + mpf_class(km1, 256)) / 2;
  if (y < 0) y = 0;
  approx = mpf_class(c, 256) + rho * sqrt(y);
  mpf_class fl = floor(approx);
  BigInt k(fl);
  while (cmp(k) < 0) --k;
  while (cmp(BigInt(k + 1)) >= 0) ++k;
  return k;
}

}  // namespace detail

/// Nearest Gaussian integer to u + v sqrt(N) (principal branch of sqrt N), ties rounded up
/// per component. Every comparison is exact; a 256-bit float estimate only seeds the search.
inline GaussianInt hurwitz_round(const ComplexSurd& z) {
  const detail::ScaledRoot w = detail::scaled_root(z.v(), z.radicand());
  const Rational half(1, 2);
  BigInt re = detail::floor_component(Rational(z.u().re() + half), w.re_sign, +1, w);
  BigInt im = detail::floor_component(Rational(z.u().im() + half), w.im_sign, -1, w);
  return {std::move(re), std::move(im)};
}

}  // namespace quadcf
