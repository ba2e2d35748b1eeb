#pragma once

#include <bit>
#include <string_view>
#include <utility>

#include "quadcf/mat2.hpp"
#include "quadcf/op_counter.hpp"

namespace quadcf {

/*
 * Chebyshev-type families, all two-term recurrences
 *
 *     v_{k+2} = A x v_{k+1} + s v_k,    v_0 = c0,    v_1 = a1 x + b1.
 *
 *   family                  A   s   v_0  v_1
 *   T  (first kind)         2  -1   1    x
 *   U  (second kind)        2  -1   1    2x
 *   V  (third kind)         2  -1   1    2x - 1
 *   W  (fourth kind)        2  -1   1    2x + 1
 *   T' (dilated, 2T(x/2))   1  -1   2    x
 *   U' (dilated, U(x/2))    1  -1   1    x
 *   sign-changed variants flip s to +1 and keep the initial values.
 *   signed families pick the standard (l even) or sign-changed (l odd) variant.
 */
enum class Family {
  T,
  U,
  V,
  W,
  DilatedT,
  DilatedU,
  BarT,
  BarU,
  BarDilatedT,
  BarDilatedU,
  SignedT,
  SignedU,
  SignedDilatedT,
  SignedDilatedU,
};

struct RecurrenceFamily {
  Family family = Family::T;
  long l = 0;  // only read by the signed families

  int x_coeff() const;
  int trailing_sign() const;
  long v0() const;
  int v1_scale() const;
  int v1_shift() const;

  /// Signed families resolved to their standard or sign-changed member.
  Family resolved() const {
    const bool odd = (l % 2) != 0;
    switch (family) {
      case Family::SignedT: return odd ? Family::BarT : Family::T;
      case Family::SignedU: return odd ? Family::BarU : Family::U;
      case Family::SignedDilatedT: return odd ? Family::BarDilatedT : Family::DilatedT;
      case Family::SignedDilatedU: return odd ? Family::BarDilatedU : Family::DilatedU;
      default: return family;
    }
  }
};

inline int RecurrenceFamily::x_coeff() const {
  switch (resolved()) {
    case Family::DilatedT:
    case Family::DilatedU:
    case Family::BarDilatedT:
    case Family::BarDilatedU: return 1;
    default: return 2;
  }
}

inline int RecurrenceFamily::trailing_sign() const {
  switch (resolved()) {
    case Family::BarT:
    case Family::BarU:
    case Family::BarDilatedT:
    case Family::BarDilatedU: return 1;
    default: return -1;
  }
}

inline long RecurrenceFamily::v0() const {
  Family f = resolved();
  return (f == Family::DilatedT || f == Family::BarDilatedT) ? 2 : 1;
}

inline int RecurrenceFamily::v1_scale() const {
  switch (resolved()) {
    case Family::U:
    case Family::V:
    case Family::W:
    case Family::BarU: return 2;
    default: return 1;
  }
}

inline int RecurrenceFamily::v1_shift() const {
  switch (resolved()) {
    case Family::V: return -1;
    case Family::W: return 1;
    default: return 0;
  }
}

/// k-th member of the family at x by stepping the recurrence (k >= 0).
template <class R>
R eval_naive(const RecurrenceFamily& fam, long k, const R& x) {
  R prev = R(fam.v0());
  if (k == 0) return prev;
  R cur = R(x * static_cast<long>(fam.v1_scale()) + R(static_cast<long>(fam.v1_shift())));
  const R ax = R(x * static_cast<long>(fam.x_coeff()));
  const long s = fam.trailing_sign();
  for (long i = 1; i < k; ++i) {
    R next = R(ax * cur + prev * s);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

template <class R>
R eval_naive(Family f, long k, const R& x) {
  return eval_naive(RecurrenceFamily{f, 0}, k, x);
}

/// Signed Chebyshev polynomials T^l_k and U^l_k; U^l_{-1} := 0.
template <class R>
R signed_T(long l, long k, const R& x) {
  return eval_naive(RecurrenceFamily{Family::SignedT, l}, k, x);
}

template <class R>
R signed_U(long l, long k, const R& x) {
  if (k < 0) return R(0L);
  return eval_naive(RecurrenceFamily{Family::SignedU, l}, k, x);
}

/// Xi^l_n = [[T^l_{n+1}, U^l_{n+1}], [T^l_n, U^l_n]], advanced by M_l = [[2x, -(-1)^l], [1, 0]].
template <class R>
struct ChebMatrixState {
  Mat2<R> xi;
  long n = 0;
  long l = 0;

  const R& t() const { return xi.c; }
  const R& u() const { return xi.d; }
  const R& t_next() const { return xi.a; }
  const R& u_next() const { return xi.b; }
  /// U^l_{n-1} from U_{n+1} = 2x U_n - (-1)^l U_{n-1}.
  R u_prev(const R& x) const {
    R two_x_u = R(x * 2L * xi.d);
    R diff = R(two_x_u - xi.b);
    return (l % 2 == 0) ? diff : R(-diff);
  }
};

template <class R>
Mat2<R> cheb_companion(long l, const R& x) {
  return {R(x * 2L), R((l % 2 == 0) ? -1L : 1L), R(1L), R(0L)};
}

template <class R>
Mat2<R> cheb_xi0(const R& x) {
  return {x, R(x * 2L), R(1L), R(1L)};
}

/// Xi^l_k = M_l^k Xi^l_0 by binary powering.
template <class R>
ChebMatrixState<R> eval_matrix_power(long l, unsigned long k, const R& x, OpCounter* counter = nullptr) {
  Mat2<R> result = Mat2<R>::identity();
  Mat2<R> base = cheb_companion(l, x);
  bool have = false;
  for (unsigned long e = k; e != 0; e >>= 1U) {
    if (e & 1UL) {
      if (have) {
        result = result * base;
        count_mult(counter);
      } else {
        result = base;
        have = true;
      }
    }
    if ((e >> 1U) != 0) {
      base = base * base;
      count_mult(counter);
    }
  }
  Mat2<R> xi = cheb_xi0(x);
  if (have) {
    xi = result * xi;
    count_mult(counter);
  }
  return {std::move(xi), static_cast<long>(k), l};
}

/// Xi^l_n through Xi_{2j} = 2T_j Xi_j - (-1)^{jl} Xi_0 and Xi_{2j+1} = 2T_j Xi_{j+1} - (-1)^{jl} Xi_1,
/// walking the bits of n from the top with the pair (Xi_j, Xi_{j+1}).
template <class R>
ChebMatrixState<R> eval_halve_square(long l, unsigned long n, const R& x, OpCounter* counter = nullptr) {
  const Mat2<R> xi0 = cheb_xi0(x);
  const Mat2<R> xi1 = cheb_companion(l, x) * xi0;
  if (n == 0) return {xi0, 0, l};

  auto sign_pow = [l](unsigned long j) -> R { return R(((j % 2 == 1) && (l % 2 != 0)) ? 1L : -1L); };
  Mat2<R> lo = xi0, hi = xi1;  // (Xi_j, Xi_{j+1})
  unsigned long j = 0;
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    const R two_tj = R(lo.c * 2L);
    const R s_j = sign_pow(j);  // -(-1)^{jl}
    if (((n >> bit) & 1UL) == 0) {
      Mat2<R> even = lin_comb(two_tj, lo, s_j, xi0);
      Mat2<R> odd = lin_comb(two_tj, hi, s_j, xi1);
      count_lin_comb(counter, 2);
      lo = std::move(even);
      hi = std::move(odd);
      j = 2 * j;
    } else {
      const R two_tj1 = R(hi.c * 2L);
      Mat2<R> odd = lin_comb(two_tj, hi, s_j, xi1);
      Mat2<R> even = lin_comb(two_tj1, hi, sign_pow(j + 1), xi0);
      count_lin_comb(counter, 2);
      lo = std::move(odd);
      hi = std::move(even);
      j = 2 * j + 1;
    }
  }
  return {std::move(lo), static_cast<long>(n), l};
}

/*
 * Any family through its companion C = [[A x, s], [1, 0]]. The state carries the family in the
 * first column and the trace sequence tau_j = Tr(C^j) (tau_0 = 2, tau_1 = A x) in the second:
 *     Z_j = [[v_{j+1}, tau_{j+1}], [v_j, tau_j]] = C^j Z_0.
 * Cayley-Hamilton on C^j gives Z_{2j} = tau_j Z_j - det(C)^j Z_0, Z_{2j+1} = tau_j Z_{j+1} - det(C)^j Z_1.
 */
namespace detail {

template <class R>
Mat2<R> family_companion(const RecurrenceFamily& fam, const R& x) {
  return {R(x * static_cast<long>(fam.x_coeff())), R(static_cast<long>(fam.trailing_sign())), R(1L), R(0L)};
}

template <class R>
Mat2<R> family_z0(const RecurrenceFamily& fam, const R& x) {
  R v1 = R(x * static_cast<long>(fam.v1_scale()) + R(static_cast<long>(fam.v1_shift())));
  return {std::move(v1), R(x * static_cast<long>(fam.x_coeff())), R(fam.v0()), R(2L)};
}

}  // namespace detail

template <class R>
R eval_matrix_power(const RecurrenceFamily& fam, unsigned long k, const R& x, OpCounter* counter = nullptr) {
  Mat2<R> z = detail::family_z0(fam, x);
  Mat2<R> base = detail::family_companion(fam, x);
  for (unsigned long e = k; e != 0; e >>= 1U) {
    if (e & 1UL) {
      z = base * z;  // powers of C commute, so the order of application is free
      count_mult(counter);
    }
    if ((e >> 1U) != 0) {
      base = base * base;
      count_mult(counter);
    }
  }
  return z.c;
}

template <class R>
R eval_halve_square(const RecurrenceFamily& fam, unsigned long n, const R& x, OpCounter* counter = nullptr) {
  const Mat2<R> z0 = detail::family_z0(fam, x);
  const Mat2<R> z1 = detail::family_companion(fam, x) * z0;
  if (n == 0) return z0.c;
  // -det(C)^j = -(-s)^j
  const bool det_negative = fam.trailing_sign() > 0;
  auto minus_det_pow = [det_negative](unsigned long j) { return R((det_negative && j % 2 == 1) ? 1L : -1L); };
  Mat2<R> lo = z0, hi = z1;
  unsigned long j = 0;
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    const R tau_j = lo.d;
    if (((n >> bit) & 1UL) == 0) {
      Mat2<R> even = lin_comb(tau_j, lo, minus_det_pow(j), z0);
      Mat2<R> odd = lin_comb(tau_j, hi, minus_det_pow(j), z1);
      lo = std::move(even);
      hi = std::move(odd);
      j = 2 * j;
    } else {
      const R tau_j1 = hi.d;
      Mat2<R> odd = lin_comb(tau_j, hi, minus_det_pow(j), z1);
      Mat2<R> even = lin_comb(tau_j1, hi, minus_det_pow(j + 1), z0);
      lo = std::move(odd);
      hi = std::move(even);
      j = 2 * j + 1;
    }
    count_lin_comb(counter, 2);
  }
  return lo.c;
}

}  // namespace quadcf
