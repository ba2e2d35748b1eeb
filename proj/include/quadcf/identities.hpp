#pragma once

#include <array>
#include <string>
#include <string_view>

#include "quadcf/chebyshev.hpp"
#include "quadcf/gaussian.hpp"

namespace quadcf {

enum class Identity {
  NestingT,            // T_{km} = T_k(T_m)                      (extra = m)
  NestingU,            // U_{km-1} = U_{k-1}(T_m) U_{m-1}        (extra = m)
  PellTU,              // T_k^2 - (x^2 - 1) U_{k-1}^2 = 1
  Prop3_1,             // T_k(-T_2) = (-1)^k T_{2k},  2x U_k(-T_2) = (-1)^k U_{2k+1}
  Prop3_2,             // T_k(Tbar_2) = Tbar_{2k},   2x U_k(Tbar_2) = Ubar_{2k+1}
  Prop3_3,             // V_k(-T_2) = (-1)^k U_{2k},  x W_k(-T_2) = (-1)^k T_{2k+1}
  Prop3_4,             // V_k(Tbar_2) = Ubar_{2k},   x W_k(Tbar_2) = Tbar_{2k+1}
  Mgr,                 // T_l W_k(-T_{2l}) = (-1)^k T_{(2k+1)l}  (extra = l)
  ScalingDilated,      // T'_k(x) = 2 T_k(x/2),  U'_k(x) = U_k(x/2)
  ScalingSignChanged,  // Fbar_k(x) = i^k F_k(x/i) for F in {T, U, T', U'}
  TraceProp1,          // det M = 1:  Tr(M^k) = T'_k(Tr M)         (M built from x, extra)
  TraceProp2,          // det M = -1: Tr(M^k) = Tbar'_k(Tr M)
};

inline constexpr std::array<std::pair<Identity, std::string_view>, 12> kIdentityNames{{
    {Identity::NestingT, "nesting-T"},
    {Identity::NestingU, "nesting-U"},
    {Identity::PellTU, "pell-TU"},
    {Identity::Prop3_1, "prop3-1"},
    {Identity::Prop3_2, "prop3-2"},
    {Identity::Prop3_3, "prop3-3"},
    {Identity::Prop3_4, "prop3-4"},
    {Identity::Mgr, "mgr"},
    {Identity::ScalingDilated, "scaling-dilated"},
    {Identity::ScalingSignChanged, "scaling-signchanged"},
    {Identity::TraceProp1, "trace-prop1"},
    {Identity::TraceProp2, "trace-prop2"},
}};

inline std::string_view identity_name(Identity id) {
  for (const auto& [tag, name] : kIdentityNames)
    if (tag == id) return name;
  return "?";
}

inline Identity parse_identity(std::string_view name) {
  for (const auto& [tag, text] : kIdentityNames)
    if (text == name) return tag;
  throw Error(Errc::UnknownIdentity, "unknown identity '" + std::string(name) + "'");
}

namespace detail {

inline BigInt cheb(Family f, long k, const BigInt& x) {
  if (k < 0) return BigInt(0);  // U_{-1} = 0
  return eval_naive(f, k, x);
}

inline BigInt signed_unit(long k) { return BigInt(neg_one_pow(k)); }

/// [[1, x], [0, 1]] [[1, 0], [e, 1]], optionally followed by the swap [[0, 1], [1, 0]] (det -1).
inline Mat2<BigInt> unimodular_from(const BigInt& x, long e, bool negative_det) {
  Mat2<BigInt> m{BigInt(1 + x * e), x, BigInt(e), BigInt(1)};
  if (negative_det) m = m * Mat2<BigInt>{BigInt(0), BigInt(1), BigInt(1), BigInt(0)};
  return m;
}

inline bool scaling_sign_changed(Family plain, Family bar, long k, const BigInt& x) {
  // i^k F_k(x / i) with x / i = -i x, evaluated exactly in Z[i]
  const GaussianInt arg(BigInt(0), BigInt(-x));
  GaussianInt lhs = eval_naive(plain, k, arg);
  GaussianInt ik(1L);
  for (long j = 0; j < k % 4; ++j) ik = ik * GaussianInt::unit_i();
  lhs = lhs * ik;
  return lhs == GaussianInt(eval_naive(bar, k, x));
}

}  // namespace detail

/// Evaluates both sides of the identity exactly at x and returns whether they agree.
/// `extra` is m for the nesting identities, l for mgr, and the shear parameter for the trace identities.
inline bool check_identity(Identity id, const BigInt& x, long k, long extra = 1) {
  using detail::cheb;
  const BigInt t2 = cheb(Family::T, 2, x);
  const BigInt bar_t2 = cheb(Family::BarT, 2, x);
  const BigInt sk = detail::signed_unit(k);
  switch (id) {
    case Identity::NestingT: return cheb(Family::T, k * extra, x) == cheb(Family::T, k, cheb(Family::T, extra, x));
    case Identity::NestingU:
      return cheb(Family::U, k * extra - 1, x) ==
             cheb(Family::U, k - 1, cheb(Family::T, extra, x)) * cheb(Family::U, extra - 1, x);
    case Identity::PellTU: {
      BigInt t = cheb(Family::T, k, x), u = cheb(Family::U, k - 1, x);
      return t * t - (x * x - 1) * u * u == 1;
    }
    case Identity::Prop3_1:
      return cheb(Family::T, k, BigInt(-t2)) == sk * cheb(Family::T, 2 * k, x) &&
             2 * x * cheb(Family::U, k, BigInt(-t2)) == sk * cheb(Family::U, 2 * k + 1, x);
    case Identity::Prop3_2:
      return cheb(Family::T, k, bar_t2) == cheb(Family::BarT, 2 * k, x) &&
             2 * x * cheb(Family::U, k, bar_t2) == cheb(Family::BarU, 2 * k + 1, x);
    case Identity::Prop3_3:
      return cheb(Family::V, k, BigInt(-t2)) == sk * cheb(Family::U, 2 * k, x) &&
             x * cheb(Family::W, k, BigInt(-t2)) == sk * cheb(Family::T, 2 * k + 1, x);
    case Identity::Prop3_4:
      return cheb(Family::V, k, bar_t2) == cheb(Family::BarU, 2 * k, x) &&
             x * cheb(Family::W, k, bar_t2) == cheb(Family::BarT, 2 * k + 1, x);
    case Identity::Mgr: {
      const long l = extra;
      BigInt lhs = cheb(Family::T, l, x) * cheb(Family::W, k, BigInt(-cheb(Family::T, 2 * l, x)));
      return lhs == sk * cheb(Family::T, (1 + 2 * k) * l, x);
    }
    case Identity::ScalingDilated: {
      const Rational half_x = make_rational(x, BigInt(2));
      return Rational(cheb(Family::DilatedT, k, x)) == 2 * eval_naive(Family::T, k, half_x) &&
             Rational(cheb(Family::DilatedU, k, x)) == eval_naive(Family::U, k, half_x);
    }
    case Identity::ScalingSignChanged:
      return detail::scaling_sign_changed(Family::T, Family::BarT, k, x) &&
             detail::scaling_sign_changed(Family::U, Family::BarU, k, x) &&
             detail::scaling_sign_changed(Family::DilatedT, Family::BarDilatedT, k, x) &&
             detail::scaling_sign_changed(Family::DilatedU, Family::BarDilatedU, k, x);
    case Identity::TraceProp1:
    case Identity::TraceProp2: {
      const bool negative = id == Identity::TraceProp2;
      Mat2<BigInt> m = detail::unimodular_from(x, extra, negative);
      Family f = negative ? Family::BarDilatedT : Family::DilatedT;
      return m.pow(static_cast<unsigned long>(k)).trace() == cheb(f, k, m.trace());
    }
  }
  throw Error(Errc::UnknownIdentity, "unhandled identity");
}

inline bool check_identity(std::string_view name, const BigInt& x, long k, long extra = 1) {
  return check_identity(parse_identity(name), x, k, extra);
}

}  // namespace quadcf
