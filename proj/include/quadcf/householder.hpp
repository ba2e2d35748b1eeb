#pragma once

#include <utility>

#include "quadcf/chebyshev.hpp"
#include "quadcf/fast_convergents.hpp"
#include "quadcf/quad_ext.hpp"

namespace quadcf {

template <class S>
struct FieldOf;
template <>
struct FieldOf<BigInt> {
  using type = Rational;
};
template <>
struct FieldOf<GaussianInt> {
  using type = GaussianRational;
};
template <class S>
using field_t = typename FieldOf<S>::type;

inline constexpr int kMaxHouseholderOrder = 64;

/// Order-d Householder iteration for f(x) = x^2 - N; l is the period length of sqrt(N).
template <class S>
struct HouseholderConfig {
  int d = 1;
  S n{0L};
  long l = 1;

  int k() const { return d + 1; }
};

namespace detail {

template <class S>
void check_order(const HouseholderConfig<S>& cfg) {
  if (cfg.d < 1 || cfg.d > kMaxHouseholderOrder)
    throw Error(Errc::InvalidDecomposition, "Householder order must be in [1, 64]");
}

template <class S>
void check_pell(const S& p, const S& q, const HouseholderConfig<S>& cfg) {
  if (!pell_check(p, q, cfg.n, cfg.l))
    throw Error(Errc::PellViolation, "p^2 - N q^2 != (-1)^l for the supplied pair");
}

}  // namespace detail

/// Closed form of one order-d step from (p_{l-1}, q_{l-1}):
/// (T^l_{d+1}(p), q U^l_d(p)) = (p_{kl-1}, q_{kl-1}) with k = d + 1. The pair is not reduced.
template <class S>
ConvergentPair<S> householder_cheb(const S& p, const S& q, const HouseholderConfig<S>& cfg) {
  detail::check_order(cfg);
  detail::check_pell(p, q, cfg);
  return {signed_T(cfg.l, cfg.k(), p), S(q * signed_U(cfg.l, cfg.d, p)), cfg.k() * cfg.l - 1};
}

/// H(x) = x + d (1/f)^{(d-1)}(x) / (1/f)^{(d)}(x), evaluated exactly. With
/// 1/f = (1/(2 sqrt N)) (1/(x - sqrt N) - 1/(x + sqrt N)),
///   (1/f)^{(j)}(x) = (-1)^j j! v_j,   v_j = sqrt-coefficient of (x - sqrt N)^{-(j+1)},
/// since the conjugate term cancels the u-part and the 2 sqrt N.
template <class S>
field_t<S> householder_oracle(const field_t<S>& x, const HouseholderConfig<S>& cfg) {
  using F = field_t<S>;
  detail::check_order(cfg);
  const F n{cfg.n};
  if (x * x - n == F(0L)) throw Error(Errc::DerivativeZero, "f(x) = 0");

  const QuadExt<F> base = inverse(QuadExt<F>(x, F(-1L), n));  // (x - sqrt N)^{-1}
  auto derivative = [&](int j) {
    F fact(1L);
    for (int i = 2; i <= j; ++i) fact = F(fact * F(static_cast<long>(i)));
    F vj = base.pow(static_cast<unsigned>(j + 1)).v();
    F signed_fact = (j % 2 == 0) ? fact : F(-fact);
    return F(signed_fact * vj);
  };
  const F lower = derivative(cfg.d - 1);
  const F upper = derivative(cfg.d);
  if (upper == F(0L)) throw Error(Errc::DerivativeZero, "(1/f)^(d)(x) vanishes");
  return F(x + F(static_cast<long>(cfg.d)) * lower / upper);
}

/// x T_{(d+1)/2}(X) / ((X - 1) U_{(d-1)/2}(X)) with X = 1 - (-1)^l 2 p^2 and x = p/q; odd d only.
template <class S>
field_t<S> householder_X_form(const S& p, const S& q, const HouseholderConfig<S>& cfg) {
  using F = field_t<S>;
  detail::check_order(cfg);
  if (cfg.d % 2 == 0)
    throw Error(Errc::EvenOrderUnsupported, "the X-form is only available for odd orders");
  detail::check_pell(p, q, cfg);
  const S X = S(S(1L) + S(p * p * ((cfg.l % 2 == 0) ? -2L : 2L)));
  const S top = eval_naive(Family::T, (cfg.d + 1) / 2, X);
  const S bottom = S(S(X - S(1L)) * eval_naive(Family::U, (cfg.d - 1) / 2, X));
  return F(F(p) * F(top)) / F(F(q) * F(bottom));
}

/// Reduced ratio p/q in the fraction field.
template <class S>
field_t<S> ratio(const S& p, const S& q) {
  using F = field_t<S>;
  return F(p) / F(q);
}

}  // namespace quadcf
