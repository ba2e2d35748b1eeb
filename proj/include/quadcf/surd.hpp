#pragma once

#include <string>
#include <utility>

#include "quadcf/bigint.hpp"

namespace quadcf {

/// Complete quotient (P + sqrt(D)) / Q of a real quadratic irrational.
/// Invariants: Q != 0, Q | (D - P^2), D >= 0 and not a perfect square.
struct SurdState {
  BigInt P;
  BigInt Q;
  BigInt D;

  friend bool operator==(const SurdState&, const SurdState&) = default;

  bool valid() const {
    if (Q == 0 || D < 0) return false;
    if (isqrt(D).exact) return false;
    return mpz_divisible_p(BigInt(D - P * P).get_mpz_t(), Q.get_mpz_t()) != 0;
  }

  std::string key() const { return P.get_str(16) + ':' + Q.get_str(16); }
};

/// floor((P + sqrt D)/Q). Since sqrt D is irrational, floor(sqrt D) can stand in for it
/// when Q > 0; for Q < 0 the value is never an integer, so floor = -(floor(|.|) + 1).
inline BigInt floor_surd(const SurdState& s) {
  BigInt root = isqrt(s.D).root;
  if (s.Q > 0) return floor_div(s.P + root, s.Q);
  BigInt absq = -s.Q;
  return -floor_div(s.P + root, absq) - 1;
}

/// Rewrites (a + b sqrt N)/c with rational a, b, c into a SurdState (b != 0, c != 0).
inline SurdState normalize_surd(const Rational& a, const Rational& b, const Rational& c, const BigInt& n) {
  if (c == 0) throw Error(Errc::DivisionByZero, "zero denominator in quadratic irrational");
  BigInt lcm;
  mpz_lcm(lcm.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  BigInt A = a.get_num() * (lcm / a.get_den());
  BigInt B = b.get_num() * (lcm / b.get_den());
  BigInt C = c.get_num() * (lcm / c.get_den());
  int sb = sign(B);
  SurdState s{BigInt(A * sb), BigInt(C * sb), BigInt(B * B * n)};
  BigInt residue = s.D - s.P * s.P;
  if (!mpz_divisible_p(residue.get_mpz_t(), s.Q.get_mpz_t())) {
    BigInt absq = abs(s.Q);
    s.P *= absq;
    s.D *= s.Q * s.Q;
    s.Q *= absq;
  }
  return s;
}

/// One step alpha -> 1/(alpha - c) with c = floor(alpha).
inline SurdState surd_step(const SurdState& s, const BigInt& c) {
  BigInt p_next = c * s.Q - s.P;
  BigInt q_next;
  mpz_divexact(q_next.get_mpz_t(), BigInt(s.D - p_next * p_next).get_mpz_t(), s.Q.get_mpz_t());
  return {std::move(p_next), std::move(q_next), s.D};
}

}  // namespace quadcf
