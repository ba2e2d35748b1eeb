#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <utility>

#include "quadcf/errors.hpp"

namespace quadcf {

using BigInt = mpz_class;
using Rational = mpq_class;

inline int sign(const BigInt& a) { return sgn(a); }
inline int sign(const Rational& a) { return sgn(a); }

inline bool is_odd(const BigInt& a) { return mpz_odd_p(a.get_mpz_t()) != 0; }

/// (-1)^n as an int, from the parity of n only.
inline int neg_one_pow(const BigInt& n) { return is_odd(n) ? -1 : 1; }
constexpr int neg_one_pow(long long n) { return (n % 2 == 0) ? 1 : -1; }

/// Parses an optionally signed decimal integer; surrounding whitespace is not accepted.
inline BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) throw Error(Errc::Parse, "empty integer literal '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw Error(Errc::Parse, "bad integer literal '" + std::string(text) + "'");
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

inline std::string to_string(const BigInt& a) { return a.get_str(10); }

inline std::string to_string(const Rational& a) { return a.get_str(10); }

struct IsqrtResult {
  BigInt root;
  bool exact;
};

/// floor(sqrt(n)) and whether n is a perfect square.
inline IsqrtResult isqrt(const BigInt& n) {
  if (n < 0) throw Error(Errc::NegativeRadicand, "isqrt of " + to_string(n));
  BigInt s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  bool exact = (s * s == n);
  return {std::move(s), exact};
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw Error(Errc::DivisionByZero, "floor_div by zero");
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline BigInt floor(const Rational& x) { return floor_div(x.get_num(), x.get_den()); }

/// Nearest integer, ties toward +infinity.
inline BigInt round_half_up(const Rational& x) {
  return floor_div(2 * x.get_num() + x.get_den(), 2 * x.get_den());
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace quadcf
