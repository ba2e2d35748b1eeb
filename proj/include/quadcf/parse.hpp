#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "quadcf/expansion.hpp"
#include "quadcf/gaussian.hpp"
#include "quadcf/hurwitz.hpp"

namespace quadcf {

/// u + v sqrt(N) as written by the user; u, v, N Gaussian rationals.
struct ParsedSurd {
  GaussianRational u;
  GaussianRational v;
  std::optional<GaussianRational> radicand;
};

namespace detail {

/*
 * expr   := term (('+' | '-') term)*
 * term   := unary (('*' | '/')? unary)*          juxtaposition multiplies: "(1/2)sqrt(3)", "2i"
 * unary  := ('-' | '+') unary | atom
 * atom   := integer | 'i' | 'sqrt' '(' expr ')' | '(' expr ')'
 */
class SurdParser {
 public:
  explicit SurdParser(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) src_ += ch;
  }

  ParsedSurd run() {
    ParsedSurd out = expr();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::Parse, why + " at offset " + std::to_string(pos_) + " in '" + src_ + "'");
  }

  bool peek(char ch) const { return pos_ < src_.size() && src_[pos_] == ch; }
  bool starts(std::string_view word) const { return std::string_view(src_).substr(pos_, word.size()) == word; }
  void expect(char ch) {
    if (!peek(ch)) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  static std::optional<GaussianRational> merge(const ParsedSurd& a, const ParsedSurd& b) {
    if (a.radicand && b.radicand && !(*a.radicand == *b.radicand))
      throw Error(Errc::Parse, "expression mixes different square roots");
    return a.radicand ? a.radicand : b.radicand;
  }

  static ParsedSurd add(const ParsedSurd& a, const ParsedSurd& b, bool subtract) {
    auto rad = merge(a, b);
    if (subtract) return {a.u - b.u, a.v - b.v, rad};
    return {a.u + b.u, a.v + b.v, rad};
  }

  static ParsedSurd mul(const ParsedSurd& a, const ParsedSurd& b) {
    auto rad = merge(a, b);
    GaussianRational n = rad.value_or(GaussianRational(0L));
    return {a.u * b.u + a.v * b.v * n, a.u * b.v + a.v * b.u, rad};
  }

  static ParsedSurd div(const ParsedSurd& a, const ParsedSurd& b) {
    auto rad = merge(a, b);
    GaussianRational n = rad.value_or(GaussianRational(0L));
    GaussianRational nrm = b.u * b.u - b.v * b.v * n;
    if (nrm.is_zero()) throw Error(Errc::Parse, "division by zero");
    ParsedSurd inv{b.u / nrm, -(b.v / nrm), rad};
    return mul(a, inv);
  }

  ParsedSurd expr() {
    ParsedSurd acc = term();
    while (peek('+') || peek('-')) {
      bool minus = src_[pos_++] == '-';
      acc = add(acc, term(), minus);
    }
    return acc;
  }

  bool atom_follows() const {
    return pos_ < src_.size() &&
           (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '(' || src_[pos_] == 'i' ||
            starts("sqrt"));
  }

  ParsedSurd term() {
    ParsedSurd acc = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = mul(acc, unary());
      } else if (peek('/')) {
        ++pos_;
        acc = div(acc, unary());
      } else if (atom_follows()) {
        acc = mul(acc, unary());
      } else {
        return acc;
      }
    }
  }

  ParsedSurd unary() {
    if (peek('-')) {
      ++pos_;
      ParsedSurd x = unary();
      return {-x.u, -x.v, x.radicand};
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return atom();
  }

  ParsedSurd atom() {
    if (starts("sqrt")) {
      pos_ += 4;
      expect('(');
      ParsedSurd arg = expr();
      expect(')');
      if (!arg.v.is_zero()) fail("nested square roots are not supported");
      return {GaussianRational(0L), GaussianRational(1L), arg.u};
    }
    if (peek('(')) {
      ++pos_;
      ParsedSurd inner = expr();
      expect(')');
      return inner;
    }
    if (peek('i')) {
      ++pos_;
      return {GaussianRational(GaussianInt::unit_i()), GaussianRational(0L), std::nullopt};
    }
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number, 'i', 'sqrt(' or '('");
    return {GaussianRational(GaussianInt(parse_bigint(std::string_view(src_).substr(start, pos_ - start)))),
            GaussianRational(0L), std::nullopt};
  }

  std::string src_;
  std::size_t pos_ = 0;
};

/// sqrt(z/d) = sqrt(z d)/d: moves a rational radicand's denominator into v.
inline void integralize_radicand(ParsedSurd& s) {
  if (!s.radicand || s.radicand->is_integral()) return;
  const BigInt d = s.radicand->den();
  GaussianInt scaled = s.radicand->numerator() * GaussianInt(d);
  s.v = s.v * inverse(GaussianRational(GaussianInt(d)));
  s.radicand = GaussianRational(scaled);
}

}  // namespace detail

inline ParsedSurd parse_surd(std::string_view text) {
  ParsedSurd s = detail::SurdParser(text).run();
  if (!s.radicand || s.v.is_zero())
    throw Error(Errc::PerfectSquare, "'" + std::string(text) + "' is rational (no square-root term)");
  return s;
}

/// Real reading of the input: (a + b sqrt N)/1 with integer N > 1.
inline RealCF expand_real(const ParsedSurd& parsed, std::size_t max_steps = 1'000'000) {
  ParsedSurd s = parsed;
  if (!s.u.is_real() || !s.v.is_real() || !s.radicand->is_real())
    throw Error(Errc::UnsupportedRadicand, "complex input needs the Hurwitz expansion");
  if (s.radicand->re() <= 1)
    throw Error(Errc::UnsupportedRadicand, "radicand " + to_string(*s.radicand) + " must exceed 1");
  detail::integralize_radicand(s);
  return expand_real(s.u.re(), s.v.re(), Rational(1), s.radicand->re_num(), max_steps);
}

inline ComplexSurd to_complex_surd(const ParsedSurd& parsed) {
  ParsedSurd s = parsed;
  detail::integralize_radicand(s);
  return ComplexSurd(s.u, s.v, *s.radicand);
}

}  // namespace quadcf
