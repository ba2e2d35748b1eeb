#pragma once

#include <cctype>
#include <compare>
#include <string>
#include <string_view>
#include <utility>

#include "quadcf/bigint.hpp"

namespace quadcf {

/// re + im*i with i^2 = -1.
struct GaussianInt {
  BigInt re;
  BigInt im;

  GaussianInt() : re(0), im(0) {}
  GaussianInt(long r) : re(r), im(0) {}  // NOLINT: integers embed implicitly
  GaussianInt(long r, long i) : re(r), im(i) {}
  GaussianInt(BigInt r) : re(std::move(r)), im(0) {}  // NOLINT
  GaussianInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianInt unit_i() { return {0L, 1L}; }

  bool is_real() const { return im == 0; }

  friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
    return a.re == b.re && a.im == b.im;
  }

  GaussianInt& operator+=(const GaussianInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianInt& operator-=(const GaussianInt& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianInt& operator*=(const GaussianInt& o) {
    BigInt r = re * o.re - im * o.im;
    BigInt i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
  friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
  friend GaussianInt operator*(GaussianInt a, const GaussianInt& b) { return a *= b; }
  friend GaussianInt operator*(GaussianInt a, long k) {
    a.re *= k;
    a.im *= k;
    return a;
  }
  friend GaussianInt operator*(long k, GaussianInt a) { return std::move(a) * k; }
  friend GaussianInt operator-(GaussianInt a) {
    a.re = -a.re;
    a.im = -a.im;
    return a;
  }
};

inline GaussianInt conj(const GaussianInt& z) { return {z.re, BigInt(-z.im)}; }
inline BigInt norm(const GaussianInt& z) { return z.re * z.re + z.im * z.im; }

inline bool is_unit(const BigInt& a) { return a == 1 || a == -1; }
inline bool is_unit(const GaussianInt& z) { return norm(z) == 1; }

/// Inverse of a ring unit (caller guarantees is_unit).
inline BigInt unit_inverse(const BigInt& a) { return a; }
inline GaussianInt unit_inverse(const GaussianInt& z) { return conj(z); }

/// Exact quotient a/b; throws unless b divides a in Z[i].
inline GaussianInt div_exact(const GaussianInt& a, const GaussianInt& b) {
  BigInt n = norm(b);
  if (n == 0) throw Error(Errc::DivisionByZero, "Gaussian division by zero");
  GaussianInt t = a * conj(b);
  if (!mpz_divisible_p(t.re.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(t.im.get_mpz_t(), n.get_mpz_t()))
    throw Error(Errc::DivisionByZero, "inexact Gaussian division");
  BigInt r, i;
  mpz_divexact(r.get_mpz_t(), t.re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(i.get_mpz_t(), t.im.get_mpz_t(), n.get_mpz_t());
  return {std::move(r), std::move(i)};
}

inline std::string to_string(const GaussianInt& z) {
  if (z.im == 0) return to_string(z.re);
  std::string imag;
  if (z.im == 1) imag = "i";
  else if (z.im == -1) imag = "-i";
  else imag = to_string(z.im) + "i";
  if (z.re == 0) return imag;
  std::string out = to_string(z.re);
  if (z.im > 0) out += '+';
  return out + imag;
}

/// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i", "a+i" (no whitespace).
inline GaussianInt parse_gaussian(std::string_view text) {
  auto fail = [&] { throw Error(Errc::Parse, "bad Gaussian integer '" + std::string(text) + "'"); };
  if (text.empty()) fail();
  if (text.back() != 'i') return GaussianInt(parse_bigint(text));

  std::string_view body = text.substr(0, text.size() - 1);
  // split at the last sign that is not the leading one
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view real_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view imag_part = split == std::string_view::npos ? body : body.substr(split);

  BigInt im;
  if (imag_part.empty() || imag_part == "+") im = 1;
  else if (imag_part == "-") im = -1;
  else im = parse_bigint(imag_part);
  BigInt re = real_part.empty() ? BigInt(0) : parse_bigint(real_part);
  if (split != std::string_view::npos && real_part.empty()) fail();
  return {std::move(re), std::move(im)};
}

/// (re + im*i)/den with den > 0 and gcd(re, im, den) = 1.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0), den_(1) {}
  GaussianRational(long v) : re_(v), im_(0), den_(1) {}  // NOLINT
  GaussianRational(GaussianInt z) : re_(std::move(z.re)), im_(std::move(z.im)), den_(1) {}  // NOLINT
  GaussianRational(const Rational& q) : re_(q.get_num()), im_(0), den_(q.get_den()) {}  // NOLINT
  GaussianRational(const Rational& re, const Rational& im) {
    den_ = re.get_den() * im.get_den();
    re_ = re.get_num() * im.get_den();
    im_ = im.get_num() * re.get_den();
    normalize();
  }
  GaussianRational(GaussianInt num, const GaussianInt& den) {
    if (norm(den) == 0) throw Error(Errc::DivisionByZero, "Gaussian rational with zero denominator");
    GaussianInt top = num * conj(den);
    re_ = std::move(top.re);
    im_ = std::move(top.im);
    den_ = norm(den);
    normalize();
  }

  const BigInt& re_num() const { return re_; }
  const BigInt& im_num() const { return im_; }
  const BigInt& den() const { return den_; }

  Rational re() const { return make_rational(re_, den_); }
  Rational im() const { return make_rational(im_, den_); }
  GaussianInt numerator() const { return {re_, im_}; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_integral() const { return den_ == 1; }
  bool is_real() const { return im_ == 0; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_ && a.den_ == b.den_;
  }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    GaussianRational r;
    r.re_ = a.re_ * b.den_ + b.re_ * a.den_;
    r.im_ = a.im_ * b.den_ + b.im_ * a.den_;
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
  }
  friend GaussianRational operator-(const GaussianRational& a) {
    GaussianRational r = a;
    r.re_ = -r.re_;
    r.im_ = -r.im_;
    return r;
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) { return a + (-b); }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    GaussianRational r;
    r.re_ = a.re_ * b.re_ - a.im_ * b.im_;
    r.im_ = a.re_ * b.im_ + a.im_ * b.re_;
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
  }
  friend GaussianRational inverse(const GaussianRational& a) {
    if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    // den/(re + im i) = den (re - im i) / (re^2 + im^2)
    GaussianRational r;
    BigInt n = a.re_ * a.re_ + a.im_ * a.im_;
    r.re_ = a.den_ * a.re_;
    r.im_ = -(a.den_ * a.im_);
    r.den_ = std::move(n);
    r.normalize();
    return r;
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) { return a * inverse(b); }

  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  friend GaussianRational conj(const GaussianRational& a) {
    GaussianRational r = a;
    r.im_ = -r.im_;
    return r;
  }

  friend std::string to_string(const GaussianRational& a) {
    std::string num = to_string(GaussianInt(a.re_, a.im_));
    if (a.den_ == 1) return num;
    bool compound = a.re_ != 0 && a.im_ != 0;
    return (compound ? "(" + num + ")" : num) + "/" + to_string(a.den_);
  }

 private:
  void normalize() {
    if (den_ < 0) {
      den_ = -den_;
      re_ = -re_;
      im_ = -im_;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), re_.get_mpz_t(), im_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
    if (g != 1 && g != 0) {
      mpz_divexact(re_.get_mpz_t(), re_.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(im_.get_mpz_t(), im_.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
  }

  BigInt re_;
  BigInt im_;
  BigInt den_;
};

/// Componentwise nearest Gaussian integer; a half-integral component rounds toward +infinity.
inline GaussianInt gauss_round(const GaussianRational& z) {
  return {round_half_up(z.re()), round_half_up(z.im())};
}

/// Exact square root in Z[i] if z is a perfect square there.
inline std::pair<bool, GaussianInt> gaussian_sqrt_exact(const GaussianInt& z) {
  auto [modulus, modulus_exact] = isqrt(norm(z));
  if (!modulus_exact) return {false, {}};
  BigInt twice_re_sq = modulus + z.re;  // 2x^2
  BigInt twice_im_sq = modulus - z.re;  // 2y^2
  if (is_odd(twice_re_sq) || is_odd(twice_im_sq)) return {false, {}};
  auto [x, x_exact] = isqrt(BigInt(twice_re_sq / 2));
  auto [y, y_exact] = isqrt(BigInt(twice_im_sq / 2));
  if (!x_exact || !y_exact) return {false, {}};
  if (z.im < 0) y = -y;
  GaussianInt root(x, y);
  if (root * root != z) return {false, {}};
  return {true, root};
}

}  // namespace quadcf
