#include <gtest/gtest.h>

#include <random>

#include "quadcf.hpp"

using namespace quadcf;

namespace {

Mat2<BigInt> M(long a, long b, long c, long d) { return {BigInt(a), BigInt(b), BigInt(c), BigInt(d)}; }

GaussianRational GR(long re_num, long im_num, long den) {
  return GaussianRational(make_rational(BigInt(re_num), BigInt(den)), make_rational(BigInt(im_num), BigInt(den)));
}

}  // namespace

TEST(MatMul, FibonacciStep) {
  EXPECT_EQ(M(1, 1, 1, 0) * M(1, 1, 1, 0), M(2, 1, 1, 1));
  EXPECT_EQ(mat_mul(mat_mul(M(1, 1, 1, 0), M(1, 1, 1, 0)), M(1, 1, 1, 0)), M(3, 2, 2, 1));
}

TEST(MatInv, Oracles) {
  EXPECT_EQ(mat_inv_unimodular(M(1, 0, 0, 1)), M(1, 0, 0, 1));
  EXPECT_EQ(mat_inv_unimodular(M(5, 3, 3, 2)), M(2, -3, -3, 5));
  EXPECT_EQ(mat_inv_unimodular(M(3, 2, 2, 1)), M(-1, 2, 2, -3));
  EXPECT_THROW(mat_inv_unimodular(M(2, 0, 0, 1)), Error);
}

TEST(MatInv, GaussianUnitDeterminant) {
  using G = GaussianInt;
  Mat2<G> a{G(0L, 1L), G(0L), G(0L), G(1L)};  // det = i
  Mat2<G> inv = mat_inv_unimodular(a);
  EXPECT_EQ(a * inv, Mat2<G>::identity());
}

TEST(LinComb, Oracles) {
  const auto a = M(5, 3, 3, 2);
  EXPECT_EQ(lin_comb(BigInt(1), a, BigInt(0), M(7, 7, 7, 7)), a);
  EXPECT_EQ(lin_comb(BigInt(2), Mat2<BigInt>::identity(), BigInt(-1), Mat2<BigInt>::identity()),
            Mat2<BigInt>::identity());
}

TEST(Isqrt, Oracles) {
  EXPECT_EQ(isqrt(BigInt(0)).root, 0);
  EXPECT_TRUE(isqrt(BigInt(0)).exact);
  EXPECT_EQ(isqrt(BigInt(108)).root, 10);
  EXPECT_FALSE(isqrt(BigInt(108)).exact);
  EXPECT_EQ(isqrt(BigInt(49)).root, 7);
  EXPECT_TRUE(isqrt(BigInt(49)).exact);
  try {
    isqrt(BigInt(-1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NegativeRadicand);
  }
}

TEST(Isqrt, Huge) {
  BigInt big = parse_bigint("123456789012345678901234567890123456789");
  auto r = isqrt(big * big + 1);
  EXPECT_EQ(r.root, big);
  EXPECT_FALSE(r.exact);
}

TEST(BigIntText, RoundTripAndErrors) {
  EXPECT_EQ(to_string(parse_bigint("-1234567890123456789012345")), "-1234567890123456789012345");
  EXPECT_THROW(parse_bigint("12a"), Error);
  EXPECT_THROW(parse_bigint(""), Error);
}

TEST(GaussRound, Oracles) {
  EXPECT_EQ(gauss_round(GR(1, 0, 2)), GaussianInt(1L));
  EXPECT_EQ(gauss_round(GR(32, -17, 10)), GaussianInt(3L, -2L));
  EXPECT_EQ(gauss_round(GR(-1, -1, 2)), GaussianInt(0L, 0L));
}

TEST(GaussianText, Forms) {
  EXPECT_EQ(to_string(GaussianInt(3L, 1L)), "3+i");
  EXPECT_EQ(to_string(GaussianInt(1L, -1L)), "1-i");
  EXPECT_EQ(to_string(GaussianInt(0L, 3L)), "3i");
  EXPECT_EQ(to_string(GaussianInt(0L, -1L)), "-i");
  EXPECT_EQ(to_string(GaussianInt(-2L, 0L)), "-2");
  for (const char* s : {"3+i", "1-i", "3i", "-i", "i", "-2", "-2+3i", "0"})
    EXPECT_EQ(to_string(parse_gaussian(s)), s) << s;
  EXPECT_THROW(parse_gaussian("3+"), Error);
}

TEST(GaussianRationalCanon, DenominatorPositiveInteger) {
  GaussianRational z(GaussianInt(1L, 1L), GaussianInt(1L, -1L));  // (1+i)/(1-i) = i
  EXPECT_TRUE(z.is_integral());
  EXPECT_EQ(z.numerator(), GaussianInt(0L, 1L));
  GaussianRational w(GaussianInt(2L, 4L), GaussianInt(-4L));
  EXPECT_EQ(w.den(), 2);
  EXPECT_EQ(w.numerator(), GaussianInt(-1L, -2L));
}

TEST(QuadExt, ConjugateAndInverse) {
  using Q = QuadExt<Rational>;
  Q x(Rational(4, 3), Rational(1, 6), Rational(3));
  Q prod = x * x.conjugate();
  EXPECT_EQ(prod.v(), 0);
  EXPECT_EQ(prod.u(), x.norm());
  EXPECT_EQ(x * inverse(x), Q::constant(Rational(1), Rational(3)));
  EXPECT_THROW(inverse(Q(Rational(2), Rational(1), Rational(4))), Error);
}

// ---- properties ----

TEST(ExactArithProperty, UnimodularDetAndInverse) {
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<long> dist(-9, 9);
  auto random_unimodular = [&]() {
    Mat2<BigInt> m = Mat2<BigInt>::identity();
    for (int i = 0; i < 6; ++i) m = m * M(dist(rng), 1, 1, 0);  // det -1 per factor
    return m;
  };
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_unimodular();
    auto b = random_unimodular();
    EXPECT_EQ((a * b).det(), a.det() * b.det());
    EXPECT_EQ(mat_inv_unimodular(a) * a, Mat2<BigInt>::identity());
  }
}

TEST(ExactArithProperty, GaussRoundTranslationAndDistance) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 40);
  const Rational half(1, 2);
  for (int trial = 0; trial < 500; ++trial) {
    GaussianRational z = GR(num(rng), num(rng), den(rng));
    GaussianInt g(num(rng), num(rng));
    GaussianInt rz = gauss_round(z);
    EXPECT_EQ(gauss_round(z + GaussianRational(g)), rz + g);
    GaussianRational diff = z - GaussianRational(rz);
    EXPECT_LE(abs(diff.re()), half);
    EXPECT_LE(abs(diff.im()), half);
  }
}

TEST(ExactArithProperty, QuadExtConjugateAndInverse) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    GaussianRational n = GR(num(rng), num(rng), 1);
    QuadExt<GaussianRational> x(GR(num(rng), num(rng), den(rng)), GR(num(rng), num(rng), den(rng)), n);
    EXPECT_TRUE((x * x.conjugate()).v().is_zero());
    if (x.norm().is_zero()) continue;
    EXPECT_EQ(x * inverse(x), QuadExt<GaussianRational>::constant(GaussianRational(1L), n));
  }
}
