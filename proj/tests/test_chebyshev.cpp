#include <gtest/gtest.h>

#include <random>

#include "quadcf.hpp"

using namespace quadcf;

namespace {

constexpr Family kAllFamilies[] = {Family::T,           Family::U,          Family::V,           Family::W,
                                   Family::DilatedT,    Family::DilatedU,   Family::BarT,        Family::BarU,
                                   Family::BarDilatedT, Family::BarDilatedU, Family::SignedT,    Family::SignedU,
                                   Family::SignedDilatedT, Family::SignedDilatedU};

BigInt B(long v) { return BigInt(v); }

}  // namespace

TEST(EvalNaive, InitialValues) {
  const BigInt x(7);
  EXPECT_EQ(eval_naive(Family::T, 0, x), 1);
  EXPECT_EQ(eval_naive(Family::T, 1, x), 7);
  EXPECT_EQ(eval_naive(Family::DilatedT, 0, x), 2);
  EXPECT_EQ(eval_naive(Family::DilatedT, 1, x), 7);
  EXPECT_EQ(eval_naive(Family::W, 1, x), 15);
  EXPECT_EQ(eval_naive(Family::V, 1, x), 13);
  EXPECT_EQ(eval_naive(Family::U, 1, x), 14);
  EXPECT_EQ(eval_naive(Family::DilatedU, 1, x), 7);
}

TEST(EvalNaive, KnownValues) {
  EXPECT_EQ(eval_naive(Family::T, 4, B(3)), 577);
  EXPECT_EQ(eval_naive(Family::U, 3, B(3)), 204);
  EXPECT_EQ(eval_naive(Family::T, 3, B(2)), 26);
  EXPECT_EQ(eval_naive(Family::T, 2, B(26)), 1351);
  EXPECT_EQ(eval_naive(Family::T, 6, B(2)), 1351);
}

TEST(EvalMatrixPower, SmallCases) {
  const BigInt x(5);
  EXPECT_EQ(eval_matrix_power(2, 2, x).t(), 2 * x * x - 1);
  EXPECT_EQ(eval_matrix_power(1, 2, x).t(), 2 * x * x + 1);
  auto z = eval_matrix_power(3, 0, x);
  EXPECT_EQ(z.xi, cheb_xi0(x));
  EXPECT_EQ(z.t(), 1);
  EXPECT_EQ(z.u_next(), 2 * x);
}

TEST(EvalHalveSquare, SmallCases) {
  const BigInt x(3);
  EXPECT_EQ(eval_halve_square(4, 0, x).xi, cheb_xi0(x));
  Mat2<BigInt> xi1 = cheb_companion(2L, x) * cheb_xi0(x);
  Mat2<BigInt> want = lin_comb(BigInt(2 * xi1.c), xi1, BigInt(-1), cheb_xi0(x));
  EXPECT_EQ(eval_halve_square(2, 2, x).xi, want);
  EXPECT_EQ(eval_halve_square(1, 5, B(1)).xi, eval_matrix_power(1, 5, B(1)).xi);
}

TEST(ChebMatrixState, UPrev) {
  const BigInt x(4);
  for (long l : {1L, 2L}) {
    auto s = eval_matrix_power(l, 6, x);
    EXPECT_EQ(s.u_prev(x), signed_U(l, 5, x));
    EXPECT_EQ(s.u(), signed_U(l, 6, x));
    EXPECT_EQ(s.t_next(), signed_T(l, 7, x));
  }
}

TEST(SignedFamilies, FactoredForms) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (int trial = 0; trial < 20; ++trial) {
    const BigInt x(dist(rng));
    EXPECT_EQ(signed_T(2, 6, x), (2 * x * x - 1) * (16 * x * x * x * x - 16 * x * x + 1));
    EXPECT_EQ(signed_U(2, 5, x), 2 * x * (2 * x + 1) * (2 * x - 1) * (4 * x * x - 3));
  }
  EXPECT_EQ(signed_T(1, 1, B(9)), 9);
  EXPECT_EQ(signed_U(1, 1, B(9)), 18);
  EXPECT_EQ(signed_U(1, -1, B(9)), 0);
}

TEST(ChebyshevProperty, AllEvaluatorsAgreeForEveryFamily) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-50, 50);
  for (int trial = 0; trial < 50; ++trial) {
    const BigInt x(dist(rng));
    for (Family f : kAllFamilies) {
      for (long l : {1L, 2L}) {
        RecurrenceFamily fam{f, l};
        for (unsigned long k = 0; k <= 64; ++k) {
          const BigInt naive = eval_naive(fam, static_cast<long>(k), x);
          ASSERT_EQ(eval_matrix_power(fam, k, x), naive) << static_cast<int>(f) << " k=" << k;
          ASSERT_EQ(eval_halve_square(fam, k, x), naive) << static_cast<int>(f) << " k=" << k;
        }
      }
    }
  }
}

TEST(ChebyshevProperty, SignedMatrixEvaluatorsAgree) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> dist(-50, 50);
  for (int trial = 0; trial < 50; ++trial) {
    const BigInt x(dist(rng));
    for (long l = 1; l <= 4; ++l) {
      for (unsigned long k = 0; k <= 64; ++k) {
        auto mp = eval_matrix_power(l, k, x);
        auto hs = eval_halve_square(l, k, x);
        ASSERT_EQ(mp.xi, hs.xi);
        ASSERT_EQ(mp.t(), signed_T(l, static_cast<long>(k), x));
        ASSERT_EQ(mp.u(), signed_U(l, static_cast<long>(k), x));
      }
    }
  }
}

TEST(ChebyshevProperty, CompanionDetAndTrace) {
  const BigInt x(3);
  for (long l = 1; l <= 4; ++l) {
    for (unsigned long m = 0; m <= 12; ++m) {
      auto p = cheb_companion(l, x).pow(m);
      EXPECT_EQ(p.det(), neg_one_pow(static_cast<long long>(m * l)));
      EXPECT_EQ(p.trace(), 2 * signed_T(l, static_cast<long>(m), x));
    }
  }
}

TEST(ChebyshevProperty, GaussianArgument) {
  const GaussianInt x(-101025L, 51393L);
  auto mp = eval_matrix_power(12, 5, x);
  auto hs = eval_halve_square(12, 5, x);
  EXPECT_EQ(mp.xi, hs.xi);
  EXPECT_EQ(mp.t_next(), signed_T(12, 6, x));
}

TEST(Identities, Oracles) {
  EXPECT_TRUE(check_identity("nesting-T", B(2), 2, 3));
  EXPECT_TRUE(check_identity("prop3-1", B(5), 1));
  EXPECT_TRUE(check_identity("pell-TU", B(3), 4));
  EXPECT_THROW(check_identity("no-such-identity", B(1), 1), Error);
}

TEST(Identities, NamesRoundTrip) {
  for (const auto& [tag, name] : kIdentityNames) EXPECT_EQ(parse_identity(name), tag);
}

TEST(ChebyshevProperty, IdentitySuite) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> dist(-30, 30);
  for (int trial = 0; trial < 50; ++trial) {
    const BigInt x(dist(rng));
    for (long k = 1; k <= 32; ++k) {
      EXPECT_TRUE(check_identity(Identity::PellTU, x, k));
      EXPECT_TRUE(check_identity(Identity::ScalingDilated, x, k));
      EXPECT_TRUE(check_identity(Identity::ScalingDilated, BigInt(2 * x), k));
      EXPECT_TRUE(check_identity(Identity::ScalingSignChanged, x, k));
      for (long e : {-3L, 1L, 4L}) {
        EXPECT_TRUE(check_identity(Identity::TraceProp1, x, k, e));
        EXPECT_TRUE(check_identity(Identity::TraceProp2, x, k, e));
      }
    }
    for (long k = 1; k <= 8; ++k) {
      for (long m = 1; m <= 8; ++m) {
        EXPECT_TRUE(check_identity(Identity::NestingT, x, k, m));
        EXPECT_TRUE(check_identity(Identity::NestingU, x, k, m));
      }
      for (Identity id : {Identity::Prop3_1, Identity::Prop3_2, Identity::Prop3_3, Identity::Prop3_4})
        EXPECT_TRUE(check_identity(id, x, k)) << identity_name(id) << " x=" << x << " k=" << k;
      for (long l = 1; l <= 4; ++l) EXPECT_TRUE(check_identity(Identity::Mgr, x, k, l)) << "l=" << l;
    }
  }
}
