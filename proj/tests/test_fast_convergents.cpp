#include <gtest/gtest.h>

#include <random>

#include "quadcf.hpp"

using namespace quadcf;

namespace {

RealCF mixed_surd() { return expand_real(Rational(4, 3), Rational(1, 6), Rational(1), BigInt(3)); }
HurwitzCF gaussian_root() { return expand_hurwitz_sqrt(GaussianInt(9L, 10L)); }
RealCF sqrt_of(long n) { return expand_real(Rational(0), Rational(1), Rational(1), BigInt(n)); }

BigInt B(const char* s) { return parse_bigint(s); }
GaussianInt G(const char* re, const char* im) { return {parse_bigint(re), parse_bigint(im)}; }

const Mat2<BigInt> kPsi89{B("7031582616783360742995441537263465239"), B("2758523931487789014011972217814706733"),
                          B("4335108450922621626554341085216343809"), B("1700684050688932407684112398936807682")};
const GaussianInt kP71 = G("-64452969879034582258134562726849", "-21217336886334890599158733121700");
const GaussianInt kQ71 = G("-18405487633517442616165619582790", "1864795250277698166333066426570");

}  // namespace

TEST(Decompose, RealAndGaussianCases) {
  auto b = decompose_binary(89, 3, 8);
  EXPECT_EQ(b.m0, 9);
  EXPECT_EQ(b.n, (std::vector<int>{1, 3}));
  EXPECT_EQ(b.h, (std::vector<long>{25, 89}));
  auto n = decompose_nested(89, 3, 8);
  EXPECT_EQ(n.m0, 9);
  EXPECT_EQ(n.m, (std::vector<int>{1, 2}));
  EXPECT_EQ(n.k, (std::vector<long>{1, 5}));
  auto c = decompose_nested(71, 0, 12);
  EXPECT_EQ(c.m0, 11);
  EXPECT_EQ(c.m, (std::vector<int>{0, 2}));
  EXPECT_EQ(c.k, (std::vector<long>{1, 5}));
  EXPECT_EQ(recompose(b, 8), 89);
  EXPECT_EQ(recompose(n, 8), 89);
  EXPECT_EQ(recompose(c, 12), 71);
}

TEST(Decompose, Errors) {
  try {
    decompose_binary(10, 3, 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MTooSmall);
  }
  NestedDecomposition bad{9, {1, 0}, {1, 2}};
  EXPECT_THROW(validate(bad), Error);
  EXPECT_THROW(nested_trace_table(bad, BigInt(2702), 8), Error);
}

TEST(Traces, FourThirdsPlusRootThreeOverSix) {
  RealCF cf = mixed_surd();
  const BigInt t1 = t1_from_psi(psi_naive(cf, 3), psi_naive(cf, 11));
  EXPECT_EQ(t1, 2702);
  const BigInt t2 = t_double(t1, false);
  EXPECT_EQ(t2, 7300802);
  EXPECT_EQ(t_double(t2, false), B("53301709843202"));
  auto [t2b, t3] = t_pair_step(t1, t2, BigInt(2), t1, false);
  EXPECT_EQ(t2b, t2);
  EXPECT_EQ(t3, B("19726764302"));
  auto [t4, t5] = t_pair_step(t2, t3, BigInt(2), t1, false);
  EXPECT_EQ(t4, B("53301709843202"));
  EXPECT_EQ(t5, B("144021200269567502"));
  auto seeds = t_pair_step(BigInt(2), t1, BigInt(2), t1, false);
  EXPECT_EQ(seeds.first, 2);
  EXPECT_EQ(seeds.second, t1);
}

TEST(Traces, IdentityPairAndMismatch) {
  RealCF cf = mixed_surd();
  EXPECT_EQ(t1_from_psi(psi_naive(cf, 5), psi_naive(cf, 5)), 2);
  try {
    t1_from_psi(psi_naive(cf, 11), psi_naive(cf, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MismatchedIndices);
  }
}

TEST(Traces, RootNinePlusTenI) {
  HurwitzCF cf = gaussian_root();
  const GaussianInt t1 = t1_from_psi(psi_naive(cf, 0), psi_naive(cf, 12));
  EXPECT_EQ(t1, GaussianInt(-202050L, 102786L));
  EXPECT_EQ(t_double(t1, false), G("30259240702", "-41535822600"));
}

TEST(TraceTable, MixedTraceTable) {
  auto table = nested_trace_table(decompose_nested(89, 3, 8), BigInt(2702), 8);
  EXPECT_EQ(table.indices(), (std::set<long>{1, 2, 5}));
  EXPECT_EQ(table.at(5), B("144021200269567502"));
  EXPECT_EQ(table.at(2), 7300802);
}

TEST(TraceTable, GaussianTraceTable) {
  auto table = nested_trace_table(decompose_nested(71, 0, 12), GaussianInt(-202050L, 102786L), 12);
  EXPECT_EQ(table.indices(), (std::set<long>{1, 2}));
}

TEST(TraceTable, SingleLevel) {
  NestedDecomposition d{0, {1}, {1}};
  auto table = nested_trace_table(d, BigInt(6), 1);
  EXPECT_EQ(table.indices(), (std::set<long>{1}));
}

TEST(PsiBinary, FourThirdsPlusRootThreeOverSix) {
  RealCF cf = mixed_surd();
  OpCounter c;
  auto psi = psi_binary(cf, 89, &c);
  EXPECT_EQ(psi.m, kPsi89);
  EXPECT_EQ(psi.index, 89);
  EXPECT_EQ(c.lin_combs, 4U);
  EXPECT_EQ(c.matrix_mults, 4U);  // q + 2
  EXPECT_EQ(psi_binary(cf, 25).m, lin_comb(BigInt(2702), psi_naive(cf, 17).m, BigInt(-1), psi_naive(cf, 9).m));
  EXPECT_EQ(psi_binary(cf, 11), psi_naive(cf, 11));
}

TEST(PsiNested, FourThirdsPlusRootThreeOverSix) {
  RealCF cf = mixed_surd();
  OpCounter c;
  EXPECT_EQ(psi_nested(cf, 89, &c).m, kPsi89);
  EXPECT_EQ(c.lin_combs, 3U);
  EXPECT_EQ(c.matrix_mults, 4U);
}

TEST(PsiNested, RootNinePlusTenI) {
  HurwitzCF cf = gaussian_root();
  OpCounter c;
  auto psi = psi_nested(cf, 71, &c);
  EXPECT_EQ(psi.p(), kP71);
  EXPECT_EQ(psi.q(), kQ71);
  EXPECT_EQ(psi_naive(cf, 71), psi);
  EXPECT_EQ(psi_naive(cf, 11).m,
            (Mat2<GaussianInt>{{-101025L, 51393L}, {-60722L, -31709L}, {-19460L, 24005L}, {-18640L, -1162L}}));
}

TEST(Decimation, RootNinePlusTenI) {
  HurwitzCF cf = gaussian_root();
  for (bool hs : {false, true}) {
    ConvergentSession<GaussianInt> s(cf);
    auto pair = s.decimation(6, hs);
    EXPECT_EQ(pair.p, kP71);
    EXPECT_EQ(pair.q, kQ71);
    EXPECT_EQ(pair.index, 71);
  }
  const GaussianInt x = psi_naive(cf, 11).p();
  EXPECT_EQ(signed_T(12, 6, x), kP71);
  EXPECT_EQ(psi_naive(cf, 11).q() * signed_U(12, 5, x), kQ71);
}

TEST(Decimation, SmallCasesAndErrors) {
  RealCF s2 = sqrt_of(2);
  auto one = decimation_closed_form(s2, 1);
  EXPECT_EQ(one.p, 1);
  EXPECT_EQ(one.q, 1);
  auto two = decimation_closed_form(s2, 2);
  EXPECT_EQ(two.p, 3);
  EXPECT_EQ(two.q, 2);
  try {
    decimation_closed_form(mixed_surd(), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotGaloisForm);
  }
}

TEST(Session, MemoizesTraces) {
  ConvergentSession<BigInt> s(mixed_surd());
  s.psi_nested(89);
  auto first = s.trace_memo().indices();
  EXPECT_TRUE(first.count(5));
  s.psi_binary(89);
  EXPECT_TRUE(s.trace_memo().indices().count(4));
  EXPECT_EQ(s.trace_memo().at(5), B("144021200269567502"));
}

// ---- properties ----

namespace {

/// Random (a + b sqrt N)/c with N <= 10^6 and small coefficients. Periods grow with the
/// discriminant, so surds whose r + l would leave nothing for the fast paths below m = 5000 are redrawn.
RealCF random_surd(std::mt19937_64& rng, long max_rl = 1500) {
  std::uniform_int_distribution<long> n_dist(2, 1'000'000);
  std::uniform_int_distribution<long> a_dist(-20, 20);
  std::uniform_int_distribution<long> b_dist(-3, 3);
  std::uniform_int_distribution<long> c_dist(1, 5);
  for (;;) {
    BigInt n(n_dist(rng));
    const long a = a_dist(rng), b = b_dist(rng), c = c_dist(rng);
    if (isqrt(n).exact || b == 0) continue;
    try {
      RealCF cf = expand_real(Rational(a), Rational(b), Rational(c), n, static_cast<std::size_t>(max_rl));
      if (cf.r() + cf.l() <= max_rl) return cf;
    } catch (const Error& e) {
      if (e.code() != Errc::NoPeriodWithinBound) throw;
    }
  }
}

/// Returns how many of the m took a fast path (m >= r + l).
template <class S>
int expect_methods_agree(const CFExpansion<S>& cf, const std::vector<long>& ms) {
  ConvergentSession<S> session(cf);
  auto sequence = psi_naive_sequence(cf, *std::max_element(ms.begin(), ms.end()));
  for (long m : ms) {
    const auto& naive = sequence[static_cast<std::size_t>(m + 1)];
    EXPECT_EQ(session.psi_binary(m), naive) << "binary m=" << m;
    EXPECT_EQ(session.psi_nested(m), naive) << "nested m=" << m;
  }
  return static_cast<int>(std::count_if(ms.begin(), ms.end(), [&](long m) { return m >= cf.r() + cf.l(); }));
}

}  // namespace

TEST(FastProperty, RandomRealSurds) {
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<long> m_dist(0, 5000);
  for (int trial = 0; trial < 30; ++trial) {
    RealCF cf = random_surd(rng);
    std::vector<long> ms;
    for (int i = 0; i < 200; ++i) ms.push_back(m_dist(rng));
    EXPECT_GE(expect_methods_agree(cf, ms), 100) << "r+l=" << cf.r() + cf.l();
  }
}

TEST(FastProperty, HurwitzRoots) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> m_dist(0, 5000);
  const GaussianInt roots[] = {{9L, 10L}, {2L, 0L},  {3L, 0L},  {7L, 0L},  {13L, 0L},
                               {-2L, 4L}, {-1L, 5L}, {-3L, 7L}, {-5L, 7L}, {-2L, 11L}};
  for (const GaussianInt& n : roots) {
    HurwitzCF cf = expand_hurwitz_sqrt(n);
    std::vector<long> ms;
    for (int i = 0; i < 20; ++i) ms.push_back(m_dist(rng));
    EXPECT_GT(expect_methods_agree(cf, ms), 0) << to_string(n);
  }
}

TEST(FastProperty, DeterminantOfPsi) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    auto seq = psi_naive_sequence(random_surd(rng), 200);
    for (long n = -1; n <= 200; ++n)
      ASSERT_EQ(seq[static_cast<std::size_t>(n + 1)].m.det(), neg_one_pow(static_cast<long long>(n + 1)));
  }
}

TEST(FastProperty, TraceTableMatchesMatrixPowers) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> m_dist(50, 5000);
  for (int trial = 0; trial < 10; ++trial) {
    RealCF cf = random_surd(rng);
    const long r = cf.r(), l = cf.l();
    const Mat2<BigInt> b = mat_inv_unimodular(psi_naive(cf, r).m) * psi_naive(cf, r + l).m;
    for (long n = r; n <= r + l; ++n)
      EXPECT_EQ((mat_inv_unimodular(psi_naive(cf, n).m) * psi_naive(cf, n + l).m).trace(), b.trace());
    const BigInt t1 = b.trace();
    for (int i = 0; i < 10; ++i) {
      long m = r + l + m_dist(rng);
      auto table = nested_trace_table(decompose_nested(m, r, l), t1, l);
      for (const auto& [k, v] : table.values) {
        EXPECT_EQ(v, b.pow(static_cast<unsigned long>(k)).trace()) << "k=" << k;
        EXPECT_EQ(v, eval_naive(RecurrenceFamily{Family::SignedDilatedT, l}, k, t1));
      }
    }
  }
}

TEST(FastProperty, CostClaims) {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<long> m_dist(0, 100000);
  for (int trial = 0; trial < 20; ++trial) {
    RealCF cf = random_surd(rng);
    for (int i = 0; i < 20; ++i) {
      const long m = cf.r() + cf.l() + m_dist(rng);
      auto bd = decompose_binary(m, cf.r(), cf.l());
      auto nd = decompose_nested(m, cf.r(), cf.l());
      long weighted = 0;
      for (std::size_t j = 1; j <= nd.q(); ++j) weighted += static_cast<long>(nd.q() + 1 - j) * nd.exponent(j);
      EXPECT_EQ(bd.lin_comb_cost(), weighted);
      EXPECT_LE(nd.lin_comb_cost(), bd.lin_comb_cost());

      const std::uint64_t mults = nd.q() + (nd.m0 == cf.r() ? 0 : 2);
      OpCounter cb, cn;
      psi_binary(cf, m, &cb);
      psi_nested(cf, m, &cn);
      EXPECT_EQ(cb.matrix_mults, mults);
      EXPECT_EQ(cn.matrix_mults, mults);
      EXPECT_EQ(cb.lin_combs, static_cast<std::uint64_t>(bd.lin_comb_cost()));
      EXPECT_EQ(cn.lin_combs, static_cast<std::uint64_t>(nd.lin_comb_cost()));
    }
  }
}

TEST(FastProperty, GaloisFormT1AndSymmetry) {
  for (long n : {2L, 3L, 7L, 13L, 19L, 31L, 46L, 94L, 151L, 991L}) {
    RealCF cf = sqrt_of(n);
    ASSERT_TRUE(check_galois_form(cf));
    const long l = cf.l();
    auto end = psi_naive(cf, l - 1);
    EXPECT_EQ(t1_from_psi(psi_naive(cf, 0), psi_naive(cf, l)), 2 * end.p());
    EXPECT_EQ(end.q_prev(), end.p() - cf.head[0] * end.q());
    EXPECT_TRUE(pell_check(end.p(), end.q(), BigInt(n), l));
  }
}

TEST(FastProperty, DecimationAgreesWithNaive) {
  for (long n : {2L, 3L, 7L, 13L, 19L, 31L, 46L, 94L}) {
    RealCF cf = sqrt_of(n);
    const long l = cf.l();
    ConvergentSession<BigInt> s(cf);
    for (unsigned long k = 1; k <= 12; ++k) {
      auto naive = psi_naive(cf, static_cast<long>(k) * l - 1);
      for (bool hs : {false, true}) {
        auto pair = s.decimation(k, hs);
        EXPECT_EQ(pair.p, naive.p());
        EXPECT_EQ(pair.q, naive.q());
      }
    }
  }
}

TEST(ConvergenceProperty, ErrorsShrink) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    RealCF cf = random_surd(rng);
    // exact value alpha as a real number via a deep convergent, compared in high precision
    auto seq = psi_naive_sequence(cf, 60);
    mpf_class alpha(0, 4096);
    alpha = mpf_class(seq.back().p(), 4096) / mpf_class(seq.back().q(), 4096);
    mpf_class prev(-1, 4096);
    for (long n = 0; n <= 40; ++n) {
      const auto& psi = seq[static_cast<std::size_t>(n + 1)];
      mpf_class err(0, 4096);
      err = abs(alpha - mpf_class(psi.p(), 4096) / mpf_class(psi.q(), 4096));
      if (prev >= 0) {
        EXPECT_LT(err, prev) << n;
      }
      prev = err;
    }
  }
}

TEST(ExpansionProperty, PeriodMinimalityAndReexpansion) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 30; ++trial) {
    RealCF cf = random_surd(rng);
    const long r = cf.r(), l = cf.l();
    for (long d = 1; d < l; ++d) {
      if (l % d != 0) continue;
      bool repeats = true;
      for (long i = 1; i <= l; ++i) repeats = repeats && cf.quotient(r + i) == cf.quotient(r + i + d);
      EXPECT_FALSE(repeats) << "period " << l << " not minimal";
    }
    if (r > 0) {
      EXPECT_NE(cf.quotient(r), cf.quotient(r + l));
    }
    // Rebuild the value: the periodic tail beta satisfies beta = (P beta + P')/(Q beta + Q') with
    // [[P, P'], [Q, Q']] the cycle product; alpha = (p_r beta + p_{r-1})/(q_r beta + q_{r-1}).
    Mat2<BigInt> cyc = Mat2<BigInt>::identity();
    for (long i = 1; i <= l; ++i) cyc = cyc * Mat2<BigInt>{cf.quotient(r + i), BigInt(1), BigInt(1), BigInt(0)};
    // Q beta^2 + (Q' - P) beta - P' = 0, positive root
    const BigInt A = cyc.c, Bc = cyc.d - cyc.a, C = -cyc.b;
    const BigInt disc = Bc * Bc - 4 * A * C;
    // beta = (-B + sqrt(disc)) / (2A)
    QuadExt<Rational> beta(Rational(-Bc, 2 * A), Rational(1, 2 * A) * Rational(1), Rational(disc));
    auto head = psi_naive(cf, r);
    QuadExt<Rational> num = beta * Rational(head.p()) + QuadExt<Rational>::constant(Rational(head.p_prev()), Rational(disc));
    QuadExt<Rational> den = beta * Rational(head.q()) + QuadExt<Rational>::constant(Rational(head.q_prev()), Rational(disc));
    QuadExt<Rational> alpha = num / den;
    RealCF again = expand_real(alpha.u(), alpha.v(), Rational(1), disc);
    EXPECT_EQ(again, cf);
  }
}
