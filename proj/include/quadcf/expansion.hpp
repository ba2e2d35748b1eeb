#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quadcf/errors.hpp"
#include "quadcf/gaussian.hpp"
#include "quadcf/hurwitz.hpp"
#include "quadcf/surd.hpp"

namespace quadcf {

/// Eventually periodic continued fraction [c_0, ..., c_r, (c_{r+1}, ..., c_{r+l})].
/// S is BigInt for simple real expansions and GaussianInt for Hurwitz expansions.
template <class S>
struct CFExpansion {
  std::vector<S> head;   // c_0 .. c_r
  std::vector<S> cycle;  // c_{r+1} .. c_{r+l}
  S radicand{0L};        // N of the ambient field Q(sqrt N) (or Q(i)(sqrt N))

  long r() const { return static_cast<long>(head.size()) - 1; }
  long l() const { return static_cast<long>(cycle.size()); }

  /// c_i for any i >= 0.
  const S& quotient(long i) const {
    if (i <= r()) return head[static_cast<std::size_t>(i)];
    return cycle[static_cast<std::size_t>((i - r() - 1) % l())];
  }

  friend bool operator==(const CFExpansion& a, const CFExpansion& b) {
    return a.head == b.head && a.cycle == b.cycle;
  }
};

using RealCF = CFExpansion<BigInt>;
using HurwitzCF = CFExpansion<GaussianInt>;

namespace detail {

/// Splits a quotient sequence at the first repeated state (first seen at `start`, repeated at
/// quotients.size()). Purely periodic expansions keep c_0 as head, so r >= 0 always.
template <class S>
CFExpansion<S> split_period(std::vector<S> quotients, std::size_t start, S radicand) {
  CFExpansion<S> cf;
  cf.radicand = std::move(radicand);
  if (start == 0) {
    // c_{l} = c_0 here, so the cycle starting at index 1 is the rotation ending in c_0
    cf.head.push_back(quotients[0]);
    for (std::size_t i = 1; i < quotients.size(); ++i) cf.cycle.push_back(quotients[i]);
    cf.cycle.push_back(quotients[0]);
  } else {
    cf.head.assign(quotients.begin(), quotients.begin() + static_cast<long>(start));
    cf.cycle.assign(quotients.begin() + static_cast<long>(start), quotients.end());
  }
  return cf;
}

}  // namespace detail

/// Simple continued fraction of the SurdState's value; period found at the first repeated state.
inline RealCF expand_real(const SurdState& start, std::size_t max_steps = 1'000'000) {
  if (!start.valid()) throw Error(Errc::UnsupportedRadicand, "invalid surd state");
  std::unordered_map<std::string, std::size_t> seen;
  std::vector<BigInt> quotients;
  SurdState s = start;
  for (std::size_t i = 0; i <= max_steps; ++i) {
    auto [it, inserted] = seen.emplace(s.key(), i);
    if (!inserted) return detail::split_period<BigInt>(std::move(quotients), it->second, s.D);
    BigInt c = floor_surd(s);
    s = surd_step(s, c);
    quotients.push_back(std::move(c));
  }
  throw Error(Errc::NoPeriodWithinBound, "no period within " + std::to_string(max_steps) + " steps");
}

/// Expansion of (a + b sqrt N)/c. N must be an integer > 1 that is not a perfect square.
inline RealCF expand_real(const Rational& a, const Rational& b, const Rational& c, const BigInt& n,
                          std::size_t max_steps = 1'000'000) {
  if (n <= 1) throw Error(Errc::UnsupportedRadicand, "radicand " + to_string(n) + " must exceed 1");
  if (isqrt(n).exact || b == 0)
    throw Error(Errc::PerfectSquare, "value is rational (radicand " + to_string(n) + ")");
  RealCF cf = expand_real(normalize_surd(a, b, c, n), max_steps);
  cf.radicand = n;
  return cf;
}

inline constexpr std::size_t kDefaultHurwitzCap = 10'000;

/// Hurwitz expansion: c_i = nearest Gaussian integer to alpha_i, alpha_{i+1} = 1/(alpha_i - c_i).
inline HurwitzCF expand_hurwitz(const ComplexSurd& alpha, std::size_t max_steps = kDefaultHurwitzCap) {
  const GaussianRational& n = alpha.radicand();
  if (alpha.v().is_zero()) throw Error(Errc::PerfectSquare, "value has no irrational part");
  if (gaussian_sqrt_exact(n.numerator() * GaussianInt(n.den())).first)
    throw Error(Errc::PerfectSquare, "radicand " + to_string(n) + " is a square in Q(i)");

  std::unordered_map<std::string, std::size_t> seen;
  std::vector<GaussianInt> quotients;
  ComplexSurd s = alpha;
  for (std::size_t i = 0; i <= max_steps; ++i) {
    std::string key = to_string(s.u()) + '|' + to_string(s.v());
    auto [it, inserted] = seen.emplace(std::move(key), i);
    if (!inserted) {
      GaussianInt rad = n.is_integral() ? n.numerator() : GaussianInt(0L);
      return detail::split_period<GaussianInt>(std::move(quotients), it->second, rad);
    }
    GaussianInt c = hurwitz_round(s);
    s = inverse(s - ComplexSurd::constant(GaussianRational(c), n));
    quotients.push_back(std::move(c));
  }
  throw Error(Errc::NoPeriodWithinBound, "no Hurwitz period within " + std::to_string(max_steps) + " steps");
}

inline HurwitzCF expand_hurwitz_sqrt(const GaussianInt& n, std::size_t max_steps = kDefaultHurwitzCap) {
  return expand_hurwitz(ComplexSurd::root(GaussianRational(n)), max_steps);
}

/// True iff the expansion has the shape [c_0, (c_1, ..., c_2, c_1, 2 c_0)].
template <class S>
bool check_galois_form(const CFExpansion<S>& cf) {
  if (cf.r() != 0 || cf.cycle.empty()) return false;
  if (!(cf.cycle.back() == S(cf.head[0] * 2L))) return false;
  std::size_t inner = cf.cycle.size() - 1;
  for (std::size_t i = 0; i < inner / 2; ++i) {
    if (!(cf.cycle[i] == cf.cycle[inner - 1 - i])) return false;
  }
  return true;
}

/// p^2 - N q^2 == (-1)^l.
template <class S>
bool pell_check(const S& p, const S& q, const S& n, long l) {
  S lhs = S(p * p - n * q * q);
  return lhs == S(neg_one_pow(l));
}

}  // namespace quadcf
