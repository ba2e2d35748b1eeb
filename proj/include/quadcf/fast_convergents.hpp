#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "quadcf/chebyshev.hpp"
#include "quadcf/convergents.hpp"
#include "quadcf/decompose.hpp"
#include "quadcf/expansion.hpp"
#include "quadcf/traces.hpp"

namespace quadcf {

/// (p_{kl-1}, q_{kl-1}) produced without forming Psi_{kl-1}.
template <class S>
struct ConvergentPair {
  S p;
  S q;
  long index = -1;

  friend bool operator==(const ConvergentPair&, const ConvergentPair&) = default;
};

/*
 * Logarithmic-time convergents of one expansion.
 *
 * For n >= r every block Psi_n^{-1} Psi_{n+l} has determinant (-1)^l, so by Cayley-Hamilton
 *
 *     Psi_{n + 2^{i+1} k l} = t_{2^i k} Psi_{n + 2^i k l} - (-1)^{2^i k l} Psi_n.
 *
 * psi_binary walks the set bits of (m - m0)/l from the bottom, re-basing at each bit;
 * psi_nested walks them Horner-style from the top, always against the fixed base Psi_{m0}.
 * Both precompute Psi_r, Psi_{r+l}, Psi_{m0} by direct iteration, which is cached per session.
 *
 * A session owns mutable caches and counters: one thread per session.
 */
template <class S>
class ConvergentSession {
 public:
  explicit ConvergentSession(CFExpansion<S> cf) : cf_(std::move(cf)) {
    traces_.l = cf_.l();
    prefix_.emplace_back();  // Psi_{-1}
  }

  const CFExpansion<S>& expansion() const { return cf_; }
  long r() const { return cf_.r(); }
  long l() const { return cf_.l(); }

  OpCounter& counter() { return counter_; }
  const OpCounter& counter() const { return counter_; }

  /// Psi_n from the prefix cache, extending it by iteration when needed.
  const ConvergentMatrix<S>& psi_cached(long n) {
    while (static_cast<long>(prefix_.size()) - 2 < n) {
      const ConvergentMatrix<S>& last = prefix_.back();
      prefix_.push_back(advance(last, cf_.quotient(last.index + 1)));
    }
    return prefix_[static_cast<std::size_t>(n + 1)];
  }

  ConvergentMatrix<S> psi_naive(long m) {
    count_mult(&counter_, static_cast<std::uint64_t>(m + 1));
    return quadcf::psi_naive(cf_, m);
  }

  S t1() {
    if (!traces_.values.count(1)) {
      psi_cached(r() + l());  // extend first so the references below stay valid
      traces_.set(1, t1_from_psi(psi_cached(r()), psi_cached(r() + l())));
    }
    return traces_.at(1);
  }

  const TraceTable<S>& trace_memo() const { return traces_; }

  /// Binary method; falls back to direct iteration when m < r + l.
  ConvergentMatrix<S> psi_binary(long m) {
    if (m < r() + l()) return psi_naive(m);
    const BinaryDecomposition d = decompose_binary(m, r(), l());
    auto [base, phi] = setup(d.m0);

    ConvergentMatrix<S> anchor = psi_cached(d.m0);  // Psi_{h_{j-1}}
    ConvergentMatrix<S> cur = std::move(base);      // Psi_{h_{j-1} + l}
    for (std::size_t j = 0; j < d.q(); ++j) {
      for (int i = 0; i < d.n[j]; ++i) {
        const long span = l() << i;  // 2^i l
        cur = {lin_comb(power_of_two_trace(i), cur.m, sign_for(span), anchor.m), anchor.index + 2 * span};
        count_lin_comb(&counter_);
      }
      if (j + 1 != d.q()) {
        anchor = cur;
        cur = {cur.m * phi, cur.index + l()};
        count_mult(&counter_);
      }
    }
    check_index(cur, m);
    return cur;
  }

  /// Nested-binary method; falls back to direct iteration when m < r + l.
  ConvergentMatrix<S> psi_nested(long m) {
    if (m < r() + l()) return psi_naive(m);
    const NestedDecomposition d = decompose_nested(m, r(), l());
    const TraceTable<S> table = nested_trace_table(d, t1(), l(), &counter_);
    for (const auto& [k, v] : table.values) traces_.set(k, v);
    auto [base, phi] = setup(d.m0);

    const ConvergentMatrix<S> anchor = psi_cached(d.m0);
    ConvergentMatrix<S> cur = std::move(base);  // Psi_{m0 + k_j l}
    const std::size_t q = d.q();
    for (std::size_t j = 0; j < q; ++j) {
      const long kj = d.k[j];
      for (int i = 0; i < d.exponent(q - j); ++i) {
        const long span = (kj << i) * l();  // 2^i k_j l
        cur = {lin_comb(table.at(kj << i), cur.m, sign_for(span), anchor.m), anchor.index + 2 * span};
        count_lin_comb(&counter_);
      }
      if (j + 1 != q) {
        cur = {cur.m * phi, cur.index + l()};
        count_mult(&counter_);
      }
    }
    check_index(cur, m);
    return cur;
  }

  /// (p_{kl-1}, q_{kl-1}) = (T^l_k(p_{l-1}), q_{l-1} U^l_{k-1}(p_{l-1})) for expansions of the form
  /// [c_0, (c_1, ..., c_1, 2 c_0)].
  ConvergentPair<S> decimation(unsigned long k, bool halve_and_square = false) {
    if (!check_galois_form(cf_)) throw Error(Errc::NotGaloisForm, "decimation needs a palindromic period ending in 2c_0");
    const ConvergentMatrix<S>& base = psi_cached(l() - 1);
    const long index = static_cast<long>(k) * l() - 1;
    if (k == 0) return {S(1L), S(0L), -1};
    const S& x = base.p();
    ChebMatrixState<S> xi = halve_and_square ? eval_halve_square(l(), k - 1, x, &counter_)
                                             : eval_matrix_power(l(), k - 1, x, &counter_);
    // Xi_{k-1} = [[T_k, U_k], [T_{k-1}, U_{k-1}]]
    return {xi.t_next(), S(base.q() * xi.u()), index};
  }

 private:
  static S sign_for(long exponent) { return detail::minus_sign_pow<S>(exponent % 2 != 0); }

  /// t_{2^i}, memoized through t_{2^i} = t_{2^{i-1}}^2 - 2 (-1)^{2^{i-1} l}.
  S power_of_two_trace(int i) {
    long k = 1;
    S t = t1();
    for (int e = 0; e < i; ++e) {
      const long next = 2 * k;
      if (!traces_.has(next)) {
        traces_.set(next, t_double(t, (k * l()) % 2 != 0));
        count_scalar(&counter_);
      }
      t = traces_.at(next);
      k = next;
    }
    return t;
  }

  /// Psi_{m0+l} (= Psi_{r+l} Psi_r^{-1} Psi_{m0} when m0 != r) and Phi = Psi_{m0}^{-1} Psi_{m0+l}.
  std::pair<ConvergentMatrix<S>, Mat2<S>> setup(long m0) {
    psi_cached(std::max(r() + l(), m0));
    ConvergentMatrix<S> base;
    if (m0 != r()) {
      const Mat2<S> shift = psi_cached(r() + l()).m * checked_inverse(psi_cached(r()).m);
      base = {shift * psi_cached(m0).m, m0 + l()};
      count_mult(&counter_, 2);
    } else {
      base = psi_cached(r() + l());
    }
    Mat2<S> phi = checked_inverse(psi_cached(m0).m) * base.m;
    count_mult(&counter_);
    return {std::move(base), std::move(phi)};
  }

  /// Determinants of convergent matrices are +-1 for real and Hurwitz expansions alike.
  static Mat2<S> checked_inverse(const Mat2<S>& m) {
    const S det = m.det();
    if (!(det == S(1L) || det == S(-1L))) throw Error(Errc::NonUnimodular, "convergent matrix with det not +-1");
    return mat_inv_unimodular(m);
  }

  static void check_index(const ConvergentMatrix<S>& psi, long m) {
    if (psi.index != m) throw Error(Errc::InvalidDecomposition, "index bookkeeping drifted");
  }

  CFExpansion<S> cf_;
  std::vector<ConvergentMatrix<S>> prefix_;
  TraceTable<S> traces_;
  OpCounter counter_;
};

/// One-shot helpers over a fresh session.
template <class S>
ConvergentMatrix<S> psi_binary(const CFExpansion<S>& cf, long m, OpCounter* counter = nullptr) {
  ConvergentSession<S> s(cf);
  auto out = s.psi_binary(m);
  if (counter != nullptr) *counter = s.counter();
  return out;
}

template <class S>
ConvergentMatrix<S> psi_nested(const CFExpansion<S>& cf, long m, OpCounter* counter = nullptr) {
  ConvergentSession<S> s(cf);
  auto out = s.psi_nested(m);
  if (counter != nullptr) *counter = s.counter();
  return out;
}

template <class S>
ConvergentPair<S> decimation_closed_form(const CFExpansion<S>& cf, unsigned long k, OpCounter* counter = nullptr) {
  ConvergentSession<S> s(cf);
  auto out = s.decimation(k);
  if (counter != nullptr) *counter = s.counter();
  return out;
}

}  // namespace quadcf
