#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "quadcf/convergents.hpp"
#include "quadcf/decompose.hpp"
#include "quadcf/op_counter.hpp"

namespace quadcf {

/// t_k = Tr((Psi_n^{-1} Psi_{n+l})^k), independent of n >= r. Satisfies
/// t_{k+2} = t_1 t_{k+1} - (-1)^l t_k with t_0 = 2.
template <class S>
struct TraceTable {
  long l = 0;
  std::map<long, S> values;

  bool has(long k) const { return k == 0 || values.count(k) != 0; }
  S at(long k) const {
    if (k == 0) return S(2L);
    auto it = values.find(k);
    if (it == values.end()) throw Error(Errc::InvalidDecomposition, "t_" + std::to_string(k) + " not in table");
    return it->second;
  }
  void set(long k, S v) { values.insert_or_assign(k, std::move(v)); }

  std::set<long> indices() const {
    std::set<long> out;
    for (const auto& kv : values) out.insert(kv.first);
    return out;
  }
};

namespace detail {

/// -(-1)^e as a ring element, from the parity of e.
template <class S>
S minus_sign_pow(bool odd_exponent) {
  return S(odd_exponent ? 1L : -1L);
}

}  // namespace detail

/// t_1 = Tr(Psi_r^{-1} Psi_{r+l}), also formed as the determinant difference
///   (-1)^r (|p_{r+l-1} p_r; q_{r+l-1} q_r| - |p_{r+l} p_{r-1}; q_{r+l} q_{r-1}|);
/// the two routes must agree.
template <class S>
S t1_from_psi(const ConvergentMatrix<S>& psi_r, const ConvergentMatrix<S>& psi_rl) {
  if (psi_rl.index < psi_r.index)
    throw Error(Errc::MismatchedIndices, "second matrix must not precede the first");
  S by_trace = (mat_inv_unimodular(psi_r.m) * psi_rl.m).trace();

  const S det_a = S(psi_rl.p_prev() * psi_r.q() - psi_r.p() * psi_rl.q_prev());
  const S det_b = S(psi_rl.p() * psi_r.q_prev() - psi_r.p_prev() * psi_rl.q());
  S by_det = S(det_a - det_b);
  if (neg_one_pow(psi_r.index) < 0) by_det = S(-by_det);

  if (!(by_trace == by_det))
    throw Error(Errc::MismatchedIndices, "trace and determinant forms of t_1 disagree");
  return by_trace;
}

/// t_{2k} = t_k^2 - 2 (-1)^{kl}.
template <class S>
S t_double(const S& tk, bool kl_odd) {
  return S(tk * tk + S(kl_odd ? 2L : -2L));
}

/// (t_{2k}, t_{2k+1}) = t_k (t_k, t_{k+1}) - (-1)^{kl} (t_0, t_1).
template <class S>
std::pair<S, S> t_pair_step(const S& tk, const S& tk1, const S& t0, const S& t1, bool kl_odd) {
  const S s = detail::minus_sign_pow<S>(kl_odd);
  return {S(tk * tk + s * t0), S(tk * tk1 + s * t1)};
}

/// Indices k_{j-1} 2^i, i < m_{q+1-j}, j = 1..q: the trace values the nested-binary method consumes.
inline std::vector<long> nested_trace_indices(const NestedDecomposition& d) {
  std::vector<long> out;
  const std::size_t q = d.q();
  for (std::size_t j = 1; j <= q; ++j)
    for (int i = 0; i < d.exponent(q + 1 - j); ++i) out.push_back(d.k[j - 1] << i);
  return out;
}

/// Builds the trace values the nested-binary method needs, level by level, following the
/// head/inner-loop structure of the Horner-type trace schedule. Returns exactly those values;
/// intermediate companions (t_{z+1}) are scratch. `counter->scalar_ops` gets one tick per ring product.
template <class S>
TraceTable<S> nested_trace_table(const NestedDecomposition& d, const S& t1, long l, OpCounter* counter = nullptr) {
  validate(d);
  const std::size_t q = d.q();
  const bool l_odd = (l % 2) != 0;
  TraceTable<S> scratch;
  scratch.l = l;
  scratch.set(1, t1);
  const S two(2L);

  auto sign = [&](long z) { return detail::minus_sign_pow<S>(l_odd && (z % 2 != 0)); };
  auto odd_from_pair = [&](long z) {  // t_{2z+1} = t_z t_{z+1} - (-1)^{lz} t_1
    scratch.set(2 * z + 1, S(scratch.at(z) * scratch.at(z + 1) + sign(z) * t1));
    count_scalar(counter);
  };
  auto even_from_square = [&](long z) {  // t_{2z} = t_z^2 - (-1)^{lz} 2
    scratch.set(2 * z, S(scratch.at(z) * scratch.at(z) + sign(z) * two));
    count_scalar(counter);
  };

  const std::size_t p = d.exponent(1) == 0 ? q - 1 : q;
  for (std::size_t j = 1; j <= p; ++j) {
    if (j == 1) {
      even_from_square(1);
    } else {
      const long z = (d.k[j - 1] - 1) / 2;
      if (z == 1 || j == p) {
        odd_from_pair(z);
        if (z == 1 && j != p) {
          // the pair (t_3, t_4) seeds the next doubling at this level
          scratch.set(4, S(t1 * scratch.at(3) + sign(1) * scratch.at(2)));
          count_scalar(counter);
        }
      } else {
        even_from_square(z);
        odd_from_pair(z);
        // t_{2z+2} = t_1 t_{2z+1} - (-1)^l t_{2z}
        scratch.set(2 * z + 2, S(t1 * scratch.at(2 * z + 1) + sign(1) * scratch.at(2 * z)));
        count_scalar(counter);
      }
    }
    for (int i = 1; i < d.exponent(q + 1 - j); ++i) {
      const long z = d.k[j - 1] << (i - 1);
      if (z == 1) {
        odd_from_pair(1);
      } else if (j == p) {
        even_from_square(z);
      } else {
        even_from_square(z);
        odd_from_pair(z);
      }
    }
  }

  TraceTable<S> out;
  out.l = l;
  for (long k : nested_trace_indices(d)) out.set(k, scratch.at(k));
  return out;
}

}  // namespace quadcf
