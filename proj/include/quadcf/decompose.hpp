#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "quadcf/errors.hpp"

namespace quadcf {

/// m = m0 + l (2^{n_1} + ... + 2^{n_q}) with n_1 < ... < n_q and m0 = r + ((m - r) mod l).
struct BinaryDecomposition {
  long m0 = 0;
  std::vector<int> n;     // n_1 .. n_q
  std::vector<long> h;    // h_1 .. h_q, h_j = m0 + l (2^{n_1} + ... + 2^{n_j})

  std::size_t q() const { return n.size(); }
  long lin_comb_cost() const {
    long s = 0;
    for (int e : n) s += e;
    return s;
  }
};

/// m = m0 + 2^{m_1} l (1 + 2^{m_2} (1 + ... + 2^{m_{q-1}} (1 + 2^{m_q}))), m_1 >= 0, m_i > 0 otherwise;
/// k_0 = 1 and k_j = 1 + 2^{m_{q+1-j}} k_{j-1}.
struct NestedDecomposition {
  long m0 = 0;
  std::vector<int> m;     // m_1 .. m_q
  std::vector<long> k;    // k_0 .. k_{q-1}

  std::size_t q() const { return m.size(); }
  int exponent(std::size_t i) const { return m[i - 1]; }  // 1-based m_i
  long lin_comb_cost() const {
    long s = 0;
    for (int e : m) s += e;
    return s;
  }
};

namespace detail {

inline long period_offset(long m, long r, long l) {
  if (l <= 0 || r < 0) throw Error(Errc::InvalidDecomposition, "need r >= 0 and l >= 1");
  if (m < r + l)
    throw Error(Errc::MTooSmall, "m = " + std::to_string(m) + " < r + l = " + std::to_string(r + l));
  return r + (m - r) % l;
}

}  // namespace detail

inline BinaryDecomposition decompose_binary(long m, long r, long l) {
  BinaryDecomposition d;
  d.m0 = detail::period_offset(m, r, l);
  auto blocks = static_cast<std::uint64_t>((m - d.m0) / l);
  long acc = d.m0;
  for (int bit = 0; blocks != 0; ++bit, blocks >>= 1U) {
    if ((blocks & 1U) == 0) continue;
    d.n.push_back(bit);
    acc += l * (1L << bit);
    d.h.push_back(acc);
  }
  return d;
}

inline NestedDecomposition decompose_nested(long m, long r, long l) {
  const BinaryDecomposition b = decompose_binary(m, r, l);
  NestedDecomposition d;
  d.m0 = b.m0;
  int prev = 0;
  for (int e : b.n) {
    d.m.push_back(e - prev);  // n_i = m_1 + ... + m_i
    prev = e;
  }
  const std::size_t q = d.m.size();
  d.k.push_back(1);
  for (std::size_t j = 1; j < q; ++j) d.k.push_back(1 + (1L << d.exponent(q + 1 - j)) * d.k[j - 1]);
  return d;
}

inline long recompose(const BinaryDecomposition& d, long l) {
  long m = d.m0;
  for (int e : d.n) m += l * (1L << e);
  return m;
}

inline long recompose(const NestedDecomposition& d, long l) {
  if (d.m.empty()) return d.m0;
  long inner = 1;
  for (std::size_t i = d.q(); i >= 2; --i) inner = 1 + (1L << d.exponent(i)) * inner;
  return d.m0 + (1L << d.exponent(1)) * l * inner;
}

/// Throws InvalidDecomposition unless m_1 >= 0, m_i > 0 (i > 1) and the k_j follow their recursion.
inline void validate(const NestedDecomposition& d) {
  const std::size_t q = d.q();
  if (q == 0 || d.k.size() != q) throw Error(Errc::InvalidDecomposition, "need q >= 1 exponents and q multipliers");
  if (d.m[0] < 0) throw Error(Errc::InvalidDecomposition, "m_1 must be >= 0");
  for (std::size_t i = 1; i < q; ++i)
    if (d.m[i] <= 0) throw Error(Errc::InvalidDecomposition, "m_i must be > 0 for i > 1");
  if (d.k[0] != 1) throw Error(Errc::InvalidDecomposition, "k_0 must be 1");
  for (std::size_t j = 1; j < q; ++j)
    if (d.k[j] != 1 + (1L << d.exponent(q + 1 - j)) * d.k[j - 1])
      throw Error(Errc::InvalidDecomposition, "k_j does not follow k_j = 1 + 2^{m_{q+1-j}} k_{j-1}");
}

}  // namespace quadcf
