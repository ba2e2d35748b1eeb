#pragma once

#include <utility>
#include <vector>

#include "quadcf/expansion.hpp"
#include "quadcf/mat2.hpp"

namespace quadcf {

/// Psi_n = [[p_n, p_{n-1}], [q_n, q_{n-1}]], the product of [[c_i, 1], [1, 0]] for i = 0..n.
/// Psi_{-1} is the identity (p_{-1} = 1, q_{-1} = 0).
template <class S>
struct ConvergentMatrix {
  Mat2<S> m = Mat2<S>::identity();
  long index = -1;

  const S& p() const { return m.a; }
  const S& q() const { return m.c; }
  const S& p_prev() const { return m.b; }
  const S& q_prev() const { return m.d; }

  friend bool operator==(const ConvergentMatrix&, const ConvergentMatrix&) = default;
};

/// Right-multiplies Psi_n by [[c, 1], [1, 0]].
template <class S>
ConvergentMatrix<S> advance(const ConvergentMatrix<S>& psi, const S& c) {
  const Mat2<S>& m = psi.m;
  return {Mat2<S>{S(m.a * c + m.b), m.a, S(m.c * c + m.d), m.c}, psi.index + 1};
}

/// Psi_{-1}, Psi_0, ..., Psi_n by direct iteration.
template <class S>
std::vector<ConvergentMatrix<S>> psi_naive_sequence(const CFExpansion<S>& cf, long n) {
  std::vector<ConvergentMatrix<S>> out;
  out.reserve(static_cast<std::size_t>(n + 2));
  out.emplace_back();
  for (long i = 0; i <= n; ++i) out.push_back(advance(out.back(), cf.quotient(i)));
  return out;
}

/// Psi_n by direct iteration; the reference every fast method is checked against.
template <class S>
ConvergentMatrix<S> psi_naive(const CFExpansion<S>& cf, long n) {
  ConvergentMatrix<S> psi;
  Mat2<S>& m = psi.m;
  for (long i = 0; i <= n; ++i) {
    const S& c = cf.quotient(i);
    S top = S(m.a * c + m.b);
    S bottom = S(m.c * c + m.d);
    m.b = std::move(m.a);
    m.d = std::move(m.c);
    m.a = std::move(top);
    m.c = std::move(bottom);
  }
  psi.index = n < -1 ? -1 : n;
  return psi;
}

}  // namespace quadcf
