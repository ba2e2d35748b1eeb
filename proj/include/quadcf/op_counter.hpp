#pragma once

#include <cstdint>

namespace quadcf {

/// Tallies of the work a fast method performs. Counts only ever grow until reset().
struct OpCounter {
  std::uint64_t matrix_mults = 0;    // full 2x2 products (inverses of unimodular matrices are free)
  std::uint64_t lin_combs = 0;       // t*A + s*B with scalar coefficients
  std::uint64_t scalar_ops = 0;      // ring multiplications spent building trace tables

  std::uint64_t matrix_level() const { return matrix_mults + lin_combs; }
  void reset() { *this = OpCounter{}; }

  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

inline void count_mult(OpCounter* c, std::uint64_t n = 1) {
  if (c != nullptr) c->matrix_mults += n;
}
inline void count_lin_comb(OpCounter* c, std::uint64_t n = 1) {
  if (c != nullptr) c->lin_combs += n;
}
inline void count_scalar(OpCounter* c, std::uint64_t n = 1) {
  if (c != nullptr) c->scalar_ops += n;
}

}  // namespace quadcf
