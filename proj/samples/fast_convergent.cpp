// Expand 4/3 + sqrt(3)/6 and jump straight to a far convergent.

#include <iostream>

#include "quadcf.hpp"

using namespace quadcf;

int main() {
  RealCF cf = expand_real(parse_surd("4/3 + sqrt(3)/6"));
  std::cout << "pre-period " << cf.r() << ", period " << cf.l() << "\n";

  const long m = 89;
  OpCounter binary, nested;
  auto a = psi_binary(cf, m, &binary);
  auto b = psi_nested(cf, m, &nested);
  std::cout << "p_" << m << " = " << to_string(b.p()) << "\n"
            << "q_" << m << " = " << to_string(b.q()) << "\n"
            << "binary: " << binary.lin_combs << " combinations, nested: " << nested.lin_combs << "\n"
            << (a == b && b == psi_naive(cf, m) ? "all methods agree\n" : "MISMATCH\n");
}
