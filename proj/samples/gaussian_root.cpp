// Hurwitz expansion of sqrt(9+10i) and a convergent by decimation.

#include <iostream>

#include "quadcf.hpp"

using namespace quadcf;

int main() {
  HurwitzCF cf = expand_hurwitz_sqrt(GaussianInt(9L, 10L));
  std::cout << "period " << cf.l() << ":";
  for (const auto& a : cf.cycle) std::cout << " " << to_string(a);
  std::cout << "\n";

  const unsigned long k = 6;
  auto pair = decimation_closed_form(cf, k);
  std::cout << "p_" << pair.index << " = " << to_string(pair.p) << "\n"
            << "q_" << pair.index << " = " << to_string(pair.q) << "\n";
}
