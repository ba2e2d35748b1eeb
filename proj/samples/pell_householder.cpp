// Pell solution for sqrt N, then Householder steps of rising order from it.

#include <cstdlib>
#include <iostream>

#include "quadcf.hpp"

using namespace quadcf;

int main(int argc, char** argv) {
  const BigInt n(argc > 1 ? std::atol(argv[1]) : 61L);
  RealCF cf = expand_real(Rational(0), Rational(1), Rational(1), n);
  const auto base = psi_naive(cf, cf.l() - 1);
  std::cout << "sqrt " << to_string(n) << ": period " << cf.l() << ", p = " << to_string(base.p())
            << ", q = " << to_string(base.q()) << "\n";

  for (int d = 1; d <= 4; ++d) {
    HouseholderConfig<BigInt> cfg{d, n, cf.l()};
    auto step = householder_cheb(base.p(), base.q(), cfg);
    const bool same = householder_oracle<BigInt>(ratio(base.p(), base.q()), cfg) == ratio(step.p, step.q);
    std::cout << "order " << d << " -> convergent " << step.index << ", " << to_string(step.p).size()
              << " digits, oracle " << (same ? "agrees" : "DISAGREES") << "\n";
  }
}
