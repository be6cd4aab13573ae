// Energies of a few small sets, and how uniformity depends on the energy used to measure it.

#include "hen/hen.hpp"

#include <iostream>

int main() {
  using namespace hen;
  const Group z5 = Group::cyclic(5);
  const auto a = GroupSet::from_indices(z5, {0, 1});
  std::cout << "A = {0,1} in " << z5.spec() << '\n';
  for (const Shape& s : {Shape{2, 2}, Shape{2, 3}, Shape{3, 2}, Shape{2, 2, 2}}) {
    const auto rep = energy(a.indicator(), s);
    std::cout << "  E_" << s.str() << "(A) = " << to_string(rep.raw) << "  (" << to_string(rep.strategy) << ")\n";
  }
  const auto u = uniformity(a, 2, 2);
  std::cout << "  eps^4 at (2,2) = " << to_string(u.ratio) << '\n';

  const auto ds = scenario_direct_sum(10, 3, 0.125, 0);
  std::cout << "\nH + Lambda in F2^10, |H| = 8, |A| = " << ds.set.size() << '\n'
            << "  eps at " << ds.low.str() << " = " << ds.eps_low << '\n'
            << "  eps at " << ds.high.str() << " = " << ds.eps_high << "  (ratio " << ds.ratio << ")\n";
}
