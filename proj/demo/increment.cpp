// Uniformize a planted set in F_2^10 and print the increment trace.

#include "hen/hen.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  using namespace hen;
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
  const GroupSet a = planted_biased_cosets(10, 2, 0.25, 0.5, seed);
  const auto res = uniformize(a, 2, 2, 0.25, 16, IncrementParams{.seed = seed});
  std::cout << "initial eps " << res.initial_epsilon << ", density " << to_string(a.density()) << '\n';
  for (const auto& s : res.trace)
    std::cout << "step " << s.step << ": codim " << s.cell_codim << " -> " << s.cell_codim + s.codim_added
              << ", density " << to_string(s.density_before) << " -> " << to_string(s.density_after) << " ("
              << s.reason << ")\n";
  std::cout << "final density " << to_string(res.density) << ", eps " << res.epsilon << ", " << res.termination
            << '\n';
}
