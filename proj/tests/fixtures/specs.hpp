#pragma once

#include <vector>

#include "nagell/equation.hpp"

namespace nagell::fixtures {

// Both triangular signs, 3^N +- (N^3 + N), and the constant perturbations
// -7, -23, +17, -(2^k - 1) for k = 4..8.
inline std::vector<EquationSpec> oracle_specs() {
  std::vector<EquationSpec> specs{
      triangular_transform(1).first,
      triangular_transform(-1).first,
      EquationSpec(3, IntPoly{0, 1, 0, 1}, 1),
      EquationSpec(3, IntPoly{0, -1, 0, -1}, 1),
      EquationSpec(2, IntPoly{-7}, 0),
      EquationSpec(2, IntPoly{-23}, 0),
      EquationSpec(2, IntPoly{17}, 0),
  };
  for (long k = 4; k <= 8; ++k) specs.emplace_back(2, IntPoly{-((1L << k) - 1)}, 0);
  return specs;
}

}  // namespace nagell::fixtures
