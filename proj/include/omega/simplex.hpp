#pragma once

// Exact rational feasibility solver for systems { x >= 0 : A x = b }, via a
// phase-1 simplex over mpq_class. Infeasible systems come back with a Farkas
// vector y (y.A <= 0 componentwise, y.b > 0) read off the final tableau.

#include <gmpxx.h>

#include <vector>

namespace omega {

struct FeasResult {
  bool feasible = false;
  std::vector<mpq_class> solution;  // feasible only: one value per column
  std::vector<mpq_class> farkas;    // infeasible only: one value per row
};

FeasResult solve_feasibility(const std::vector<std::vector<mpq_class>>& cols,
                             const std::vector<mpq_class>& b);

}  // namespace omega
