#pragma once

#include <cstddef>
#include <vector>

namespace circrep::detail {

struct TransportSolution {
  double cost = 0.0;
  std::vector<double> flow;  // rows x cols, row-major
};

// Balanced transportation problem: supply (rows) and demand (cols) with equal
// totals, dense cost matrix. Northwest-corner start, MODI pricing with
// Dantzig's rule, falling back to Bland's rule after a run of degenerate
// pivots. Deterministic.
TransportSolution solve_transport(const std::vector<double>& supply,
                                  const std::vector<double>& demand,
                                  const std::vector<double>& cost);

}  // namespace circrep::detail
