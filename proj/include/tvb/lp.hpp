#pragma once

#include "tvb/rational.hpp"

#include <vector>

namespace tvb {

struct LpFeasibility {
    bool feasible = false;
    std::vector<Rational> solution;  // one value per column when feasible
};

// Decides whether a*x = b has a solution with x >= 0, by phase-1 simplex
// with Bland's rule. Exact arithmetic throughout; termination is
// guaranteed, feasibility is decided with zero tolerance.
LpFeasibility lp_equality_feasible(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> b);

}  // namespace tvb
