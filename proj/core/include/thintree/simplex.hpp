#pragma once

#include <vector>

#include "thintree/rational.hpp"

namespace thintree {

struct SimplexResult {
    enum class Status { Optimal, Unbounded, Infeasible };
    Status status = Status::Infeasible;
    Rational value;
    std::vector<Rational> x;  // basic feasible solution, a vertex of {Ax<=b, x>=0}
};

// Maximizes c.x over {A x <= b, x >= 0} in exact rational arithmetic.
// Two-phase tableau method; Bland's pivoting rule throughout, so the method
// terminates even on degenerate bases.
SimplexResult solve_lp(const std::vector<std::vector<Rational>>& A,
                       const std::vector<Rational>& b, const std::vector<Rational>& c);

}  // namespace thintree
