#pragma once

#include <vector>

namespace locc::poly {

// One linear constraint a . y <= b over R^dim.
struct HalfSpace {
    std::vector<double> a;
    double b;
};

// Exact volume of the (possibly empty or degenerate) polytope
// {y : a_i . y <= b_i} for dim in {1, 2, 3}: vertex enumeration plus
// facet triangulation.
double halfspace_volume(int dim, const std::vector<HalfSpace>& hs);

// Constraints of the ordered simplex chamber
// {x_1 >= x_2 >= ... >= x_d >= 0, sum x_i = 1} in coordinates (x_1..x_{d-1}).
std::vector<HalfSpace> chamber_constraints(int d);

// Partial-sum constraints sum_{i<=k} x_i <= / >= sum_{i<=k} lambda_i,
// k = 1..d-1, for the source region S(lambda) (upper = true) or the
// accessible region A(lambda) (upper = false).
std::vector<HalfSpace> majorization_constraints(const std::vector<double>& lambdaSorted,
                                                bool upper);

}  // namespace locc::poly
