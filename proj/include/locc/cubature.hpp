#pragma once

#include <functional>

namespace locc {

// Adaptive Gauss-Legendre quadrature on [a, b] to absolute tolerance tol.
// Throws Error(CubatureNotConverged) if the recursion depth is exhausted.
double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    double tol);

// Nested adaptive cubature of f over the box [lo_i, hi_i]^3.
double integrate_3d(const std::function<double(double, double, double)>& f,
                    const double lo[3], const double hi[3], double tol);

}  // namespace locc
