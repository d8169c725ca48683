#include "locc/cubature.hpp"

#include <array>
#include <cmath>

#include "locc/states.hpp"

namespace locc {

namespace {

constexpr int kOrder = 16;

struct GaussRule {
    std::array<double, kOrder> node;    // on [-1, 1]
    std::array<double, kOrder> weight;
};

// Legendre roots by Newton iteration from the Chebyshev initial guess.
GaussRule make_rule() {
    GaussRule rule{};
    const int n = kOrder;
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.node[i] = x;
        rule.weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

const GaussRule& rule() {
    static const GaussRule r = make_rule();
    return r;
}

double gauss(const std::function<double(double)>& f, double a, double b) {
    const GaussRule& r = rule();
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < kOrder; ++i) {
        sum += r.weight[i] * f(mid + half * r.node[i]);
    }
    return half * sum;
}

double adapt(const std::function<double(double)>& f, double a, double b, double tol,
             double whole, int depth) {
    if (depth > 40) {
        throw Error(ErrorCode::CubatureNotConverged, "quadrature recursion too deep");
    }
    double mid = 0.5 * (a + b);
    double left = gauss(f, a, mid);
    double right = gauss(f, mid, b);
    if (std::abs(left + right - whole) <= tol) {
        return left + right;
    }
    return adapt(f, a, mid, 0.5 * tol, left, depth + 1) +
           adapt(f, mid, b, 0.5 * tol, right, depth + 1);
}

}  // namespace

double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    double tol) {
    if (a >= b) return 0.0;
    return adapt(f, a, b, tol, gauss(f, a, b), 0);
}

double integrate_3d(const std::function<double(double, double, double)>& f,
                    const double lo[3], const double hi[3], double tol) {
    // Inner tolerances leave headroom for the accumulation across levels.
    double innerTol = tol / 20.0;
    auto outer = [&](double x) {
        auto middle = [&](double y) {
            auto inner = [&](double z) { return f(x, y, z); };
            double span = std::max(hi[1] - lo[1], 1e-30);
            return integrate_1d(inner, lo[2], hi[2], innerTol / span / 10.0);
        };
        double span = std::max(hi[0] - lo[0], 1e-30);
        return integrate_1d(middle, lo[1], hi[1], innerTol / span);
    };
    return integrate_1d(outer, lo[0], hi[0], innerTol);
}

}  // namespace locc
