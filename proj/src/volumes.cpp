#include "locc/volumes.hpp"

#include <algorithm>
#include <cmath>

#include "locc/cubature.hpp"
#include "locc/polytope.hpp"
#include "locc/rng.hpp"

namespace locc {

namespace {

constexpr double kPi = 3.14159265358979323846;

// f_z = 2 |Re(z^2)| / (1 + |z|^4)
double f_of(const GhzParams& p) {
    return 2.0 * std::abs(p.reZ2()) / (1.0 + p.modZ4());
}

}  // namespace

std::string to_string(VolumeMethod m) {
    switch (m) {
        case VolumeMethod::ClosedForm: return "ClosedForm";
        case VolumeMethod::Cubature: return "Cubature";
        case VolumeMethod::MonteCarlo: return "MonteCarlo";
        case VolumeMethod::ExactPolytope: return "ExactPolytope";
    }
    return "Unknown";
}

VolumeReport w_volumes(const WParams& p) {
    VolumeReport r;
    r.Va = p.x1 * p.x2 * p.x3;
    r.Vs = p.x0 * p.x0 * p.x0 / 6.0;
    r.VaSup = 1.0 / 27.0;
    r.VsSup = 1.0 / 6.0;
    r.dims = {3, p.isMes() ? 0 : 3};
    r.method = VolumeMethod::ClosedForm;
    r.Ea = 27.0 * r.Va;
    r.Es = 1.0 - 6.0 * r.Vs;
    return r;
}

VolumeReport ghz_generic_volumes(const GhzParams& p) {
    if (classify_ghz(p).tag != GhzTag::GenericNonMes) {
        throw Error(ErrorCode::WrongClass, "ghz_generic_volumes needs a generic case-A state");
    }
    VolumeReport r;
    r.Va = (0.5 - p.g1) * (0.5 - p.g2) * (0.5 - p.g3);
    double G = p.G();
    double f = f_of(p);
    if (f <= eps_class) {
        r.Vs = G;  // Re(z^2) = 0 branch, 0 log 0 = 0
    } else {
        double lf = std::log(f);
        r.Vs = G * (1.0 + f * (lf * (1.0 - 0.5 * lf) - 1.0));
    }
    r.VaSup = 0.125;
    r.VsSup = 0.125;
    r.dims = {3, 3};
    r.method = VolumeMethod::ClosedForm;
    r.Ea = 8.0 * r.Va;
    r.Es = 1.0 - 8.0 * r.Vs;
    return r;
}

VolumeReport ghz_mes_accessible(const GhzParams& p, double tol) {
    if (classify_ghz(p).tag != GhzTag::Mes) {
        throw Error(ErrorCode::WrongClass, "ghz_mes_accessible needs an MES state");
    }
    double G = p.G();  // limits use |g_3|; all g_i > 0 here
    auto integrand = [G](double h1, double h2, double h3) {
        double u = h1 * h2 * h3 / G;
        // r_lower^2 = u - sqrt(u^2 - 1) = 1 / (u + sqrt(u^2 - 1))
        double s = u * u - 1.0;
        double rlow = 1.0 / std::sqrt(u + std::sqrt(std::max(s, 0.0)));
        return 1.0 - rlow;
    };
    double lo[3] = {p.g1, p.g2, p.g3};
    double hi[3] = {0.5, 0.5, 0.5};
    VolumeReport r;
    r.Va = integrate_3d(integrand, lo, hi, tol);
    r.Vs = 0.0;
    r.VaSup = 0.125;
    r.VsSup = 0.0;
    r.dims = {4, 0};
    r.method = VolumeMethod::Cubature;
    r.Ea = 8.0 * r.Va;
    r.Es = 1.0;
    return r;
}

VolumeReport ghz_vanishing_volumes(const GhzParams& p) {
    GhzClass c = classify_ghz(p);
    if (c.zeroCount() == 0) {
        throw Error(ErrorCode::WrongClass, "ghz_vanishing_volumes needs vanishing parameters");
    }
    // Non-vanishing parameters, in index order.
    std::array<double, 2> nz{0.0, 0.0};
    int count = 0;
    for (int i = 0; i < 3; ++i) {
        if (!c.vanishes[static_cast<size_t>(i)]) nz[static_cast<size_t>(count++)] = p.g(i);
    }
    VolumeReport r;
    r.method = VolumeMethod::ClosedForm;
    double rr = p.r;
    if (!c.rIsOne) {
        switch (c.zeroCount()) {
            case 1:
                r.Va = (0.5 - nz[0]) * (0.5 - nz[1]) * rr;
                r.Vs = nz[0] * nz[1] * (1.0 - rr);
                r.VaSup = 0.25;
                r.VsSup = 0.25;
                r.dims = {3, 3};
                break;
            case 2:
                r.Va = (0.5 - nz[0]) * rr;  // branch multiplicity 2 included
                r.Vs = nz[0] * (1.0 - rr);
                r.VaSup = 0.5;
                r.VsSup = 0.5;
                r.dims = {3, 2};
                break;
            default:
                r.Va = 0.75 * rr;  // branch multiplicity 3 included
                r.Vs = 1.0 - rr;
                r.VaSup = 0.75;
                r.VsSup = 1.0;
                r.dims = {3, 1};
                break;
        }
    } else {
        switch (c.zeroCount()) {
            case 1:
                r.Va = (0.5 - nz[0]) * (0.5 - nz[1]);
                r.Vs = nz[0] * nz[1];
                r.VaSup = 0.25;
                r.VsSup = 0.25;
                r.dims = {4, 2};
                break;
            case 2:
                r.Va = 0.5 * (0.5 - nz[0]);
                r.Vs = nz[0];
                r.VaSup = 0.25;
                r.VsSup = 0.5;
                r.dims = {4, 1};
                break;
            default:  // the GHZ-state
                r.Va = 0.25;
                r.Vs = 0.0;
                r.VaSup = 0.25;
                r.VsSup = 1.0;
                r.dims = {4, 0};
                break;
        }
    }
    r.Ea = r.VaSup > 0.0 ? r.Va / r.VaSup : 0.0;
    r.Es = r.VsSup > 0.0 ? 1.0 - r.Vs / r.VsSup : 1.0;
    return r;
}

VolumeReport ghz_volumes(const GhzParams& p, double mesTol) {
    GhzClass c = classify_ghz(p);
    switch (c.tag) {
        case GhzTag::GenericNonMes: return ghz_generic_volumes(p);
        case GhzTag::Mes: return ghz_mes_accessible(p, mesTol);
        default: return ghz_vanishing_volumes(p);
    }
}

namespace {

// Uniform sample from the ordered chamber: Dirichlet(1,..,1) via sorted
// uniform spacings, then sorted descending.
std::vector<double> chamber_sample(const CounterRng& rng, uint64_t index, int d) {
    std::vector<double> u(static_cast<size_t>(d - 1));
    for (int i = 0; i < d - 1; ++i) {
        u[static_cast<size_t>(i)] =
            rng.uniform(index * static_cast<uint64_t>(d) + static_cast<uint64_t>(i));
    }
    std::sort(u.begin(), u.end());
    std::vector<double> x(static_cast<size_t>(d));
    double prev = 0.0;
    for (int i = 0; i < d - 1; ++i) {
        x[static_cast<size_t>(i)] = u[static_cast<size_t>(i)] - prev;
        prev = u[static_cast<size_t>(i)];
    }
    x[static_cast<size_t>(d - 1)] = 1.0 - prev;
    std::sort(x.begin(), x.end(), std::greater<double>());
    return x;
}

// x, y sorted descending, equal sums.
bool majorized_by(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0.0, sy = 0.0;
    for (size_t k = 0; k < x.size(); ++k) {
        sx += x[k];
        sy += y[k];
        if (sx > sy + eps_norm) return false;
    }
    return true;
}

}  // namespace

VolumeReport bipartite_volumes(const SchmidtVector& lam, BipartiteMethod method,
                               uint64_t n, uint64_t seed) {
    int d = lam.dim();
    bool exact = method == BipartiteMethod::Exact ||
                 (method == BipartiteMethod::Auto && d <= 4);
    if (exact && d > 4) {
        throw Error(ErrorCode::DimensionTooLarge, "exact volumes only for d <= 4");
    }

    auto chamber = poly::chamber_constraints(d);
    double sup = poly::halfspace_volume(d - 1, chamber);

    VolumeReport r;
    r.VaSup = sup;
    r.VsSup = sup;
    r.dims = {d - 1, d - 1};

    if (exact) {
        auto hsA = chamber;
        for (auto& h : poly::majorization_constraints(lam.lambda(), /*upper=*/false)) {
            hsA.push_back(h);
        }
        auto hsS = chamber;
        for (auto& h : poly::majorization_constraints(lam.lambda(), /*upper=*/true)) {
            hsS.push_back(h);
        }
        r.Va = poly::halfspace_volume(d - 1, hsA);
        r.Vs = poly::halfspace_volume(d - 1, hsS);
        r.method = VolumeMethod::ExactPolytope;
    } else {
        if (n < 1000) {
            throw Error(ErrorCode::NotConverged, "Monte Carlo needs n >= 1000");
        }
        CounterRng rngA(seed, 1), rngS(seed, 2);
        uint64_t hitsA = 0, hitsS = 0;
        for (uint64_t i = 0; i < n; ++i) {
            auto xa = chamber_sample(rngA, i, d);
            if (majorized_by(lam.lambda(), xa)) ++hitsA;
            auto xs = chamber_sample(rngS, i, d);
            if (majorized_by(xs, lam.lambda())) ++hitsS;
        }
        double pa = static_cast<double>(hitsA) / static_cast<double>(n);
        double ps = static_cast<double>(hitsS) / static_cast<double>(n);
        r.Va = pa * sup;
        r.Vs = ps * sup;
        r.VaStderr = std::sqrt(pa * (1.0 - pa) / static_cast<double>(n)) * sup;
        r.VsStderr = std::sqrt(ps * (1.0 - ps) / static_cast<double>(n)) * sup;
        r.method = VolumeMethod::MonteCarlo;
    }
    r.Ea = sup > 0.0 ? r.Va / sup : 0.0;
    r.Es = sup > 0.0 ? 1.0 - r.Vs / sup : 1.0;
    r.Ea = std::clamp(r.Ea, 0.0, 1.0);
    r.Es = std::clamp(r.Es, 0.0, 1.0);
    return r;
}

std::array<double, 3> concurrences(const WParams& p) {
    return {4.0 * p.x1 * (1.0 - p.x1 - p.x0), 4.0 * p.x2 * (1.0 - p.x2 - p.x0),
            4.0 * p.x3 * (1.0 - p.x3 - p.x0)};
}

std::array<double, 3> concurrences(const GhzParams& p) {
    double r4 = p.modZ4();
    double r2 = p.r * p.r;
    double denom = 1.0 + r4 + 16.0 * r2 * p.G() * std::cos(2.0 * p.phi);
    std::array<double, 3> c{};
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        double gi = p.g(i), gj = p.g(j), gk = p.g(k);
        c[static_cast<size_t>(i)] = 4.0 * r4 * (1.0 - 4.0 * gi * gi) *
                                    (1.0 - 16.0 * gj * gj * gk * gk) / (denom * denom);
    }
    return c;
}

std::array<double, 3> concurrences(const State& s) {
    if (std::holds_alternative<WParams>(s)) return concurrences(std::get<WParams>(s));
    return concurrences(std::get<GhzParams>(s));
}

std::array<double, 3> mes_signed_g(const GhzParams& p) {
    GhzClass c = classify_ghz(p);
    if (c.tag != GhzTag::Mes) {
        throw Error(ErrorCode::WrongClass, "mes_signed_g needs an MES state");
    }
    bool zIsI = std::abs(p.phi - kPi / 2.0) <= eps_class;
    return {p.g1, p.g2, zIsI ? -p.g3 : p.g3};
}

GhzParams mes_from_signed_g(const std::array<double, 3>& g) {
    bool neg = g[2] < 0.0;
    return validate_ghz(g[0], g[1], std::abs(g[2]), 1.0, neg ? kPi / 2.0 : 0.0);
}

MesEigs mes_min_eigs(const std::array<double, 3>& signedG) {
    // zeros allowed (the GHZ-state gives E_i = 1); magnitudes must stay < 1/2
    for (double g : signedG) {
        if (std::abs(g) >= 0.5) {
            throw Error(ErrorCode::WrongClass, "mes_min_eigs needs |g_i| < 1/2");
        }
    }
    if (signedG[0] < 0.0 || signedG[1] < 0.0) {
        throw Error(ErrorCode::WrongClass, "signed encoding keeps g_1, g_2 positive");
    }
    double D = 1.0 + 8.0 * signedG[0] * signedG[1] * signedG[2];
    MesEigs out{};
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        double gi = signedG[static_cast<size_t>(i)];
        double gjk = signedG[static_cast<size_t>(j)] * signedG[static_cast<size_t>(k)];
        double plus = (1.0 + 2.0 * gi) * (1.0 + 4.0 * gjk) / D;
        double minus = (1.0 - 2.0 * gi) * (1.0 - 4.0 * gjk) / D;
        bool usePlus = plus < minus;
        out.emin[static_cast<size_t>(i)] = usePlus ? plus : minus;
        out.plusBranch[static_cast<size_t>(i)] = usePlus;
    }
    const auto& b = out.plusBranch;
    if (!b[0] && !b[1] && !b[2]) out.caseIndex = 1;
    else if (!b[0] && !b[1] && b[2]) out.caseIndex = 2;
    else if (!b[0] && b[1] && b[2]) out.caseIndex = 3;
    else if (b[0] && !b[1] && b[2]) out.caseIndex = 4;
    else out.caseIndex = 0;
    return out;
}

}  // namespace locc
