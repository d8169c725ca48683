#include "locc/characterize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace locc {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kResidualTol = 1e-8;

double relerr(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

double f_of(const GhzParams& p) {
    return 2.0 * std::abs(p.reZ2()) / (1.0 + p.modZ4());
}

// Bisection of a monotone (or at least single-crossing) function on [lo, hi]
// with f(lo), f(hi) of opposite sign.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double flo) {
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Scans [lo, hi] for roots of fn, which returns NaN outside its feasible
// set. Every sign change between finite grid values is bisected. When the
// feasible set opens or closes between grid points the edge is located by
// bisection as well: the root frequently sits right at such an edge (a
// square-root argument passing through zero), where a plain grid walk never
// brackets it. onRoot receives candidate abscissas; callers verify them.
void scan_roots(const std::function<double(double)>& fn, double lo, double hi,
                int nGrid, const std::function<void(double)>& onRoot) {
    auto boundary = [&](double feasible, double infeasible) {
        for (int it = 0; it < 80; ++it) {
            double mid = 0.5 * (feasible + infeasible);
            if (std::isfinite(fn(mid))) feasible = mid;
            else infeasible = mid;
        }
        return feasible;
    };
    // A dip of |fn| that stays on one side of zero at the grid nodes can
    // still cross zero twice in between (a near-tangent pair of roots);
    // minimize |fn| over the bracketing nodes and split the dip if it does.
    auto dip = [&](double xa, double xb, double sgn) {
        double gl = xa, gr = xb;
        const double kGolden = 0.3819660112501051;
        double ml = gl + kGolden * (gr - gl);
        double mr = gr - kGolden * (gr - gl);
        auto h = [&](double x) {
            double v = sgn * fn(x);
            return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
        };
        double fl = h(ml), fr = h(mr);
        for (int it = 0; it < 120 && gr - gl > 1e-15; ++it) {
            if (fl < fr) {
                gr = mr; mr = ml; fr = fl;
                ml = gl + kGolden * (gr - gl);
                fl = h(ml);
            } else {
                gl = ml; ml = mr; fl = fr;
                mr = gr - kGolden * (gr - gl);
                fr = h(mr);
            }
        }
        double xm = fl < fr ? ml : mr;
        double vm = fn(xm);
        if (!std::isfinite(vm)) return;
        if (sgn * vm <= 0.0) {
            double va = fn(xa), vb = fn(xb);
            if (std::isfinite(va)) onRoot(bisect(fn, xa, xm, va));
            if (std::isfinite(vb) && (sgn * vm < 0.0)) onRoot(bisect(fn, xm, xb, vm));
        } else {
            onRoot(xm);  // possible tangency; the caller's residual check decides
        }
    };

    double lastV = NAN, lastX = NAN;
    double prevV = NAN, prevX = NAN;  // two nodes back
    for (int k = 0; k <= nGrid; ++k) {
        double x = lo + (hi - lo) * static_cast<double>(k) / nGrid;
        double v = fn(x);
        if (std::isfinite(lastV) && std::isfinite(v)) {
            if ((lastV <= 0.0 && v >= 0.0) || (lastV >= 0.0 && v <= 0.0)) {
                onRoot(bisect(fn, lastX, x, lastV));
            } else if (std::isfinite(prevV) && (prevV > 0.0) == (v > 0.0) &&
                       std::abs(lastV) < std::abs(prevV) &&
                       std::abs(lastV) <= std::abs(v)) {
                dip(prevX, x, lastV > 0.0 ? 1.0 : -1.0);
            }
        } else if (std::isfinite(lastV) && !std::isfinite(v)) {
            double xb = boundary(lastX, x);
            double vb = fn(xb);
            if (std::isfinite(vb)) {
                if ((lastV <= 0.0 && vb >= 0.0) || (lastV >= 0.0 && vb <= 0.0)) {
                    onRoot(bisect(fn, lastX, xb, lastV));
                } else {
                    // same sign at node and edge; the function can still bump
                    // through zero in between
                    dip(lastX, xb, lastV > 0.0 ? 1.0 : -1.0);
                }
            }
        } else if (!std::isfinite(lastV) && std::isfinite(v) && k > 0) {
            double xb = boundary(x, lastX);
            double vb = fn(xb);
            if (std::isfinite(vb)) {
                if ((vb <= 0.0 && v >= 0.0) || (vb >= 0.0 && v <= 0.0)) {
                    onRoot(bisect(fn, xb, x, vb));
                } else {
                    dip(xb, x, v > 0.0 ? 1.0 : -1.0);
                }
            }
        }
        prevV = lastV;
        prevX = lastX;
        lastV = v;
        lastX = x;
    }
}

}  // namespace

std::string to_string(Ambiguity a) {
    switch (a) {
        case Ambiguity::Unique: return "Unique";
        case Ambiguity::ByBit: return "ByBit";
        case Ambiguity::ConjugatePair: return "ConjugatePair";
        case Ambiguity::Multiple: return "Multiple";
    }
    return "Unknown";
}

MeasureTuple measure(const State& s, double mesTol) {
    MeasureTuple t;
    auto c = concurrences(s);
    t.C1 = c[0];
    t.C2 = c[1];
    t.C3 = c[2];
    if (std::holds_alternative<WParams>(s)) {
        auto v = w_volumes(std::get<WParams>(s));
        t.Ea = v.Ea;
        t.Es = v.Es;
        t.dims = v.dims;
        return t;
    }
    const auto& p = std::get<GhzParams>(s);
    GhzClass cls = classify_ghz(p);
    VolumeReport v = ghz_volumes(p, mesTol);
    t.Ea = v.Ea;
    t.Es = v.Es;
    t.dims = v.dims;
    if (cls.tag == GhzTag::GenericNonMes && f_of(p) > eps_class) {
        t.bit = compute_bit_generic(p);
    } else if (cls.tag == GhzTag::Mes) {
        auto em = mes_min_eigs(mes_signed_g(p));
        if (mes_candidates(em.emin).size() == 2) t.bit = compute_bit_mes(p);
    }
    return t;
}

// ---------------------------------------------------------------------------
// W class
// ---------------------------------------------------------------------------

InversionResult invert_w(const WMeasureInput& m) {
    std::array<std::optional<double>, 3> C{m.C1, m.C2, m.C3};
    int nC = (m.C1 ? 1 : 0) + (m.C2 ? 1 : 0) + (m.C3 ? 1 : 0);
    int nTotal = nC + (m.Ea ? 1 : 0) + (m.Es ? 1 : 0);
    if (nTotal != 3) {
        throw Error(ErrorCode::PreconditionViolated, "invert_w needs exactly 3 measures");
    }
    std::vector<int> ci;
    for (int i = 0; i < 3; ++i) {
        if (C[static_cast<size_t>(i)]) ci.push_back(i);
    }

    std::vector<WParams> cands;
    auto consider = [&](double x0, std::array<double, 3> x) {
        if (!(x0 >= -1e-12 && x[0] > 0.0 && x[1] > 0.0 && x[2] > 0.0)) return;
        WParams w{std::max(x0, 0.0), x[0], x[1], x[2]};
        double sum = w.x0 + w.x1 + w.x2 + w.x3;
        if (std::abs(sum - 1.0) > 1e-9) return;
        // renormalize the rounding slack so validate_w accepts
        w.x0 = std::max(0.0, 1.0 - w.x1 - w.x2 - w.x3);
        auto cc = concurrences(w);
        auto vv = w_volumes(w);
        double res = 0.0;
        for (int i = 0; i < 3; ++i) {
            if (C[static_cast<size_t>(i)]) {
                res = std::max(res, relerr(cc[static_cast<size_t>(i)], *C[static_cast<size_t>(i)]));
            }
        }
        if (m.Ea) res = std::max(res, relerr(vv.Ea, *m.Ea));
        if (m.Es) res = std::max(res, relerr(vv.Es, *m.Es));
        if (res > kResidualTol) return;
        for (const auto& o : cands) {
            if (std::abs(o.x0 - w.x0) < 1e-8 && std::abs(o.x1 - w.x1) < 1e-8 &&
                std::abs(o.x2 - w.x2) < 1e-8 && std::abs(o.x3 - w.x3) < 1e-8) {
                return;
            }
        }
        cands.push_back(w);
    };

    // Root of C_i = 4 x (s - x) with s = 1 - x0.
    auto xRoot = [&](double Cval, double s, int sgn) -> std::optional<double> {
        double disc = s * s - Cval;
        if (disc < 0.0) return std::nullopt;
        return 0.5 * (s + sgn * std::sqrt(disc));
    };

    if (m.Es) {
        double x0 = std::cbrt(std::max(0.0, 1.0 - *m.Es));
        double s = 1.0 - x0;
        if (nC == 2) {
            int i = ci[0], j = ci[1];
            int k = 3 - i - j;
            for (int si : {-1, 1}) {
                for (int sj : {-1, 1}) {
                    auto xi = xRoot(*C[static_cast<size_t>(i)], s, si);
                    auto xj = xRoot(*C[static_cast<size_t>(j)], s, sj);
                    if (!xi || !xj) continue;
                    std::array<double, 3> x{};
                    x[static_cast<size_t>(i)] = *xi;
                    x[static_cast<size_t>(j)] = *xj;
                    x[static_cast<size_t>(k)] = s - *xi - *xj;
                    consider(x0, x);
                }
            }
        } else {  // one C plus Ea
            int i = ci[0];
            for (int si : {-1, 1}) {
                auto xi = xRoot(*C[static_cast<size_t>(i)], s, si);
                if (!xi || *xi <= 0.0) continue;
                double rest = s - *xi;
                double prod = *m.Ea / (27.0 * *xi);
                double disc = rest * rest - 4.0 * prod;
                if (disc < 0.0) continue;
                double xa = 0.5 * (rest + std::sqrt(disc));
                double xb = rest - xa;
                int j = (i + 1) % 3, k = (i + 2) % 3;
                for (int ord : {0, 1}) {
                    std::array<double, 3> x{};
                    x[static_cast<size_t>(i)] = *xi;
                    x[static_cast<size_t>(j)] = ord ? xb : xa;
                    x[static_cast<size_t>(k)] = ord ? xa : xb;
                    consider(x0, x);
                }
            }
        }
    } else {
        // No Es: scan x0, bisect each sign change of the closing constraint.
        int nBranch = nC == 3 ? 8 : 4;
        for (int mask = 0; mask < nBranch; ++mask) {
            auto closeFn = [&](double x0) -> double {
                double s = 1.0 - x0;
                std::array<double, 3> x{};
                for (size_t q = 0; q < ci.size(); ++q) {
                    int sgn = (mask >> q) & 1 ? 1 : -1;
                    auto xi = xRoot(*C[static_cast<size_t>(ci[q])], s, sgn);
                    if (!xi) return NAN;
                    x[static_cast<size_t>(ci[q])] = *xi;
                }
                if (nC == 3) {
                    return x[0] + x[1] + x[2] - s;
                }
                int k = 3 - ci[0] - ci[1];
                x[static_cast<size_t>(k)] = s - x[static_cast<size_t>(ci[0])] -
                                            x[static_cast<size_t>(ci[1])];
                if (x[static_cast<size_t>(k)] <= 0.0) return NAN;
                return 27.0 * x[0] * x[1] * x[2] - *m.Ea;
            };
            scan_roots(closeFn, 0.0, 1.0 - 1e-9, 2000, [&](double root) {
                double s = 1.0 - root;
                std::array<double, 3> x{};
                for (size_t qq = 0; qq < ci.size(); ++qq) {
                    int sgn = (mask >> qq) & 1 ? 1 : -1;
                    auto xi = xRoot(*C[static_cast<size_t>(ci[qq])], s, sgn);
                    if (!xi) return;
                    x[static_cast<size_t>(ci[qq])] = *xi;
                }
                if (nC == 2) {
                    int k = 3 - ci[0] - ci[1];
                    x[static_cast<size_t>(k)] =
                        s - x[static_cast<size_t>(ci[0])] - x[static_cast<size_t>(ci[1])];
                }
                consider(root, x);
            });
        }
    }

    if (cands.empty()) {
        throw Error(ErrorCode::Inconsistent, "no W state matches the supplied measures");
    }
    std::sort(cands.begin(), cands.end(), [](const WParams& a, const WParams& b) {
        return std::tie(a.x0, a.x1, a.x2, a.x3) < std::tie(b.x0, b.x1, b.x2, b.x3);
    });
    InversionResult r;
    r.state = cands[0];
    for (const auto& c : cands) r.candidates.emplace_back(c);
    r.ambiguityResolved = cands.size() == 1 ? Ambiguity::Unique : Ambiguity::Multiple;
    auto cc = concurrences(cands[0]);
    auto vv = w_volumes(cands[0]);
    double res = 0.0;
    for (int i = 0; i < 3; ++i) {
        if (C[static_cast<size_t>(i)]) res = std::max(res, relerr(cc[static_cast<size_t>(i)], *C[static_cast<size_t>(i)]));
    }
    if (m.Ea) res = std::max(res, relerr(vv.Ea, *m.Ea));
    if (m.Es) res = std::max(res, relerr(vv.Es, *m.Es));
    r.residual = res;
    return r;
}

// ---------------------------------------------------------------------------
// Generic GHZ
// ---------------------------------------------------------------------------

bool compute_bit_generic(const GhzParams& p) {
    if (classify_ghz(p).tag != GhzTag::GenericNonMes) {
        throw Error(ErrorCode::WrongClass, "compute_bit_generic needs a generic state");
    }
    double f = f_of(p);
    std::array<double, 3> h{p.g1, p.g2, f * p.g3};
    GhzParams phi1{h[0], h[1], h[2], 1.0, 0.0};
    GhzParams phi2{h[0], h[1], h[2], 1.0, kPi / 2.0};
    auto c1 = concurrences(phi1);
    auto c2 = concurrences(phi2);
    double s1 = c1[0] + c1[1] + c1[2];
    double s2 = c2[0] + c2[1] + c2[2];
    if (std::abs(s1 - s2) <= 1e-10) {
        // The z = i source always wins the comparison, so the bit reduces to
        // the sign of Re(z^2); fall back to it when the sums are too close
        // to resolve (possible for very small r).
        return p.reZ2() < 0.0;
    }
    double own = p.reZ2() > 0.0 ? s1 : s2;
    return own == std::max(s1, s2);
}

InversionResult invert_ghz_generic(const MeasureTuple& t) {
    double C1 = t.C1, C2 = t.C2, C3 = t.C3;

    // The clamp keeps the scan function continuous when the elimination
    // leaves the feasible range; the root can sit exactly on the boundary
    // (e.g. when one g_i is tiny), where an open-interval cutoff would make
    // the sign change unbracketable.
    auto g2of = [&](double g1) -> double {
        double num = C1 - C2 + 4.0 * g1 * g1 * C3;
        double den = 4.0 * g1 * g1 * (C1 - C2) + C3;
        if (!(den > 0.0)) return NAN;
        return 0.5 * std::sqrt(std::clamp(num / den, 0.0, 1.0));
    };
    auto g3of = [&](double g1) -> double {
        double num = C1 - C3 + 4.0 * g1 * g1 * C2;
        double den = 4.0 * g1 * g1 * (C1 - C3) + C2;
        if (!(den > 0.0)) return NAN;
        return 0.5 * std::sqrt(std::clamp(num / den, 0.0, 1.0));
    };
    auto eaOf = [&](double g1) -> double {
        double g2 = g2of(g1), g3 = g3of(g1);
        if (!std::isfinite(g2) || !std::isfinite(g3)) return NAN;
        return 8.0 * (0.5 - g1) * (0.5 - g2) * (0.5 - g3) - t.Ea;
    };

    // E_a(g_1) is strictly decreasing; locate a feasible bracket first. The
    // scan covers the near-boundary sliver too: valid states can carry g_1
    // arbitrarily close to 0 or 1/2.
    const int nGrid = 2000;
    const double g1Lo = 1e-12, g1Hi = 0.5 - 1e-12;
    double g1 = NAN;
    double prev = NAN, prevX = NAN;
    for (int q = 0; q <= nGrid; ++q) {
        double x = g1Lo + (g1Hi - g1Lo) * static_cast<double>(q) / nGrid;
        double v = eaOf(x);
        if (std::isfinite(prev) && std::isfinite(v) && prev >= 0.0 && v <= 0.0) {
            g1 = bisect(eaOf, prevX, x, prev);
            break;
        }
        if (std::isfinite(v)) {
            prev = v;
            prevX = x;
        }
    }
    if (!std::isfinite(g1)) {
        throw Error(ErrorCode::Inconsistent, "no g_1 reproduces the accessible volume");
    }
    double g2 = g2of(g1), g3 = g3of(g1);
    double G = g1 * g2 * g3;

    // Source volume determines f = 2 r^2 |cos 2 phi| / (1 + r^4).
    double VsOverG = (1.0 - t.Es) / (8.0 * G);
    if (VsOverG < -1e-9 || VsOverG > 1.0 + 1e-9) {
        throw Error(ErrorCode::Inconsistent, "source volume outside the feasible range");
    }
    VsOverG = std::clamp(VsOverG, 0.0, 1.0);
    auto vOf = [](double f) {
        if (f <= 0.0) return 1.0;
        double lf = std::log(f);
        return 1.0 + f * (lf * (1.0 - 0.5 * lf) - 1.0);
    };
    double f = 0.0;
    if (VsOverG < 1.0) {
        f = bisect([&](double x) { return vOf(x) - VsOverG; }, 0.0, 1.0, 1.0 - VsOverG);
    }

    double K = std::sqrt((1.0 - 4.0 * g2 * g2) * (1.0 - 16.0 * g1 * g1 * g3 * g3) / C2);

    std::vector<GhzParams> cands;
    auto tryBranch = [&](int sgn) {
        double beta = 1.0 + sgn * 8.0 * G * f;
        if (beta <= 1e-14) return;
        double disc = K * K - beta * beta;
        if (disc < 0.0) return;
        double tt = beta / (K + std::sqrt(disc));  // r^2 (stable small root)
        if (!(tt > 0.0 && tt <= 1.0 + 1e-9)) return;
        tt = std::min(tt, 1.0);
        double c = sgn * f * (1.0 + tt * tt) / (2.0 * tt);
        if (std::abs(c) > 1.0 + 1e-9) return;
        c = std::clamp(c, -1.0, 1.0);
        GhzParams cand = canonicalize_ghz(GhzParams{g1, g2, g3, std::sqrt(tt),
                                                    0.5 * std::acos(c)});
        if (classify_ghz(cand).tag != GhzTag::GenericNonMes) return;
        auto cc = concurrences(cand);
        auto vv = ghz_generic_volumes(cand);
        double res = std::max({relerr(cc[0], C1), relerr(cc[1], C2), relerr(cc[2], C3),
                               relerr(vv.Ea, t.Ea), relerr(vv.Es, t.Es)});
        if (res > 1e-6) return;
        for (const auto& o : cands) {
            if (std::abs(o.r - cand.r) < 1e-9 && std::abs(o.phi - cand.phi) < 1e-9) return;
        }
        cands.push_back(cand);
    };
    tryBranch(+1);
    tryBranch(-1);

    if (cands.empty()) {
        throw Error(ErrorCode::Inconsistent, "no generic state matches the measures");
    }

    InversionResult r;
    if (cands.size() == 2) {
        if (!t.bit) {
            throw Error(ErrorCode::BitRequired, "two candidates; disambiguation bit needed");
        }
        // b = 1 selects the state whose MES source has z = i, i.e. cos 2 phi < 0.
        bool wantNeg = *t.bit;
        const GhzParams& pick =
            (cands[0].reZ2() < 0.0) == wantNeg ? cands[0] : cands[1];
        r.state = pick;
        r.ambiguityResolved = Ambiguity::ByBit;
    } else {
        if (t.bit && f <= eps_class) {
            throw Error(ErrorCode::NoSecondCandidate, "cos 2 phi = 0 admits one state only");
        }
        r.state = cands[0];
        double phi = cands[0].phi;
        bool selfConj = phi <= eps_class || std::abs(phi - kPi / 2.0) <= eps_class;
        r.ambiguityResolved = selfConj ? Ambiguity::Unique : Ambiguity::ConjugatePair;
    }
    for (const auto& c : cands) r.candidates.emplace_back(c);
    auto cc = concurrences(std::get<GhzParams>(r.state));
    auto vv = ghz_generic_volumes(std::get<GhzParams>(r.state));
    r.residual = std::max({relerr(cc[0], C1), relerr(cc[1], C2), relerr(cc[2], C3),
                           relerr(vv.Ea, t.Ea), relerr(vv.Es, t.Es)});
    return r;
}

// ---------------------------------------------------------------------------
// GHZ-MES (Lemma 2)
// ---------------------------------------------------------------------------

std::vector<std::array<double, 3>> mes_candidates(const std::array<double, 3>& emin) {
    // Sign patterns of (E_1, E_2, E_3) that can attain the minima.
    static constexpr int kPatterns[4][3] = {
        {-1, -1, -1}, {-1, -1, 1}, {-1, 1, 1}, {1, -1, 1}};

    std::vector<std::array<double, 3>> cands;
    auto consider = [&](const std::array<double, 3>& q) {
        std::array<double, 3> g{0.5 * q[0], 0.5 * q[1], 0.5 * q[2]};
        if (!(g[0] > eps_class && g[0] < 0.5 && g[1] > eps_class && g[1] < 0.5 &&
              std::abs(g[2]) > eps_class && std::abs(g[2]) < 0.5)) {
            return;
        }
        MesEigs fwd;
        try {
            fwd = mes_min_eigs(g);
        } catch (const Error&) {
            return;
        }
        for (int i = 0; i < 3; ++i) {
            if (relerr(fwd.emin[static_cast<size_t>(i)], emin[static_cast<size_t>(i)]) > 1e-8) return;
        }
        for (const auto& o : cands) {
            if (std::abs(o[0] - g[0]) < 1e-8 && std::abs(o[1] - g[1]) < 1e-8 &&
                std::abs(o[2] - g[2]) < 1e-8) {
                return;
            }
        }
        cands.push_back(g);
    };

    // For a fixed sign pattern, q_i + P/q_i = c_i(P) with P = q1 q2 q3;
    // scan P for the closing root of each quadratic-branch combination.
    for (const auto& s : kPatterns) {
        for (int mask = 0; mask < 8; ++mask) {
            auto qOf = [&](double P, std::array<double, 3>& q) -> bool {
                for (int i = 0; i < 3; ++i) {
                    double c = s[i] * (emin[static_cast<size_t>(i)] - 1.0) * (1.0 + P);
                    double disc = c * c - 4.0 * P;
                    if (disc < 0.0) return false;
                    int sgn = (mask >> i) & 1 ? 1 : -1;
                    q[static_cast<size_t>(i)] = 0.5 * (c + sgn * std::sqrt(disc));
                }
                return true;
            };
            auto F = [&](double P) -> double {
                std::array<double, 3> q{};
                if (!qOf(P, q)) return NAN;
                return q[0] * q[1] * q[2] - P;
            };
            scan_roots(F, -0.999999, 0.999999, 2000, [&](double root) {
                std::array<double, 3> q{};
                if (qOf(root, q)) consider(q);
            });
        }
    }

    std::sort(cands.begin(), cands.end(),
              [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
                  return std::abs(a[0]) < std::abs(b[0]);
              });
    return cands;
}

InversionResult invert_ghz_mes(const std::array<double, 3>& emin,
                               std::optional<bool> bit) {
    auto cands = mes_candidates(emin);
    if (cands.empty()) {
        throw Error(ErrorCode::Inconsistent, "no MES state matches the eigenvalues");
    }
    InversionResult r;
    if (cands.size() >= 2) {
        if (!bit) {
            throw Error(ErrorCode::BitRequired, "two MES candidates; bit needed");
        }
        // b = 1 selects the larger accessible volume, i.e. the smaller |g_i|.
        r.state = mes_from_signed_g(*bit ? cands.front() : cands.back());
        r.ambiguityResolved = Ambiguity::ByBit;
    } else {
        r.state = mes_from_signed_g(cands[0]);
        r.ambiguityResolved = Ambiguity::Unique;
    }
    for (const auto& c : cands) r.candidates.emplace_back(mes_from_signed_g(c));
    auto fwd = mes_min_eigs(mes_signed_g(std::get<GhzParams>(r.state)));
    r.residual = std::max({relerr(fwd.emin[0], emin[0]), relerr(fwd.emin[1], emin[1]),
                           relerr(fwd.emin[2], emin[2])});
    return r;
}

bool compute_bit_mes(const GhzParams& p) {
    auto sg = mes_signed_g(p);
    auto em = mes_min_eigs(sg);
    auto cands = mes_candidates(em.emin);
    if (cands.size() < 2) return false;
    const auto& first = cands.front();
    return std::abs(first[0] - sg[0]) < 1e-7 && std::abs(first[1] - sg[1]) < 1e-7 &&
           std::abs(first[2] - sg[2]) < 1e-7;
}

// ---------------------------------------------------------------------------
// Vanishing-parameter cases
// ---------------------------------------------------------------------------

InversionResult invert_ghz_vanishing(const MeasureTuple& t) {
    std::array<double, 3> C{t.C1, t.C2, t.C3};
    int iMax = static_cast<int>(std::max_element(C.begin(), C.end()) - C.begin());
    int iMin = static_cast<int>(std::min_element(C.begin(), C.end()) - C.begin());

    std::array<double, 3> g{0.0, 0.0, 0.0};
    double r = 1.0;
    const VolumeDimension& d = t.dims;
    if (d == VolumeDimension{3, 3}) {
        // one zero, r != 1; the vanishing index carries the largest C
        int i = iMax;
        int j = (i + 1) % 3, k = (i + 2) % 3;
        double mRatio = C[static_cast<size_t>(j)] / C[static_cast<size_t>(i)];
        double nRatio = C[static_cast<size_t>(k)] / C[static_cast<size_t>(i)];
        double Q = (mRatio + nRatio - 1.0) / (mRatio * nRatio);
        double A = 1.0 - mRatio * Q;
        double B = 1.0 - nRatio * Q;
        if (!(A >= 0.0 && A < 1.0 && B >= 0.0 && B < 1.0)) {
            throw Error(ErrorCode::Inconsistent, "concurrence ratios infeasible");
        }
        g[static_cast<size_t>(j)] = 0.5 * std::sqrt(A);
        g[static_cast<size_t>(k)] = 0.5 * std::sqrt(B);
        r = t.Ea / (4.0 * (0.5 - g[static_cast<size_t>(j)]) * (0.5 - g[static_cast<size_t>(k)]));
    } else if (d == VolumeDimension{3, 2}) {
        // two zeros, r != 1; the non-vanishing index carries the smallest C
        int k = iMin;
        double ratio = C[static_cast<size_t>(k)] / C[static_cast<size_t>(iMax)];
        if (!(ratio > 0.0 && ratio <= 1.0)) {
            throw Error(ErrorCode::Inconsistent, "concurrence ratio infeasible");
        }
        g[static_cast<size_t>(k)] = 0.5 * std::sqrt(1.0 - ratio);
        r = t.Ea / (2.0 * (0.5 - g[static_cast<size_t>(k)]));
    } else if (d == VolumeDimension{3, 1}) {
        r = t.Ea;
    } else if (d == VolumeDimension{4, 2}) {
        int i = iMax;
        int j = (i + 1) % 3, k = (i + 2) % 3;
        // with r = 1 and a vanishing parameter, C_j = 1 - 4 g_j^2
        g[static_cast<size_t>(j)] = 0.5 * std::sqrt(std::max(0.0, 1.0 - C[static_cast<size_t>(j)]));
        g[static_cast<size_t>(k)] = 0.5 * std::sqrt(std::max(0.0, 1.0 - C[static_cast<size_t>(k)]));
        r = 1.0;
    } else if (d == VolumeDimension{4, 1}) {
        int k = iMin;
        g[static_cast<size_t>(k)] = 0.5 * (1.0 - t.Es);
        r = 1.0;
    } else if (d == VolumeDimension{4, 0}) {
        if (relerr(t.Ea, 1.0) > kResidualTol || relerr(t.Es, 1.0) > kResidualTol) {
            throw Error(ErrorCode::Inconsistent,
                        "dims (4,0) with E_a or E_s below 1 is an MES tuple");
        }
        r = 1.0;
    } else {
        throw Error(ErrorCode::Inconsistent, "dims do not match a vanishing case");
    }

    if (!(r > 0.0 && r <= 1.0 + 1e-9)) {
        throw Error(ErrorCode::Inconsistent, "recovered r outside (0, 1]");
    }
    GhzParams p = validate_ghz(g[0], g[1], g[2], std::min(r, 1.0), 0.0);
    p = canonicalize_ghz(p);
    auto cc = concurrences(p);
    auto vv = ghz_vanishing_volumes(p);
    double res = std::max({relerr(cc[0], t.C1), relerr(cc[1], t.C2), relerr(cc[2], t.C3),
                           relerr(vv.Ea, t.Ea), relerr(vv.Es, t.Es)});
    if (res > 1e-6) {
        throw Error(ErrorCode::Inconsistent, "measures inconsistent with the case formulas");
    }
    InversionResult out;
    out.state = p;
    out.candidates.emplace_back(p);
    out.residual = res;
    out.ambiguityResolved = Ambiguity::Unique;
    return out;
}

}  // namespace locc
