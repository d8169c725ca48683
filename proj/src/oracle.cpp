#include "locc/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <thread>

#include "locc/rng.hpp"

namespace locc {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Threaded hit counting; the predicate depends only on the sample index, so
// the count is identical for any worker count.
uint64_t count_hits(uint64_t n, const std::function<bool(uint64_t)>& hit) {
    unsigned threads = 1;
    if (const char* env = std::getenv("LOCC_VOLUMES_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 1) threads = static_cast<unsigned>(std::min(v, 64L));
    }
    if (threads <= 1) {
        uint64_t c = 0;
        for (uint64_t i = 0; i < n; ++i) {
            if (hit(i)) ++c;
        }
        return c;
    }
    std::vector<uint64_t> partial(threads, 0);
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] {
            uint64_t c = 0;
            for (uint64_t i = t; i < n; i += threads) {
                if (hit(i)) ++c;
            }
            partial[t] = c;
        });
    }
    uint64_t total = 0;
    for (unsigned t = 0; t < threads; ++t) {
        workers[t].join();
        total += partial[t];
    }
    return total;
}

VolumeEstimate finish(uint64_t n, uint64_t seed, uint64_t hits, double boxVol,
                      double mult, std::string region) {
    VolumeEstimate e;
    e.samples = n;
    e.seed = seed;
    e.hits = hits;
    e.boxVolume = boxVol;
    e.multiplicity = mult;
    e.region = std::move(region);
    double p = n ? static_cast<double>(hits) / static_cast<double>(n) : 0.0;
    e.value = mult * boxVol * p;
    e.sigma = mult * boxVol * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
    return e;
}

VolumeEstimate zero_estimate(uint64_t n, uint64_t seed, std::string region) {
    VolumeEstimate e;
    e.samples = n;
    e.seed = seed;
    e.region = std::move(region);
    return e;
}

// z' with a_{z'} = rho a_z and b_{z'} = rho b_z; works for any rho > 0 and
// degrades to the |z| = 1 limit form.
std::optional<std::pair<double, double>> solve_z_ratio(const GhzParams& p, double rho) {
    if (p.r == 1.0) {
        double c = std::cos(2.0 * p.phi) * rho;
        if (std::abs(c) > 1.0) return std::nullopt;
        return std::make_pair(1.0, 0.5 * std::acos(c));
    }
    double a = 2.0 * p.reZ2() / (p.modZ4() + 1.0);
    double b = 2.0 * p.imZ2() / (p.modZ4() - 1.0);
    double d = a * a + b * b;
    double nn = b * b - a * a + 2.0 / (rho * rho);
    double q = nn / d;
    double disc = q * q - 1.0;
    if (disc < 0.0) return std::nullopt;
    double t = 1.0 / (q + std::sqrt(disc));
    double rt = std::sqrt(t);
    double cos2 = a * rho * (t + 1.0) / (2.0 * rt);
    double sin2 = b * rho * (t - 1.0) / (2.0 * rt);
    double twoPhi = std::atan2(sin2, cos2);
    if (twoPhi < 0.0) twoPhi += 2.0 * kPi;
    return std::make_pair(std::pow(t, 0.25), std::fmod(0.5 * twoPhi, kPi));
}

double u(uint64_t seed, uint64_t stream, uint64_t idx) {
    return CounterRng(seed, stream).uniform(idx);
}

VolumeEstimate mc_w(const WParams& p, Side side, uint64_t n, uint64_t seed) {
    auto hit = [&](uint64_t i) -> bool {
        double y1 = u(seed, 1, i), y2 = u(seed, 2, i), y3 = u(seed, 3, i);
        double s = y1 + y2 + y3;
        if (s > 1.0 || y1 <= 0.0 || y2 <= 0.0 || y3 <= 0.0) return false;
        WParams cand{1.0 - s, y1, y2, y3};
        return side == Side::Accessible ? w_convertible(p, cand)
                                        : w_convertible(cand, p);
    };
    return finish(n, seed, count_hits(n, hit), 1.0, 1.0,
                  "y in [0,1]^3 with y1+y2+y3 <= 1");
}

VolumeEstimate mc_ghz_generic(const GhzParams& p, Side side, uint64_t n,
                              uint64_t seed) {
    if (side == Side::Accessible) {
        auto hit = [&](uint64_t i) -> bool {
            std::array<double, 3> h{0.5 * u(seed, 1, i), 0.5 * u(seed, 2, i),
                                    0.5 * u(seed, 3, i)};
            for (int k = 0; k < 3; ++k) {
                if (h[static_cast<size_t>(k)] < p.g(k)) return false;
            }
            auto z = solve_target_z(p, h);
            if (!z) return false;
            GhzParams dst = canonicalize_ghz(
                validate_ghz(h[0], h[1], h[2], z->first, z->second));
            return ghz_convertible(p, dst).convertible;
        };
        return finish(n, seed, count_hits(n, hit), 0.125, 1.0, "h in [0,1/2)^3");
    }
    double G = p.G();
    auto hit = [&](uint64_t i) -> bool {
        std::array<double, 3> h{p.g1 * u(seed, 1, i), p.g2 * u(seed, 2, i),
                                p.g3 * u(seed, 3, i)};
        double H = h[0] * h[1] * h[2];
        if (H <= 0.0) return false;
        // h is in the box by construction, so a source exists iff the
        // matching equations have a solution. Reconstructing the source
        // state explicitly is avoided: for tiny H the solution sits so
        // close to |z'| = 1 that double rounding collapses it onto the
        // boundary and corrupts a convertibility recheck.
        auto z = solve_z_ratio(p, G / H);
        return z && z->first > 0.0;
    };
    return finish(n, seed, count_hits(n, hit), G, 1.0, "h in prod [0, g_i]");
}

VolumeEstimate mc_ghz_mes(const GhzParams& p, Side side, uint64_t n, uint64_t seed) {
    if (side == Side::Source) {
        return zero_estimate(n, seed, "empty (maximally entangled)");
    }
    double a = std::cos(2.0 * p.phi);  // +1 for z = 1, -1 for z = i
    double G = p.G();
    auto hit = [&](uint64_t i) -> bool {
        std::array<double, 3> h{0.5 * u(seed, 1, i), 0.5 * u(seed, 2, i),
                                0.5 * u(seed, 3, i)};
        double rp = u(seed, 4, i);
        if (rp <= 0.0) return false;
        for (int k = 0; k < 3; ++k) {
            if (h[static_cast<size_t>(k)] < p.g(k)) return false;
        }
        double rho = G / (h[0] * h[1] * h[2]);
        double t2 = rp * rp;
        double c = a * rho * (1.0 + t2 * t2) / (2.0 * t2);
        if (std::abs(c) > 1.0) return false;
        GhzParams dst = canonicalize_ghz(
            validate_ghz(h[0], h[1], h[2], rp, 0.5 * std::acos(c)));
        return ghz_convertible(p, dst).convertible;
    };
    return finish(n, seed, count_hits(n, hit), 0.125, 1.0,
                  "(h, r') in [0,1/2)^3 x [0,1]");
}

VolumeEstimate mc_ghz_vanishing(const GhzParams& p, const GhzClass& cls, Side side,
                                uint64_t n, uint64_t seed) {
    std::array<int, 3> zero{}, nonzero{};
    int nz = 0, nn = 0;
    for (int k = 0; k < 3; ++k) {
        if (cls.vanishes[static_cast<size_t>(k)]) zero[static_cast<size_t>(nz++)] = k;
        else nonzero[static_cast<size_t>(nn++)] = k;
    }
    bool rOne = cls.rIsOne;

    auto ghzWith = [](const std::array<double, 3>& g, double r, double phi) {
        return canonicalize_ghz(validate_ghz(g[0], g[1], g[2], r, phi));
    };

    if (side == Side::Accessible) {
        if (rOne) {
            if (cls.zeroCount() == 0) {
                throw Error(ErrorCode::WrongClass, "not a vanishing case");
            }
            // Case II.2 targets: all parameters nonzero, phi' = pi/4 (the
            // conjugate target counts as the second component).
            auto hit = [&](uint64_t i) -> bool {
                std::array<double, 3> h{0.5 * u(seed, 1, i), 0.5 * u(seed, 2, i),
                                        0.5 * u(seed, 3, i)};
                double rp = u(seed, 4, i);
                if (rp <= 0.0 || h[0] <= 0.0 || h[1] <= 0.0 || h[2] <= 0.0) return false;
                GhzParams dst = ghzWith(h, rp, kPi / 4.0);
                return ghz_convertible(p, dst).convertible;
            };
            return finish(n, seed, count_hits(n, hit), 0.125, 2.0,
                          "(h, r') in [0,1/2)^3 x [0,1], phi' = pi/4 (x2)");
        }
        // r < 1: targets carry one fewer zero than independent coordinates
        // allow; enumerate the vanishing-pattern components.
        if (cls.zeroCount() == 1) {
            int zi = zero[0];
            auto hit = [&](uint64_t i) -> bool {
                std::array<double, 3> h{};
                h[static_cast<size_t>(nonzero[0])] = 0.5 * u(seed, 1, i);
                h[static_cast<size_t>(nonzero[1])] = 0.5 * u(seed, 2, i);
                h[static_cast<size_t>(zi)] = 0.0;
                double rp = u(seed, 3, i);
                if (rp <= 0.0) return false;
                GhzParams dst = ghzWith(h, rp, 0.0);
                return ghz_convertible(p, dst).convertible;
            };
            return finish(n, seed, count_hits(n, hit), 0.25, 1.0,
                          "(h_j, h_k, r') in [0,1/2)^2 x [0,1], same zero");
        }
        if (cls.zeroCount() == 2) {
            // Targets keep one of the two zeros; two components.
            auto hit = [&](uint64_t i) -> bool {
                int keep = u(seed, 5, i) < 0.5 ? zero[0] : zero[1];
                int freed = keep == zero[0] ? zero[1] : zero[0];
                std::array<double, 3> h{};
                h[static_cast<size_t>(freed)] = 0.5 * u(seed, 1, i);
                h[static_cast<size_t>(nonzero[0])] = 0.5 * u(seed, 2, i);
                h[static_cast<size_t>(keep)] = 0.0;
                double rp = u(seed, 3, i);
                if (rp <= 0.0 || h[static_cast<size_t>(freed)] <= 0.0) return false;
                GhzParams dst = ghzWith(h, rp, 0.0);
                return ghz_convertible(p, dst).convertible;
            };
            return finish(n, seed, count_hits(n, hit), 0.25, 2.0,
                          "one zero released, (h, h_k, r') box (x2)");
        }
        // three zeros, r < 1: targets with a single zero; three components
        auto hit = [&](uint64_t i) -> bool {
            int keep = static_cast<int>(u(seed, 5, i) * 3.0);
            keep = std::min(keep, 2);
            std::array<double, 3> h{};
            int slot = 1;
            for (int k = 0; k < 3; ++k) {
                if (k != keep) h[static_cast<size_t>(k)] = 0.5 * u(seed, static_cast<uint64_t>(slot++), i);
            }
            double rp = u(seed, 3, i);
            if (rp <= 0.0) return false;
            GhzParams dst = ghzWith(h, rp, 0.0);
            return ghz_convertible(p, dst).convertible;
        };
        return finish(n, seed, count_hits(n, hit), 0.25, 3.0,
                      "single-zero targets, (h_j, h_k, r') box (x3)");
    }

    // Source side.
    if (cls.tag == GhzTag::GhzState) {
        return zero_estimate(n, seed, "empty (maximally entangled)");
    }
    if (cls.zeroCount() == 1) {
        auto hit = [&](uint64_t i) -> bool {
            std::array<double, 3> h{};
            h[static_cast<size_t>(nonzero[0])] = 0.5 * u(seed, 1, i);
            h[static_cast<size_t>(nonzero[1])] = 0.5 * u(seed, 2, i);
            double rp = rOne ? 1.0 : u(seed, 3, i);
            if (rp <= 0.0) return false;
            GhzParams cand = ghzWith(h, rp, 0.0);
            return ghz_convertible(cand, p).convertible;
        };
        double box = rOne ? 0.25 : 0.25;
        return finish(n, seed, count_hits(n, hit), box, 1.0,
                      rOne ? "(h_j, h_k) in [0,1/2)^2, r = 1"
                           : "(h_j, h_k, r') in [0,1/2)^2 x [0,1]");
    }
    if (cls.zeroCount() == 2) {
        auto hit = [&](uint64_t i) -> bool {
            std::array<double, 3> h{};
            h[static_cast<size_t>(nonzero[0])] = 0.5 * u(seed, 1, i);
            double rp = rOne ? 1.0 : u(seed, 3, i);
            if (rp <= 0.0) return false;
            GhzParams cand = ghzWith(h, rp, 0.0);
            return ghz_convertible(cand, p).convertible;
        };
        return finish(n, seed, count_hits(n, hit), rOne ? 0.5 : 0.5, 1.0,
                      rOne ? "h_k in [0,1/2), r = 1" : "(h_k, r') in [0,1/2) x [0,1]");
    }
    // three zeros, r < 1: sources are GHZ-family states with r' >= r
    auto hit = [&](uint64_t i) -> bool {
        double rp = u(seed, 3, i);
        if (rp <= 0.0) return false;
        GhzParams cand = ghzWith({0.0, 0.0, 0.0}, rp, 0.0);
        return ghz_convertible(cand, p).convertible;
    };
    return finish(n, seed, count_hits(n, hit), 1.0, 1.0, "r' in [0,1]");
}

}  // namespace

std::string to_string(Side s) {
    return s == Side::Accessible ? "accessible" : "source";
}

std::vector<WParams> sample_w(uint64_t n, uint64_t seed) {
    std::vector<WParams> out;
    out.reserve(n);
    for (uint64_t i = 0; i < n; ++i) {
        std::array<double, 3> cuts{u(seed, 1, i), u(seed, 2, i), u(seed, 3, i)};
        std::sort(cuts.begin(), cuts.end());
        double x0 = cuts[0];
        double x1 = cuts[1] - cuts[0];
        double x2 = cuts[2] - cuts[1];
        double x3 = 1.0 - cuts[2];
        if (x1 <= eps_class || x2 <= eps_class || x3 <= eps_class) {
            // interior only; nudge the (measure-zero) boundary draws
            x1 = std::max(x1, 2.0 * eps_class);
            x2 = std::max(x2, 2.0 * eps_class);
            x3 = std::max(x3, 2.0 * eps_class);
            x0 = 1.0 - x1 - x2 - x3;
        }
        out.push_back(validate_w(x0, x1, x2, x3));
    }
    return out;
}

std::vector<GhzParams> sample_ghz(GhzTag tag, uint64_t n, uint64_t seed) {
    std::vector<GhzParams> out;
    out.reserve(n);
    auto gdraw = [&](uint64_t stream, uint64_t i) {
        double g = 0.5 * u(seed, stream, i);
        return std::clamp(g, 2.0 * eps_class, 0.5 - 2.0 * eps_class);
    };
    for (uint64_t i = 0; i < n; ++i) {
        double r = std::max(u(seed, 4, i), 1e-6);
        switch (tag) {
            case GhzTag::GenericNonMes: {
                double phi = kPi * u(seed, 5, i);
                out.push_back(canonicalize_ghz(validate_ghz(
                    gdraw(1, i), gdraw(2, i), gdraw(3, i), r, phi)));
                break;
            }
            case GhzTag::Mes: {
                double phi = u(seed, 5, i) < 0.5 ? 0.0 : kPi / 2.0;
                out.push_back(canonicalize_ghz(validate_ghz(
                    gdraw(1, i), gdraw(2, i), gdraw(3, i), 1.0, phi)));
                break;
            }
            case GhzTag::VanishingOne: {
                int zi = std::min(static_cast<int>(u(seed, 5, i) * 3.0), 2);
                std::array<double, 3> g{gdraw(1, i), gdraw(2, i), gdraw(3, i)};
                g[static_cast<size_t>(zi)] = 0.0;
                out.push_back(canonicalize_ghz(validate_ghz(g[0], g[1], g[2], r, 0.0)));
                break;
            }
            case GhzTag::VanishingTwo: {
                int keep = std::min(static_cast<int>(u(seed, 5, i) * 3.0), 2);
                std::array<double, 3> g{0.0, 0.0, 0.0};
                g[static_cast<size_t>(keep)] = gdraw(1, i);
                out.push_back(canonicalize_ghz(validate_ghz(g[0], g[1], g[2], r, 0.0)));
                break;
            }
            case GhzTag::VanishingThree:
                out.push_back(canonicalize_ghz(validate_ghz(0.0, 0.0, 0.0, r, 0.0)));
                break;
            case GhzTag::GhzState:
                out.push_back(validate_ghz(0.0, 0.0, 0.0, 1.0, 0.0));
                break;
        }
    }
    return out;
}

VolumeEstimate mc_volume(const State& s, Side side, uint64_t n, uint64_t seed) {
    if (n < 1000) {
        throw Error(ErrorCode::NotConverged, "sample count too small");
    }
    if (std::holds_alternative<WParams>(s)) {
        return mc_w(std::get<WParams>(s), side, n, seed);
    }
    const auto& p = std::get<GhzParams>(s);
    GhzClass cls = classify_ghz(p);
    switch (cls.tag) {
        case GhzTag::GenericNonMes:
            return mc_ghz_generic(p, side, n, seed);
        case GhzTag::Mes:
            return mc_ghz_mes(p, side, n, seed);
        default:
            return mc_ghz_vanishing(p, cls, side, n, seed);
    }
}

VerifyReport verify_all(uint64_t nPerCase, uint64_t seed, uint64_t statesPerCase) {
    VerifyReport rep;
    rep.samplesPerCase = nPerCase;
    rep.seed = seed;

    struct Case {
        std::string name;
        State state;
    };
    std::vector<Case> cases{
        {"w-generic", validate_w(0.4, 0.3, 0.2, 0.1)},
        {"w-mes", validate_w(0.0, 0.5, 0.3, 0.2)},
        {"ghz-generic", validate_ghz(0.1, 0.15, 0.2, 0.8, 0.6)},
        {"ghz-generic-r1", validate_ghz(0.1, 0.15, 0.2, 1.0, kPi / 3.0)},
        {"ghz-generic-phi0", validate_ghz(0.12, 0.18, 0.25, 0.7, 0.0)},
        {"ghz-mes-z1", validate_ghz(0.1, 0.15, 0.2, 1.0, 0.0)},
        {"ghz-mes-zi", validate_ghz(0.1, 0.15, 0.2, 1.0, kPi / 2.0)},
        {"ghz-zero1", validate_ghz(0.0, 0.2, 0.3, 0.7, 0.0)},
        {"ghz-zero2", validate_ghz(0.0, 0.0, 0.3, 0.6, 0.0)},
        {"ghz-zero3", validate_ghz(0.0, 0.0, 0.0, 0.5, 0.0)},
        {"ghz-zero1-r1", validate_ghz(0.0, 0.2, 0.3, 1.0, 0.0)},
        {"ghz-zero2-r1", validate_ghz(0.0, 0.0, 0.3, 1.0, 0.0)},
        {"ghz-state", validate_ghz(0.0, 0.0, 0.0, 1.0, 0.0)},
    };
    for (uint64_t k = 0; k < statesPerCase; ++k) {
        std::string suffix = "-rand" + std::to_string(k);
        cases.push_back({"w" + suffix, sample_w(1, seed + 100 + k)[0]});
        for (auto tag : {GhzTag::GenericNonMes, GhzTag::Mes, GhzTag::VanishingOne,
                         GhzTag::VanishingTwo, GhzTag::VanishingThree}) {
            cases.push_back({to_string(tag) + suffix,
                             sample_ghz(tag, 1, seed + 200 + k)[0]});
        }
    }

    uint64_t caseSeed = seed;
    auto push = [&](const std::string& name, Side side, double closed,
                    const VolumeEstimate& mc) {
        VerifyCheck c;
        c.name = name;
        c.side = side;
        c.closedForm = closed;
        c.mc = mc;
        if (mc.sigma > 0.0) {
            c.z = (mc.value - closed) / mc.sigma;
            c.pass = std::abs(c.z) <= 4.0;
        } else {
            c.z = 0.0;
            c.pass = std::abs(mc.value - closed) <= 1e-12;
        }
        rep.checks.push_back(c);
    };

    for (const auto& cs : cases) {
        VolumeReport v;
        if (std::holds_alternative<WParams>(cs.state)) {
            v = w_volumes(std::get<WParams>(cs.state));
        } else {
            v = ghz_volumes(std::get<GhzParams>(cs.state));
        }
        push(cs.name, Side::Accessible, v.Va,
             mc_volume(cs.state, Side::Accessible, nPerCase, ++caseSeed));
        push(cs.name, Side::Source, v.Vs,
             mc_volume(cs.state, Side::Source, nPerCase, ++caseSeed));
    }

    // Bipartite: exact polytope volumes versus the Dirichlet sampler.
    for (const auto& lam : {std::vector<double>{0.5, 0.3, 0.2},
                            std::vector<double>{0.4, 0.3, 0.2, 0.1}}) {
        SchmidtVector sv(lam);
        auto exact = bipartite_volumes(sv, BipartiteMethod::Exact);
        auto mc = bipartite_volumes(sv, BipartiteMethod::MonteCarlo, nPerCase,
                                    ++caseSeed);
        std::string name = "bipartite-d" + std::to_string(sv.dim());
        VolumeEstimate ea;
        ea.value = mc.Va;
        ea.sigma = mc.VaStderr;
        ea.samples = nPerCase;
        ea.seed = caseSeed;
        ea.region = "ordered simplex chamber";
        push(name, Side::Accessible, exact.Va, ea);
        VolumeEstimate es;
        es.value = mc.Vs;
        es.sigma = mc.VsStderr;
        es.samples = nPerCase;
        es.seed = caseSeed;
        es.region = "ordered simplex chamber";
        push(name, Side::Source, exact.Vs, es);
    }

    rep.pass = true;
    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

}  // namespace locc
