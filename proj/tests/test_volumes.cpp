#include <doctest.h>

#include <cmath>

#include "locc/characterize.hpp"
#include "locc/oracle.hpp"
#include "locc/volumes.hpp"

using namespace locc;

namespace {
constexpr double kPi = 3.14159265358979323846;

GhzParams ghz(double g1, double g2, double g3, double r, double phi) {
    return canonicalize_ghz(validate_ghz(g1, g2, g3, r, phi));
}
}  // namespace

TEST_CASE("w_volumes closed forms") {
    auto rep = w_volumes(validate_w(0.4, 0.2, 0.2, 0.2));
    CHECK(rep.Va == doctest::Approx(0.008).epsilon(1e-14));
    CHECK(rep.Ea == doctest::Approx(0.216).epsilon(1e-14));
    CHECK(rep.Vs == doctest::Approx(0.4 * 0.4 * 0.4 / 6.0).epsilon(1e-14));
    CHECK(rep.Es == doctest::Approx(0.936).epsilon(1e-14));
    CHECK(rep.VaSup == doctest::Approx(1.0 / 27.0));
    CHECK(rep.VsSup == doctest::Approx(1.0 / 6.0));

    // W state: maximal accessible volume, empty source volume
    auto w = w_volumes(validate_w(0.0, 1.0 / 3, 1.0 / 3, 1.0 / 3));
    CHECK(w.Ea == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(w.Es == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(w.Vs == 0.0);
}

TEST_CASE("ghz_generic_volumes closed forms") {
    auto rep = ghz_generic_volumes(ghz(0.22, 0.26, 0.32, 0.1, 2.68));
    CHECK(rep.Va ==
          doctest::Approx((0.5 - 0.22) * (0.5 - 0.26) * (0.5 - 0.32)).epsilon(1e-14));
    CHECK(rep.Va == doctest::Approx(0.0120960).epsilon(1e-6));
    CHECK(rep.VaSup == doctest::Approx(0.125));
    CHECK(rep.VsSup == doctest::Approx(0.125));
    CHECK(rep.dims == VolumeDimension{3, 3});

    // phi = pi/4 kills f, so Vs = G exactly
    auto mid = ghz(0.2, 0.25, 0.3, 0.8, kPi / 4.0);
    auto repMid = ghz_generic_volumes(mid);
    CHECK(repMid.Vs == doctest::Approx(mid.G()).epsilon(1e-12));

    // approaching z = 1 the source volume collapses
    auto near = ghz_generic_volumes(ghz(0.2, 0.25, 0.3, 1.0 - 1e-6, 1e-6));
    CHECK(near.Vs < 1e-4);
}

TEST_CASE("MES accessible cubature matches the g -> 0 limit") {
    auto tiny = ghz_mes_accessible(ghz(1e-7, 1e-7, 1e-7, 1.0, kPi / 2.0), 1e-9);
    CHECK(tiny.Va == doctest::Approx(0.125).epsilon(1e-5));
    CHECK(tiny.Vs == 0.0);
    CHECK(tiny.dims == VolumeDimension{4, 0});

    auto rep = ghz_mes_accessible(ghz(0.2, 0.2, 0.2, 1.0, kPi / 2.0), 1e-9);
    CHECK(rep.Va == doctest::Approx(0.018022836439638455).epsilon(1e-7));
    CHECK(rep.Va < 0.125);
    CHECK(rep.Va > 0.0);
}

TEST_CASE("vanishing-case closed forms") {
    // one zero, r < 1
    auto one = ghz_vanishing_volumes(ghz(0.0, 0.1, 0.2, 0.5, 0.0));
    CHECK(one.Va == doctest::Approx(0.4 * 0.3 * 0.5).epsilon(1e-14));
    CHECK(one.Vs == doctest::Approx(0.1 * 0.2 * 0.5).epsilon(1e-14));
    CHECK(one.VaSup == doctest::Approx(0.25));
    CHECK(one.VsSup == doctest::Approx(0.25));
    CHECK(one.Ea == doctest::Approx(0.24).epsilon(1e-12));
    CHECK(one.Es == doctest::Approx(0.96).epsilon(1e-12));
    CHECK(one.dims == VolumeDimension{3, 3});

    // two zeros, r < 1
    auto two = ghz_vanishing_volumes(ghz(0.0, 0.0, 0.2, 0.5, 0.0));
    CHECK(two.Va == doctest::Approx(0.3 * 0.5).epsilon(1e-14));
    CHECK(two.Vs == doctest::Approx(0.2 * 0.5).epsilon(1e-14));
    CHECK(two.VaSup == doctest::Approx(0.5));
    CHECK(two.VsSup == doctest::Approx(0.5));
    CHECK(two.dims == VolumeDimension{3, 2});

    // three zeros, r < 1
    auto three = ghz_vanishing_volumes(ghz(0.0, 0.0, 0.0, 0.5, 0.0));
    CHECK(three.Va == doctest::Approx(0.75 * 0.5).epsilon(1e-14));
    CHECK(three.Vs == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(three.VaSup == doctest::Approx(0.75));
    CHECK(three.VsSup == doctest::Approx(1.0));
    CHECK(three.dims == VolumeDimension{3, 1});

    // one zero, r = 1
    auto oneR = ghz_vanishing_volumes(ghz(0.0, 0.1, 0.2, 1.0, 0.0));
    CHECK(oneR.Va == doctest::Approx(0.4 * 0.3).epsilon(1e-14));
    CHECK(oneR.Vs == doctest::Approx(0.1 * 0.2).epsilon(1e-14));
    CHECK(oneR.dims == VolumeDimension{4, 2});

    // two zeros, r = 1
    auto twoR = ghz_vanishing_volumes(ghz(0.0, 0.0, 0.2, 1.0, 0.0));
    CHECK(twoR.Va == doctest::Approx(0.5 * 0.3).epsilon(1e-14));
    CHECK(twoR.Vs == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(twoR.VaSup == doctest::Approx(0.25));
    CHECK(twoR.VsSup == doctest::Approx(0.5));
    CHECK(twoR.dims == VolumeDimension{4, 1});

    // GHZ state: Ea = Es = 1 exactly
    auto g = ghz_vanishing_volumes(ghz(0.0, 0.0, 0.0, 1.0, 0.0));
    CHECK(g.Va == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(g.Vs == 0.0);
    CHECK(g.Ea == 1.0);
    CHECK(g.Es == 1.0);
    CHECK(g.dims == VolumeDimension{4, 0});
}

TEST_CASE("Ea and Es stay in [0, 1] on sampled states") {
    auto checkRange = [](const VolumeReport& r) {
        CHECK(r.Ea >= 0.0);
        CHECK(r.Ea <= 1.0);
        CHECK(r.Es >= 0.0);
        CHECK(r.Es <= 1.0);
    };
    for (const auto& p : sample_w(50, 3)) checkRange(w_volumes(p));
    for (const auto& p : sample_ghz(GhzTag::GenericNonMes, 50, 4)) {
        checkRange(ghz_generic_volumes(p));
    }
    for (const auto& p : sample_ghz(GhzTag::VanishingOne, 20, 5)) {
        checkRange(ghz_vanishing_volumes(p));
    }
}

TEST_CASE("Vs vanishes exactly on MES states and only there") {
    auto mes = ghz_volumes(ghz(0.2, 0.25, 0.3, 1.0, kPi / 2.0));
    CHECK(mes.Vs == 0.0);
    for (const auto& p : sample_ghz(GhzTag::GenericNonMes, 30, 6)) {
        CHECK(ghz_volumes(p).Vs > 0.0);
    }
}

TEST_CASE("concurrences closed forms") {
    // W state: all concurrences 8/9
    auto cW = concurrences(validate_w(0.0, 1.0 / 3, 1.0 / 3, 1.0 / 3));
    CHECK(cW[0] == doctest::Approx(8.0 / 9.0).epsilon(1e-14));
    CHECK(cW[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-14));
    CHECK(cW[2] == doctest::Approx(8.0 / 9.0).epsilon(1e-14));

    // x0 = 0 reduces to 4 x_i (1 - x_i)
    auto c = concurrences(validate_w(0.0, 0.5, 0.3, 0.2));
    CHECK(c[0] == doctest::Approx(4.0 * 0.5 * 0.5).epsilon(1e-14));
    CHECK(c[1] == doctest::Approx(4.0 * 0.3 * 0.7).epsilon(1e-14));
    CHECK(c[2] == doctest::Approx(4.0 * 0.2 * 0.8).epsilon(1e-14));

    // GHZ state: all concurrences 1
    auto cG = concurrences(ghz(0.0, 0.0, 0.0, 1.0, 0.0));
    CHECK(cG[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(cG[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(cG[2] == doctest::Approx(1.0).epsilon(1e-14));

    // generic formula spot check against the direct expression
    auto p = ghz(0.1, 0.2, 0.3, 0.7, 0.5);
    auto cP = concurrences(p);
    double r2 = p.r * p.r;
    double denom = 1.0 + p.modZ4() + 16.0 * r2 * p.G() * std::cos(2.0 * p.phi);
    double expect0 = 4.0 * p.modZ4() * (1.0 - 4.0 * 0.1 * 0.1) *
                     (1.0 - 16.0 * 0.2 * 0.2 * 0.3 * 0.3) / (denom * denom);
    CHECK(cP[0] == doctest::Approx(expect0).epsilon(1e-12));
}

TEST_CASE("mes_min_eigs examples") {
    auto e = mes_min_eigs({0.2, 0.2, 0.2});
    CHECK(e.emin[0] == doctest::Approx(0.47368421052631576).epsilon(1e-12));
    CHECK(e.caseIndex == 1);

    // GHZ state: all doubled eigenvalues are 1
    auto g = mes_min_eigs({0.0, 0.0, 0.0});
    CHECK(g.emin[0] == doctest::Approx(1.0));
    CHECK(g.emin[1] == doctest::Approx(1.0));
    CHECK(g.emin[2] == doctest::Approx(1.0));

    // negative g3 changes the case index
    auto n = mes_min_eigs({0.2, 0.2, -0.2});
    CHECK(n.caseIndex != 1);
    for (double v : n.emin) {
        CHECK(v > 0.0);
        CHECK(v <= 1.0);
    }

    CHECK_THROWS_AS(mes_min_eigs({0.6, 0.1, 0.1}), Error);
}

TEST_CASE("mes signed-g encoding round-trips") {
    auto p = ghz(0.1, 0.2, 0.3, 1.0, kPi / 2.0);  // z = i
    auto g = mes_signed_g(p);
    auto back = mes_from_signed_g(g);
    auto g2 = mes_signed_g(back);
    CHECK(g[0] == doctest::Approx(g2[0]).epsilon(1e-14));
    CHECK(g[1] == doctest::Approx(g2[1]).epsilon(1e-14));
    CHECK(g[2] == doctest::Approx(g2[2]).epsilon(1e-14));
}

TEST_CASE("bipartite volumes") {
    // d = 2: one free parameter, both measures linear
    auto d2 = bipartite_volumes(SchmidtVector({0.7, 0.3}));
    CHECK(d2.Ea == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(d2.Es == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(d2.method == VolumeMethod::ExactPolytope);

    // uniform vector: reaches everything, sourced only by itself
    auto uni = bipartite_volumes(SchmidtVector({1.0 / 3, 1.0 / 3, 1.0 / 3}));
    CHECK(uni.Ea == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(uni.Es == doctest::Approx(1.0).epsilon(1e-10));

    // product vector: reaches nothing new, sourced by everything
    auto prod = bipartite_volumes(SchmidtVector({1.0, 0.0, 0.0}));
    CHECK(prod.Ea == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(prod.Es == doctest::Approx(0.0).epsilon(1e-10));

    // d = 3 exact vs Monte Carlo
    SchmidtVector lam({0.5, 0.3, 0.2});
    auto exact = bipartite_volumes(lam, BipartiteMethod::Exact);
    auto mc = bipartite_volumes(lam, BipartiteMethod::MonteCarlo, 200000, 13);
    CHECK(std::abs(exact.Va - mc.Va) <= 4.0 * mc.VaStderr + 1e-12);
    CHECK(std::abs(exact.Vs - mc.Vs) <= 4.0 * mc.VsStderr + 1e-12);
}
