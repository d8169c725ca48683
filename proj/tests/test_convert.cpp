#include <doctest.h>

#include <cmath>
#include <complex>

#include "locc/convert.hpp"
#include "locc/oracle.hpp"

using namespace locc;

namespace {
constexpr double kPi = 3.14159265358979323846;

GhzParams ghz(double g1, double g2, double g3, double r, double phi) {
    return canonicalize_ghz(validate_ghz(g1, g2, g3, r, phi));
}
}  // namespace

TEST_CASE("majorizes basic examples") {
    // majorizes(x, y) is true iff x is majorized by y
    SchmidtVector a({0.5, 0.3, 0.2});
    SchmidtVector b({0.6, 0.3, 0.1});
    CHECK(majorizes(a, b));
    CHECK_FALSE(majorizes(b, a));
    CHECK(majorizes(a, a));  // reflexive

    SchmidtVector c({0.6, 0.4});
    SchmidtVector d({0.5, 0.5});
    CHECK(majorizes(d, c));
    CHECK_FALSE(majorizes(c, d));

    CHECK_THROWS_AS(majorizes(a, c), Error);
    try {
        majorizes(a, c);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DimensionMismatch);
    }
}

TEST_CASE("w_convertible is componentwise dominance in x1..x3") {
    auto src = validate_w(0.1, 0.3, 0.3, 0.3);
    auto dst = validate_w(0.4, 0.2, 0.2, 0.2);
    CHECK(w_convertible(src, dst));
    CHECK_FALSE(w_convertible(dst, src));
    CHECK(w_convertible(src, src));

    // mixed dominance is incomparable in both directions
    auto p = validate_w(0.2, 0.4, 0.2, 0.2);
    auto q = validate_w(0.2, 0.2, 0.4, 0.2);
    CHECK_FALSE(w_convertible(p, q));
    CHECK_FALSE(w_convertible(q, p));
}

TEST_CASE("solve_target_z satisfies both matching equations") {
    auto src = ghz(0.2, 0.2, 0.2, 0.5, 0.9);
    std::array<double, 3> h{0.3, 0.3, 0.3};
    auto z = solve_target_z(src, h);
    REQUIRE(z.has_value());
    auto [rp, php] = *z;
    CHECK(rp > 0.0);
    CHECK(rp <= 1.0);

    // back-substitute: a'/a = b'/b = G/H must hold
    auto a_of = [](double r, double phi) {
        double m4 = r * r * r * r;
        return 2.0 * r * r * std::cos(2.0 * phi) / (m4 + 1.0);
    };
    auto b_of = [](double r, double phi) {
        double m4 = r * r * r * r;
        return 2.0 * r * r * std::sin(2.0 * phi) / (m4 - 1.0);
    };
    double G = src.G();
    double H = h[0] * h[1] * h[2];
    double ratio = G / H;
    CHECK(a_of(rp, php) == doctest::Approx(ratio * a_of(src.r, src.phi)).epsilon(1e-10));
    CHECK(b_of(rp, php) == doctest::Approx(ratio * b_of(src.r, src.phi)).epsilon(1e-10));
}

TEST_CASE("solve_target_z at h = g reproduces the source z") {
    auto src = ghz(0.15, 0.22, 0.31, 0.63, 1.1);
    auto z = solve_target_z(src, src.gs());
    REQUIRE(z.has_value());
    CHECK(z->first == doctest::Approx(src.r).epsilon(1e-10));
    CHECK(z->second == doctest::Approx(src.phi).epsilon(1e-8));
}

TEST_CASE("ghz_convertible accepts exact case-A targets") {
    auto src = ghz(0.2, 0.2, 0.2, 0.5, 0.9);
    std::array<double, 3> h{0.3, 0.3, 0.3};
    auto z = solve_target_z(src, h);
    REQUIRE(z.has_value());
    auto dst = ghz(h[0], h[1], h[2], z->first, z->second);
    auto d = ghz_convertible(src, dst);
    CHECK(d.convertible);

    // shrinking any g breaks condition (i)
    auto bad = ghz(0.19, h[1], h[2], z->first, z->second);
    CHECK_FALSE(ghz_convertible(src, bad).convertible);
}

TEST_CASE("vanishing-g case: II.1 example and r-monotonicity") {
    auto src = ghz(0.0, 0.2, 0.3, 0.7, 0.0);
    auto dst = ghz(0.0, 0.25, 0.35, 0.5, 0.0);
    CHECK(ghz_convertible(src, dst).convertible);

    // cannot raise r
    auto up = ghz(0.0, 0.25, 0.35, 0.8, 0.0);
    auto d = ghz_convertible(src, up);
    CHECK_FALSE(d.convertible);

    // vanishing source cannot reach an all-nonzero target
    auto full = ghz(0.1, 0.25, 0.35, 0.5, 0.0);
    auto d2 = ghz_convertible(src, full);
    CHECK_FALSE(d2.convertible);
    REQUIRE(d2.failedCondition.has_value());
    CHECK(*d2.failedCondition == FailedCondition::VanishingR);
}

TEST_CASE("vanishing source to all-nonzero target needs r = 1 and phi' = pi/4") {
    auto src = ghz(0.0, 0.2, 0.3, 1.0, 0.0);
    auto good = ghz(0.1, 0.25, 0.35, 0.5, kPi / 4.0);
    CHECK(ghz_convertible(src, good).convertible);

    auto wrongPhi = ghz(0.1, 0.25, 0.35, 0.5, 0.3);
    auto dPhi = ghz_convertible(src, wrongPhi);
    CHECK_FALSE(dPhi.convertible);
    REQUIRE(dPhi.failedCondition.has_value());
    CHECK(*dPhi.failedCondition == FailedCondition::MesPhiConstraint);

    auto srcR = ghz(0.0, 0.2, 0.3, 0.9, 0.0);
    auto dR = ghz_convertible(srcR, good);
    CHECK_FALSE(dR.convertible);
    REQUIRE(dR.failedCondition.has_value());
    CHECK(*dR.failedCondition == FailedCondition::VanishingR);

    // the reverse direction (nonzero source, vanishing target) always fails
    // condition (i) since g_i <= 0 is impossible
    auto back = ghz_convertible(good, src);
    CHECK_FALSE(back.convertible);
}

TEST_CASE("ghz_convertible is reflexive on sampled states") {
    for (const auto& p : sample_ghz(GhzTag::GenericNonMes, 30, 7)) {
        CHECK(ghz_convertible(p, p).convertible);
    }
    for (const auto& p : sample_ghz(GhzTag::Mes, 10, 8)) {
        CHECK(ghz_convertible(p, p).convertible);
    }
}

TEST_CASE("ghz_convertible is transitive along constructed chains") {
    auto src = ghz(0.1, 0.15, 0.2, 0.4, 0.7);
    std::array<double, 3> h1{0.2, 0.25, 0.3};
    auto z1 = solve_target_z(src, h1);
    REQUIRE(z1.has_value());
    auto mid = ghz(h1[0], h1[1], h1[2], z1->first, z1->second);

    std::array<double, 3> h2{0.3, 0.35, 0.4};
    auto z2 = solve_target_z(mid, h2);
    REQUIRE(z2.has_value());
    auto dst = ghz(h2[0], h2[1], h2[2], z2->first, z2->second);

    CHECK(ghz_convertible(src, mid).convertible);
    CHECK(ghz_convertible(mid, dst).convertible);
    CHECK(ghz_convertible(src, dst).convertible);
}

TEST_CASE("MES states are unreachable from non-MES states") {
    auto src = ghz(0.1, 0.2, 0.3, 0.8, 0.7);
    auto mes = ghz(0.2, 0.25, 0.3, 1.0, kPi / 2.0);
    CHECK_FALSE(ghz_convertible(src, mes).convertible);

    // and MES -> strictly-larger-box MES also fails (source volume is empty)
    auto mes2 = ghz(0.25, 0.3, 0.35, 1.0, kPi / 2.0);
    CHECK_FALSE(ghz_convertible(mes2, mes).convertible);
}

TEST_CASE("cross-class pairs are incomparable") {
    State w = validate_w(0.1, 0.3, 0.3, 0.3);
    State g = ghz(0.1, 0.2, 0.3, 0.5, 0.4);
    auto d1 = convertible(w, g);
    auto d2 = convertible(g, w);
    CHECK_FALSE(d1.convertible);
    CHECK_FALSE(d2.convertible);
    REQUIRE(d1.failedCondition.has_value());
    CHECK(*d1.failedCondition == FailedCondition::CrossSloccClass);
    CHECK(*d2.failedCondition == FailedCondition::CrossSloccClass);
}

TEST_CASE("convertible dispatcher handles same-class pairs") {
    State src = validate_w(0.1, 0.3, 0.3, 0.3);
    State dst = validate_w(0.4, 0.2, 0.2, 0.2);
    CHECK(convertible(src, dst).convertible);
    CHECK_FALSE(convertible(dst, src).convertible);
}

TEST_CASE("antisymmetry: mutual convertibility only for equal states") {
    auto src = ghz(0.2, 0.2, 0.2, 0.5, 0.9);
    std::array<double, 3> h{0.25, 0.25, 0.25};
    auto z = solve_target_z(src, h);
    REQUIRE(z.has_value());
    auto dst = ghz(h[0], h[1], h[2], z->first, z->second);
    CHECK(ghz_convertible(src, dst).convertible);
    CHECK_FALSE(ghz_convertible(dst, src).convertible);
}
