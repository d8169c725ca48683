#include <doctest.h>

#include <cmath>

#include "locc/oracle.hpp"

using namespace locc;

namespace {
constexpr double kPi = 3.14159265358979323846;

GhzParams ghz(double g1, double g2, double g3, double r, double phi) {
    return canonicalize_ghz(validate_ghz(g1, g2, g3, r, phi));
}
}  // namespace

TEST_CASE("mc_volume is deterministic in the seed") {
    State s = validate_w(0.4, 0.2, 0.2, 0.2);
    auto a = mc_volume(s, Side::Accessible, 20000, 99);
    auto b = mc_volume(s, Side::Accessible, 20000, 99);
    CHECK(a.value == b.value);
    CHECK(a.hits == b.hits);
    auto c = mc_volume(s, Side::Accessible, 20000, 100);
    CHECK(a.value != c.value);
}

TEST_CASE("W Monte Carlo matches the closed form") {
    auto p = validate_w(0.4, 0.2, 0.2, 0.2);
    auto rep = w_volumes(p);
    auto acc = mc_volume(State{p}, Side::Accessible, 400000, 7);
    auto src = mc_volume(State{p}, Side::Source, 400000, 7);
    CHECK(std::abs(acc.value - rep.Va) <= 4.0 * acc.sigma);
    CHECK(std::abs(src.value - rep.Vs) <= 4.0 * src.sigma);
}

TEST_CASE("generic GHZ Monte Carlo matches the closed forms") {
    auto p = ghz(0.22, 0.26, 0.32, 0.1, 2.68);
    auto rep = ghz_generic_volumes(p);
    auto acc = mc_volume(State{p}, Side::Accessible, 400000, 17);
    auto src = mc_volume(State{p}, Side::Source, 400000, 17);
    CHECK(std::abs(acc.value - rep.Va) <= 4.0 * acc.sigma);
    CHECK(std::abs(src.value - rep.Vs) <= 4.0 * src.sigma);
}

TEST_CASE("GHZ-state accessible region fills its box") {
    auto p = ghz(0.0, 0.0, 0.0, 1.0, 0.0);
    auto acc = mc_volume(State{p}, Side::Accessible, 50000, 3);
    CHECK(acc.hits == acc.samples);
    CHECK(acc.value == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("sample_w produces valid simplex points with the right mean") {
    auto ws = sample_w(20000, 5);
    double meanX0 = 0.0;
    for (const auto& w : ws) {
        CHECK(w.x0 >= 0.0);
        CHECK(w.x1 > 0.0);
        CHECK(w.x2 > 0.0);
        CHECK(w.x3 > 0.0);
        CHECK(w.x0 + w.x1 + w.x2 + w.x3 == doctest::Approx(1.0).epsilon(1e-9));
        meanX0 += w.x0;
    }
    meanX0 /= static_cast<double>(ws.size());
    CHECK(meanX0 == doctest::Approx(0.25).epsilon(0.05));
}

TEST_CASE("sample_ghz respects the requested class") {
    for (const auto& p : sample_ghz(GhzTag::GenericNonMes, 30, 9)) {
        CHECK(classify_ghz(p).tag == GhzTag::GenericNonMes);
    }
    for (const auto& p : sample_ghz(GhzTag::Mes, 15, 9)) {
        CHECK(classify_ghz(p).tag == GhzTag::Mes);
    }
    for (const auto& p : sample_ghz(GhzTag::VanishingOne, 15, 9)) {
        CHECK(classify_ghz(p).tag == GhzTag::VanishingOne);
    }
    for (const auto& p : sample_ghz(GhzTag::VanishingTwo, 15, 9)) {
        CHECK(classify_ghz(p).tag == GhzTag::VanishingTwo);
    }
    for (const auto& p : sample_ghz(GhzTag::VanishingThree, 15, 9)) {
        CHECK(classify_ghz(p).tag == GhzTag::VanishingThree);
    }
    for (const auto& p : sample_ghz(GhzTag::GhzState, 3, 9)) {
        CHECK(classify_ghz(p).tag == GhzTag::GhzState);
    }
}

TEST_CASE("verify_all passes at moderate sample counts") {
    auto rep = verify_all(20000, 20240901, 1);
    for (const auto& c : rep.checks) {
        INFO(c.name, " ", c.side == Side::Accessible ? "acc" : "src", " z=", c.z);
        CHECK(c.pass);
    }
    CHECK(rep.pass);
}

TEST_CASE("the oracle has power to detect a corrupted closed form") {
    // three-zero accessible volume: p = 0.75 of the unit box, so a 1 percent
    // shift is many standard errors away at n = 400000
    auto p = ghz(0.0, 0.0, 0.0, 0.5, 0.0);
    auto closed = ghz_vanishing_volumes(p);
    auto acc = mc_volume(State{p}, Side::Accessible, 400000, 77);
    double zTrue = std::abs(acc.value - closed.Va) / acc.sigma;
    double zCorrupt = std::abs(acc.value - 1.01 * closed.Va) / acc.sigma;
    CHECK(zTrue <= 4.0);
    CHECK(zCorrupt > 4.0);
}

TEST_CASE("vanishing-case Monte Carlo matches all closed forms") {
    auto checkCase = [](const GhzParams& p) {
        auto rep = ghz_vanishing_volumes(p);
        auto acc = mc_volume(State{p}, Side::Accessible, 200000, 23);
        CHECK(std::abs(acc.value - rep.Va) <= 4.0 * acc.sigma + 1e-12);
        auto src = mc_volume(State{p}, Side::Source, 200000, 23);
        CHECK(std::abs(src.value - rep.Vs) <= 4.0 * src.sigma + 1e-12);
    };
    checkCase(ghz(0.0, 0.1, 0.2, 0.5, 0.0));
    checkCase(ghz(0.0, 0.0, 0.2, 0.5, 0.0));
    checkCase(ghz(0.0, 0.0, 0.0, 0.5, 0.0));
    checkCase(ghz(0.0, 0.1, 0.2, 1.0, 0.0));
    checkCase(ghz(0.0, 0.0, 0.2, 1.0, 0.0));
}

TEST_CASE("MES Monte Carlo is consistent with the cubature") {
    auto p = ghz(0.2, 0.2, 0.2, 1.0, kPi / 2.0);
    auto rep = ghz_mes_accessible(p, 1e-9);
    auto acc = mc_volume(State{p}, Side::Accessible, 400000, 31);
    CHECK(std::abs(acc.value - rep.Va) <= 4.0 * acc.sigma);
    auto src = mc_volume(State{p}, Side::Source, 50000, 31);
    CHECK(src.value == 0.0);
    CHECK(src.hits == 0);
}
