#include <doctest.h>

#include <cmath>

#include "locc/json_io.hpp"

using namespace locc;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("state JSON round-trips exactly") {
    State w = validate_w(0.4, 0.2, 0.25, 0.15);
    auto jw = to_json(w);
    CHECK(jw["class"] == "w");
    auto w2 = std::get<WParams>(state_from_json(jw));
    CHECK(w2.x0 == std::get<WParams>(w).x0);
    CHECK(w2.x1 == std::get<WParams>(w).x1);
    CHECK(w2.x2 == std::get<WParams>(w).x2);
    CHECK(w2.x3 == std::get<WParams>(w).x3);

    State g = canonicalize_ghz(validate_ghz(0.1, 0.2, 0.3, 0.7, 0.5));
    auto jg = to_json(g);
    CHECK(jg["class"] == "ghz");
    auto g2 = std::get<GhzParams>(state_from_json(jg));
    CHECK(g2.g1 == std::get<GhzParams>(g).g1);
    CHECK(g2.g2 == std::get<GhzParams>(g).g2);
    CHECK(g2.g3 == std::get<GhzParams>(g).g3);
    CHECK(g2.r == std::get<GhzParams>(g).r);
    CHECK(g2.phi == std::get<GhzParams>(g).phi);
}

TEST_CASE("serialized doubles survive a parse round-trip bit-exactly") {
    // dump/parse through text must preserve the binary value
    State g = canonicalize_ghz(validate_ghz(1.0 / 3, 0.2, 1.0 / 7, 1.0 / 9, 0.5));
    auto text = to_json(g).dump();
    auto g2 = std::get<GhzParams>(state_from_json(json::parse(text)));
    CHECK(g2.g1 == std::get<GhzParams>(g).g1);
    CHECK(g2.g3 == std::get<GhzParams>(g).g3);
    CHECK(g2.r == std::get<GhzParams>(g).r);
}

TEST_CASE("state_from_json canonicalizes GHZ input") {
    json j{{"class", "ghz"}, {"g1", 0.1}, {"g2", 0.2}, {"g3", 0.3},
           {"r", 1.0},       {"phi", 2.8}};
    auto g = std::get<GhzParams>(state_from_json(j));
    CHECK(g.phi == doctest::Approx(kPi - 2.8).epsilon(1e-12));
}

TEST_CASE("measure tuple JSON carries the bit as 0/1") {
    auto p = canonicalize_ghz(validate_ghz(0.2, 0.25, 0.3, 0.7, 1.2));
    auto t = measure(State{p});
    REQUIRE(t.bit.has_value());
    auto j = to_json(t);
    CHECK((j["bit"] == 0 || j["bit"] == 1));
    auto t2 = measure_tuple_from_json(j);
    REQUIRE(t2.bit.has_value());
    CHECK(*t2.bit == *t.bit);
    CHECK(t2.Ea == t.Ea);
    CHECK(t2.Es == t.Es);
    CHECK(t2.dims == t.dims);

    // no bit -> key absent
    auto tq = measure(State{canonicalize_ghz(validate_ghz(0.2, 0.25, 0.3, 0.8, kPi / 4))});
    auto jq = to_json(tq);
    CHECK_FALSE(jq.contains("bit"));
}

TEST_CASE("w_measure_input_from_json keeps only the supplied fields") {
    json j{{"C1", 0.5}, {"C2", 0.4}, {"Es", 0.9}};
    auto m = w_measure_input_from_json(j);
    CHECK(m.C1.has_value());
    CHECK(m.C2.has_value());
    CHECK(m.Es.has_value());
    CHECK_FALSE(m.C3.has_value());
    CHECK_FALSE(m.Ea.has_value());
}

TEST_CASE("schmidt_from_json accepts arrays and objects") {
    auto a = schmidt_from_json(json::parse("[0.2, 0.5, 0.3]"));
    CHECK(a.dim() == 3);
    CHECK(a[0] == 0.5);
    auto b = schmidt_from_json(json{{"lambda", {0.7, 0.3}}});
    CHECK(b.dim() == 2);
}

TEST_CASE("volume report JSON shape") {
    auto rep = w_volumes(validate_w(0.4, 0.2, 0.2, 0.2));
    auto j = to_json(rep);
    CHECK(j["method"] == "ClosedForm");
    CHECK_FALSE(j.contains("VaStderr"));
    CHECK(j["dims"]["accessible"] == 3);
    CHECK(j["dims"]["source"] == 3);

    auto mc = bipartite_volumes(SchmidtVector({0.4, 0.3, 0.2, 0.06, 0.04}),
                                BipartiteMethod::MonteCarlo, 10000, 1);
    auto jm = to_json(mc);
    CHECK(jm["method"] == "MonteCarlo");
    CHECK(jm.contains("VaStderr"));
    CHECK(jm.contains("VsStderr"));
}

TEST_CASE("convert decision JSON shape") {
    State w = validate_w(0.1, 0.3, 0.3, 0.3);
    State g = canonicalize_ghz(validate_ghz(0.1, 0.2, 0.3, 0.5, 0.4));
    auto d = convertible(w, g);
    auto j = to_json(d);
    CHECK(j["convertible"] == false);
    CHECK(j["failedCondition"] == "CrossSloccClass");

    auto yes = convertible(w, State{validate_w(0.4, 0.2, 0.2, 0.2)});
    auto jy = to_json(yes);
    CHECK(jy["convertible"] == true);
    CHECK_FALSE(jy.contains("failedCondition"));
}

TEST_CASE("inversion result JSON shape") {
    auto t = measure(State{canonicalize_ghz(validate_ghz(0.2, 0.25, 0.3, 0.7, 0.4))});
    auto res = invert_ghz_generic(t);
    auto j = to_json(res);
    CHECK(j.contains("state"));
    CHECK(j.contains("residual"));
    CHECK(j.contains("ambiguity"));
    CHECK(j["candidates"].is_array());
    CHECK(j["candidates"].size() == res.candidates.size());
}
