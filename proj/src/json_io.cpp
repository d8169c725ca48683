#include "locc/json_io.hpp"

namespace locc {

json to_json(const WParams& p) {
    return json{{"class", "w"}, {"x0", p.x0}, {"x1", p.x1}, {"x2", p.x2}, {"x3", p.x3}};
}

json to_json(const GhzParams& p) {
    return json{{"class", "ghz"}, {"g1", p.g1}, {"g2", p.g2}, {"g3", p.g3},
                {"r", p.r},       {"phi", p.phi},
                {"tag", to_string(classify_ghz(p).tag)}};
}

json to_json(const State& s) {
    return std::holds_alternative<WParams>(s) ? to_json(std::get<WParams>(s))
                                              : to_json(std::get<GhzParams>(s));
}

json to_json(const VolumeDimension& d) {
    return json{{"accessible", d.accessibleDim}, {"source", d.sourceDim}};
}

json to_json(const MeasureTuple& t) {
    json j{{"C1", t.C1}, {"C2", t.C2}, {"C3", t.C3},
           {"Ea", t.Ea}, {"Es", t.Es}, {"dims", to_json(t.dims)}};
    if (t.bit) j["bit"] = *t.bit ? 1 : 0;
    return j;
}

json to_json(const VolumeReport& r) {
    json j{{"Va", r.Va},       {"Vs", r.Vs},       {"Ea", r.Ea},
           {"Es", r.Es},       {"VaSup", r.VaSup}, {"VsSup", r.VsSup},
           {"dims", to_json(r.dims)}, {"method", to_string(r.method)}};
    if (r.method == VolumeMethod::MonteCarlo) {
        j["VaStderr"] = r.VaStderr;
        j["VsStderr"] = r.VsStderr;
    }
    return j;
}

json to_json(const ConvertDecision& d) {
    json j{{"convertible", d.convertible}};
    if (d.failedCondition) j["failedCondition"] = to_string(*d.failedCondition);
    if (d.targetZ) j["targetZ"] = json{{"r", d.targetZ->first}, {"phi", d.targetZ->second}};
    return j;
}

json to_json(const InversionResult& r) {
    json cands = json::array();
    for (const auto& c : r.candidates) cands.push_back(to_json(c));
    return json{{"state", to_json(r.state)},
                {"residual", r.residual},
                {"ambiguity", to_string(r.ambiguityResolved)},
                {"candidates", cands}};
}

json to_json(const VolumeEstimate& e) {
    return json{{"value", e.value},
                {"stderr", e.sigma},
                {"samples", e.samples},
                {"hits", e.hits},
                {"seed", e.seed},
                {"boxVolume", e.boxVolume},
                {"multiplicity", e.multiplicity},
                {"region", e.region}};
}

json to_json(const VerifyReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back(json{{"name", c.name},
                              {"side", to_string(c.side)},
                              {"closed", c.closedForm},
                              {"mc", c.mc.value},
                              {"stderr", c.mc.sigma},
                              {"z", c.z},
                              {"pass", c.pass}});
    }
    return json{{"pass", r.pass},
                {"samplesPerCase", r.samplesPerCase},
                {"seed", r.seed},
                {"checks", checks}};
}

State state_from_json(const json& j) {
    std::string cls = j.value("class", "");
    if (cls == "w") {
        return validate_w(j.at("x0").get<double>(), j.at("x1").get<double>(),
                          j.at("x2").get<double>(), j.at("x3").get<double>());
    }
    if (cls == "ghz") {
        return canonicalize_ghz(validate_ghz(
            j.at("g1").get<double>(), j.at("g2").get<double>(),
            j.at("g3").get<double>(), j.at("r").get<double>(),
            j.value("phi", 0.0)));
    }
    throw Error(ErrorCode::OutOfRange, "state JSON needs \"class\": \"w\" or \"ghz\"");
}

MeasureTuple measure_tuple_from_json(const json& j) {
    MeasureTuple t;
    t.C1 = j.at("C1").get<double>();
    t.C2 = j.at("C2").get<double>();
    t.C3 = j.at("C3").get<double>();
    t.Ea = j.at("Ea").get<double>();
    t.Es = j.at("Es").get<double>();
    if (j.contains("dims")) {
        t.dims.accessibleDim = j["dims"].at("accessible").get<int>();
        t.dims.sourceDim = j["dims"].at("source").get<int>();
    }
    if (j.contains("bit") && !j["bit"].is_null()) {
        t.bit = j["bit"].get<int>() != 0;
    }
    return t;
}

WMeasureInput w_measure_input_from_json(const json& j) {
    WMeasureInput m;
    auto grab = [&](const char* key, std::optional<double>& slot) {
        if (j.contains(key) && !j[key].is_null()) slot = j[key].get<double>();
    };
    grab("C1", m.C1);
    grab("C2", m.C2);
    grab("C3", m.C3);
    grab("Ea", m.Ea);
    grab("Es", m.Es);
    return m;
}

SchmidtVector schmidt_from_json(const json& j) {
    const json& arr = j.is_array() ? j : j.at("lambda");
    return SchmidtVector(arr.get<std::vector<double>>());
}

}  // namespace locc
