#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "locc/json_io.hpp"

namespace {

using locc::json;

// Usage-level problems exit 2, numerical failures exit 3.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int error_exit_code(const locc::Error& e) {
    switch (e.code()) {
        case locc::ErrorCode::NotNormalized:
        case locc::ErrorCode::Biseparable:
        case locc::ErrorCode::OutOfRange:
        case locc::ErrorCode::DimensionMismatch:
        case locc::ErrorCode::PreconditionViolated:
        case locc::ErrorCode::WrongClass:
            return 2;
        default:
            return 3;
    }
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        double v = std::stod(item, &pos);
        out.push_back(v);
    }
    return out;
}

json load_json_arg(const std::string& arg) {
    // Accept either an inline JSON object or a path to a JSON file.
    std::string trimmed = arg;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (!trimmed.empty() && (trimmed[0] == '{' || trimmed[0] == '[')) {
        return json::parse(trimmed);
    }
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot open JSON file: " + arg);
    json j;
    in >> j;
    return j;
}

locc::State state_from_args(const std::string& cls, const std::string& inline_,
                            const std::string& jsonArg) {
    if (!inline_.empty() && !jsonArg.empty()) {
        throw UsageError("give either inline params or a JSON state, not both");
    }
    if (!jsonArg.empty()) return locc::state_from_json(load_json_arg(jsonArg));
    if (inline_.empty()) throw UsageError("missing state parameters");
    auto v = parse_list(inline_);
    if (cls == "w") {
        if (v.size() != 4) throw UsageError("w expects x0,x1,x2,x3");
        return locc::validate_w(v[0], v[1], v[2], v[3]);
    }
    if (cls == "ghz") {
        if (v.size() != 5) throw UsageError("ghz expects g1,g2,g3,r,phi");
        return locc::canonicalize_ghz(locc::validate_ghz(v[0], v[1], v[2], v[3], v[4]));
    }
    throw UsageError("--class must be w or ghz");
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void config_line(const std::string& text) {
    // effective config goes to stderr so stdout carries only result data
    std::cerr << "config: " << text << "\n";
}

locc::GhzTag tag_from_name(const std::string& name) {
    if (name == "generic") return locc::GhzTag::GenericNonMes;
    if (name == "mes") return locc::GhzTag::Mes;
    if (name == "vanishing-one") return locc::GhzTag::VanishingOne;
    if (name == "vanishing-two") return locc::GhzTag::VanishingTwo;
    if (name == "vanishing-three") return locc::GhzTag::VanishingThree;
    if (name == "ghz-state") return locc::GhzTag::GhzState;
    throw UsageError("unknown class tag: " + name);
}

int run(int argc, char** argv) {
    CLI::App app{"operational entanglement volumes for three-qubit and bipartite states"};
    app.require_subcommand(1);

    // measure
    auto* measureCmd = app.add_subcommand("measure", "measure tuple of a state");
    std::string mClass = "w", mParams, mJson;
    measureCmd->add_option("--class", mClass, "w or ghz");
    measureCmd->add_option("--params", mParams, "inline comma list");
    measureCmd->add_option("--json", mJson, "JSON state (inline or file)");

    // convertible
    auto* convCmd = app.add_subcommand("convertible", "LOCC convertibility decision");
    std::string fClass = "w", fParams, fJson, tClass = "w", tParams, tJson;
    convCmd->add_option("--from-class", fClass, "w or ghz");
    convCmd->add_option("--from", fParams, "source inline params");
    convCmd->add_option("--from-json", fJson, "source JSON");
    convCmd->add_option("--to-class", tClass, "w or ghz");
    convCmd->add_option("--to", tParams, "target inline params");
    convCmd->add_option("--to-json", tJson, "target JSON");

    // invert
    auto* invCmd = app.add_subcommand("invert", "state from measure tuple");
    std::string iClass, iMeasures;
    int iBit = -1;
    invCmd->add_option("--class", iClass, "w | ghz | ghz-mes | ghz-vanishing")->required();
    invCmd->add_option("--measures", iMeasures, "measures JSON (inline or file)")->required();
    invCmd->add_option("--bit", iBit, "disambiguation bit (0 or 1)");

    // verify
    auto* verCmd = app.add_subcommand("verify", "closed forms vs Monte-Carlo oracle");
    uint64_t vN = 100000, vSeed = 20240901, vStates = 3;
    verCmd->add_option("--n", vN, "samples per case");
    verCmd->add_option("--seed", vSeed, "RNG seed");
    verCmd->add_option("--states", vStates, "random states per class");

    // sample
    auto* samCmd = app.add_subcommand("sample", "emit measured random states");
    std::string sClass = "w", sFormat = "csv";
    uint64_t sN = 10, sSeed = 0;
    samCmd->add_option("--class", sClass,
                       "w | generic | mes | vanishing-one | vanishing-two | "
                       "vanishing-three | ghz-state");
    samCmd->add_option("-n,--n", sN, "number of states");
    samCmd->add_option("--seed", sSeed, "RNG seed");
    samCmd->add_option("--format", sFormat, "csv or json");

    // bipartite
    auto* bipCmd = app.add_subcommand("bipartite", "bipartite majorization volumes");
    std::string bSchmidt, bMethod = "auto";
    uint64_t bN = 1000000, bSeed = 0;
    bipCmd->add_option("--schmidt", bSchmidt, "comma list of Schmidt coefficients")
        ->required();
    bipCmd->add_option("--method", bMethod, "auto | exact | mc");
    bipCmd->add_option("--n", bN, "MC samples");
    bipCmd->add_option("--seed", bSeed, "RNG seed");

    CLI11_PARSE(app, argc, argv);

    if (measureCmd->parsed()) {
        config_line("measure class=" + mClass + " params=" + mParams + " json=" + mJson);
        locc::State s = state_from_args(mClass, mParams, mJson);
        print_json(locc::to_json(locc::measure(s)));
        return 0;
    }
    if (convCmd->parsed()) {
        config_line("convertible from=" + fClass + ":" + fParams + fJson +
                    " to=" + tClass + ":" + tParams + tJson);
        locc::State src = state_from_args(fClass, fParams, fJson);
        locc::State dst = state_from_args(tClass, tParams, tJson);
        auto d = locc::convertible(src, dst);
        print_json(locc::to_json(d));
        return d.convertible ? 0 : 1;
    }
    if (invCmd->parsed()) {
        config_line("invert class=" + iClass + " measures=" + iMeasures +
                    " bit=" + std::to_string(iBit));
        json j = load_json_arg(iMeasures);
        locc::InversionResult res;
        if (iClass == "w") {
            res = locc::invert_w(locc::w_measure_input_from_json(j));
        } else if (iClass == "ghz") {
            auto t = locc::measure_tuple_from_json(j);
            if (iBit >= 0) t.bit = iBit != 0;
            res = locc::invert_ghz_generic(t);
        } else if (iClass == "ghz-mes") {
            std::array<double, 3> e{};
            if (j.contains("emin")) {
                auto v = j["emin"].get<std::vector<double>>();
                if (v.size() != 3) throw UsageError("emin needs 3 entries");
                e = {v[0], v[1], v[2]};
            } else {
                e = {j.at("E1").get<double>(), j.at("E2").get<double>(),
                     j.at("E3").get<double>()};
            }
            std::optional<bool> bit;
            if (iBit >= 0) bit = iBit != 0;
            res = locc::invert_ghz_mes(e, bit);
        } else if (iClass == "ghz-vanishing") {
            res = locc::invert_ghz_vanishing(locc::measure_tuple_from_json(j));
        } else {
            throw UsageError("--class must be w, ghz, ghz-mes or ghz-vanishing");
        }
        print_json(locc::to_json(res));
        return 0;
    }
    if (verCmd->parsed()) {
        config_line("verify n=" + std::to_string(vN) + " seed=" + std::to_string(vSeed) +
                    " states=" + std::to_string(vStates));
        auto rep = locc::verify_all(vN, vSeed, vStates);
        print_json(locc::to_json(rep));
        return rep.pass ? 0 : 1;
    }
    if (samCmd->parsed()) {
        config_line("sample class=" + sClass + " n=" + std::to_string(sN) +
                    " seed=" + std::to_string(sSeed) + " format=" + sFormat);
        std::vector<locc::State> states;
        if (sClass == "w") {
            for (const auto& w : locc::sample_w(sN, sSeed)) states.emplace_back(w);
        } else {
            for (const auto& g : locc::sample_ghz(tag_from_name(sClass), sN, sSeed)) {
                states.emplace_back(g);
            }
        }
        if (sFormat == "json") {
            json rows = json::array();
            for (const auto& s : states) {
                rows.push_back(json{{"state", locc::to_json(s)},
                                    {"measures", locc::to_json(locc::measure(s))}});
            }
            print_json(rows);
        } else if (sFormat == "csv") {
            // fixed column order, padded with blanks for the unused family
            std::printf(
                "x0,x1,x2,x3,g1,g2,g3,r,phi,C1,C2,C3,Ea,Es,dimA,dimS,bit\n");
            for (const auto& s : states) {
                auto t = locc::measure(s);
                if (std::holds_alternative<locc::WParams>(s)) {
                    const auto& w = std::get<locc::WParams>(s);
                    std::printf("%.17g,%.17g,%.17g,%.17g,,,,,", w.x0, w.x1, w.x2, w.x3);
                } else {
                    const auto& g = std::get<locc::GhzParams>(s);
                    std::printf(",,,,%.17g,%.17g,%.17g,%.17g,%.17g", g.g1, g.g2, g.g3,
                                g.r, g.phi);
                }
                std::printf(",%.17g,%.17g,%.17g,%.17g,%.17g,%d,%d,%s\n", t.C1, t.C2,
                            t.C3, t.Ea, t.Es, t.dims.accessibleDim, t.dims.sourceDim,
                            t.bit ? (*t.bit ? "1" : "0") : "");
            }
        } else {
            throw UsageError("--format must be csv or json");
        }
        return 0;
    }
    if (bipCmd->parsed()) {
        config_line("bipartite schmidt=" + bSchmidt + " method=" + bMethod +
                    " n=" + std::to_string(bN) + " seed=" + std::to_string(bSeed));
        locc::SchmidtVector lam(parse_list(bSchmidt));
        locc::BipartiteMethod method = locc::BipartiteMethod::Auto;
        if (bMethod == "exact") method = locc::BipartiteMethod::Exact;
        else if (bMethod == "mc") method = locc::BipartiteMethod::MonteCarlo;
        else if (bMethod != "auto") throw UsageError("--method must be auto, exact or mc");
        print_json(locc::to_json(locc::bipartite_volumes(lam, method, bN, bSeed)));
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const locc::Error& e) {
        std::cerr << "error [" << locc::to_string(e.code()) << "]: " << e.what() << "\n";
        return error_exit_code(e);
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
