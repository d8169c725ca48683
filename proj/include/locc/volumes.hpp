#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "locc/convert.hpp"
#include "locc/states.hpp"

namespace locc {

enum class VolumeMethod { ClosedForm, Cubature, MonteCarlo, ExactPolytope };

std::string to_string(VolumeMethod m);

struct VolumeReport {
    double Va = 0.0;
    double Vs = 0.0;
    double Ea = 0.0;
    double Es = 0.0;
    double VaSup = 0.0;
    double VsSup = 0.0;
    VolumeDimension dims{};
    VolumeMethod method = VolumeMethod::ClosedForm;
    // Standard errors, nonzero only for Monte-Carlo results.
    double VaStderr = 0.0;
    double VsStderr = 0.0;
};

struct MeasureTuple {
    double C1 = 0.0, C2 = 0.0, C3 = 0.0;
    double Ea = 0.0, Es = 0.0;
    VolumeDimension dims{};
    std::optional<bool> bit;
};

// W class: Va = x1 x2 x3, Vs = x0^3/6, Ea = 27 Va, Es = 1 - 6 Vs.
VolumeReport w_volumes(const WParams& p);

// Generic (case-A, non-MES) GHZ states: Va = prod(1/2 - g_i),
// Vs = G (1 + f [log f (1 - log f / 2) - 1]) with f = 2|Re z^2|/(1+|z|^4).
VolumeReport ghz_generic_volumes(const GhzParams& p);

// GHZ-MES accessible volume: 3-d cubature of 1 - r_lower(h) over the box
// prod [g_i, 1/2) after analytic inner r-integration; Vs = 0.
VolumeReport ghz_mes_accessible(const GhzParams& p, double tol = 1e-8);

// All vanishing-parameter cases (one/two/three zeros, r = 1 or not).
VolumeReport ghz_vanishing_volumes(const GhzParams& p);

// Dispatcher over the GHZ case taxonomy.
VolumeReport ghz_volumes(const GhzParams& p, double mesTol = 1e-8);

enum class BipartiteMethod { Auto, Exact, MonteCarlo };

// Volumes of the majorization regions A(lambda), S(lambda) inside the
// ordered simplex chamber; exact polytope volumes for d <= 4, Monte Carlo
// otherwise.
VolumeReport bipartite_volumes(const SchmidtVector& lam,
                               BipartiteMethod method = BipartiteMethod::Auto,
                               uint64_t n = 1000000, uint64_t seed = 0);

// Squared concurrences of each party versus the rest.
std::array<double, 3> concurrences(const WParams& p);
std::array<double, 3> concurrences(const GhzParams& p);
std::array<double, 3> concurrences(const State& s);

// Signed-g3 MES encoding of a (non-GHZ) MES state: z in {1, i} maps to
// z = 1 with g3 of either sign.
std::array<double, 3> mes_signed_g(const GhzParams& p);
GhzParams mes_from_signed_g(const std::array<double, 3>& g);

struct MesEigs {
    std::array<double, 3> emin;       // 2 * min eigenvalue per party
    std::array<bool, 3> plusBranch;   // true if E_i^+ attained the minimum
    int caseIndex;                    // 1..4 per the sign pattern
};

// Doubled minimum eigenvalues of the single-party reduced states of an MES
// state in signed-g3 encoding.
MesEigs mes_min_eigs(const std::array<double, 3>& signedG);

}  // namespace locc
