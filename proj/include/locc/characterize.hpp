#pragma once

#include <optional>
#include <vector>

#include "locc/volumes.hpp"

namespace locc {

enum class Ambiguity {
    Unique,
    ByBit,
    ConjugatePair,
    // Several states share the supplied measures (possible for some 3-subsets
    // of the W measures); all of them are listed in candidates.
    Multiple,
};

std::string to_string(Ambiguity a);

struct InversionResult {
    State state;
    double residual = 0.0;
    Ambiguity ambiguityResolved = Ambiguity::Unique;
    std::vector<State> candidates;  // every valid candidate; state == candidates[0]
};

// Forward map: full measure tuple of a state. The disambiguation bit is set
// for generic GHZ states with cos(2 phi) != 0 and for MES states admitting a
// second candidate.
MeasureTuple measure(const State& s, double mesTol = 1e-8);

// Any three of {C1, C2, C3, Ea, Es}; absent fields are the unknowns.
struct WMeasureInput {
    std::optional<double> C1, C2, C3, Ea, Es;
};

InversionResult invert_w(const WMeasureInput& m);

// Generic case-A inversion: g_2(g_1), g_3(g_1) elimination, monotone
// bisection for g_1, then the (at most two) (r, phi) candidates, resolved by
// the bit.
InversionResult invert_ghz_generic(const MeasureTuple& t);

// Lemma-1 bit: whether the state's own MES source attains the larger sum of
// concurrences among the two sources Psi(h,1), Psi(h,i) with
// h = (g1, g2, f_z g3).
bool compute_bit_generic(const GhzParams& p);

// Lemma-2 bit for MES states: whether the state attains the larger
// accessible volume among the (at most two) states compatible with its
// minimum-eigenvalue triple. False when the triple is unique.
bool compute_bit_mes(const GhzParams& p);

// Lemma-2 inversion from doubled minimum eigenvalues, signed-g3 encoding.
InversionResult invert_ghz_mes(const std::array<double, 3>& emin,
                               std::optional<bool> bit);

// All candidate signed-g triples compatible with an eigenvalue triple,
// ordered by increasing |g_i| (so the first has the larger accessible
// volume).
std::vector<std::array<double, 3>> mes_candidates(const std::array<double, 3>& emin);

// Vanishing-parameter inversion: dims select the case, the ordering of the
// C_i identifies the vanishing indices.
InversionResult invert_ghz_vanishing(const MeasureTuple& t);

}  // namespace locc
