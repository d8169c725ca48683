#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "locc/volumes.hpp"

namespace locc {

enum class Side { Accessible, Source };

std::string to_string(Side s);

// One Monte-Carlo volume estimate. The sampling box, its volume and the
// component multiplicity are recorded so the estimate is auditable.
struct VolumeEstimate {
    double value = 0.0;
    double sigma = 0.0;  // standard error of value
    uint64_t samples = 0;
    uint64_t hits = 0;
    uint64_t seed = 0;
    double boxVolume = 0.0;
    double multiplicity = 1.0;
    std::string region;
};

// Uniform samples of the open W simplex interior (Dirichlet(1,1,1,1) via
// sorted spacings); deterministic in (n, seed).
std::vector<WParams> sample_w(uint64_t n, uint64_t seed);

// Uniform Lebesgue samples over the case's parameter box, canonicalized.
// Degenerate tags sample only their free parameters (vanishing tags draw
// r in (0,1], so r = 1 sub-cases occur with probability zero; GhzState is a
// single point).
std::vector<GhzParams> sample_ghz(GhzTag tag, uint64_t n, uint64_t seed);

// Estimates the accessible/source volume of a state by rejection sampling
// over the case's parameter box, using the conversion decision procedure as
// the membership test (not the closed-form formulas). Deterministic in
// (n, seed) and independent of the worker count.
VolumeEstimate mc_volume(const State& s, Side side, uint64_t n, uint64_t seed);

struct VerifyCheck {
    std::string name;
    Side side = Side::Accessible;
    double closedForm = 0.0;
    VolumeEstimate mc;
    double z = 0.0;  // (mc - closed) / sigma
    bool pass = false;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool pass = false;
    uint64_t samplesPerCase = 0;
    uint64_t seed = 0;
};

// Cross-checks every closed-form volume case (and the exact bipartite
// polytope volumes) against the Monte-Carlo estimator, on a fixed set of
// branch-covering states plus statesPerCase random states per class; a
// check passes when the estimate is within 4 standard errors.
VerifyReport verify_all(uint64_t nPerCase = 100000, uint64_t seed = 20240901,
                        uint64_t statesPerCase = 3);

}  // namespace locc
