#pragma once

#include <optional>
#include <utility>
#include <variant>

#include "locc/states.hpp"

namespace locc {

using State = std::variant<WParams, GhzParams>;

enum class FailedCondition {
    Inequality_i,
    EqualityRe,
    EqualityIm,
    SpecialReZero,
    SpecialImZero,
    SpecialModulusOne,
    VanishingR,
    MesPhiConstraint,
    CrossSloccClass,
};

std::string to_string(FailedCondition c);

struct ConvertDecision {
    bool convertible = false;
    std::optional<FailedCondition> failedCondition;
    // (r', phi') of the target when the decision involved one.
    std::optional<std::pair<double, double>> targetZ;

    static ConvertDecision yes(std::optional<std::pair<double, double>> z = std::nullopt) {
        return ConvertDecision{true, std::nullopt, z};
    }
    static ConvertDecision no(FailedCondition c) {
        return ConvertDecision{false, c, std::nullopt};
    }
};

// Nielsen's criterion: true iff every partial sum of x (sorted) is bounded
// by the corresponding partial sum of y.
bool majorizes(const SchmidtVector& x, const SchmidtVector& y);

// W-class LOCC criterion: componentwise x_i >= y_i for i in {1,2,3}.
bool w_convertible(const WParams& src, const WParams& dst);

// Unique canonical z' = (r', phi') of the target reachable from a case-A
// state src at box point h (h_i >= g_i). Absent iff the modulus equation has
// no real solution.
std::optional<std::pair<double, double>> solve_target_z(const GhzParams& src,
                                                        const std::array<double, 3>& h);

// Full GHZ-class case tree (I, II.1, II.2 with all degenerate branches).
// Both states must be valid and canonical.
ConvertDecision ghz_convertible(const GhzParams& src, const GhzParams& dst);

// Dispatcher; cross-SLOCC-class pairs are LOCC incomparable.
ConvertDecision convertible(const State& src, const State& dst);

}  // namespace locc
