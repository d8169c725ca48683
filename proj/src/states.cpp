#include "locc/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace locc {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

std::string to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::Biseparable: return "Biseparable";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::WrongClass: return "WrongClass";
        case ErrorCode::CubatureNotConverged: return "CubatureNotConverged";
        case ErrorCode::Inconsistent: return "Inconsistent";
        case ErrorCode::NonPhysicalRoot: return "NonPhysicalRoot";
        case ErrorCode::BitRequired: return "BitRequired";
        case ErrorCode::NoSecondCandidate: return "NoSecondCandidate";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorCode::NotConverged: return "NotConverged";
        case ErrorCode::UnsupportedCase: return "UnsupportedCase";
    }
    return "Unknown";
}

std::string to_string(GhzTag tag) {
    switch (tag) {
        case GhzTag::GenericNonMes: return "GenericNonMes";
        case GhzTag::Mes: return "Mes";
        case GhzTag::VanishingOne: return "VanishingOne";
        case GhzTag::VanishingTwo: return "VanishingTwo";
        case GhzTag::VanishingThree: return "VanishingThree";
        case GhzTag::GhzState: return "GhzState";
    }
    return "Unknown";
}

SchmidtVector::SchmidtVector(std::vector<double> lambda) : lambda_(std::move(lambda)) {
    if (lambda_.size() < 2) {
        throw Error(ErrorCode::OutOfRange, "Schmidt vector needs d >= 2");
    }
    for (double v : lambda_) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw Error(ErrorCode::OutOfRange, "Schmidt entries must lie in [0,1]");
        }
    }
    double sum = std::accumulate(lambda_.begin(), lambda_.end(), 0.0);
    if (std::abs(sum - 1.0) > eps_norm) {
        throw Error(ErrorCode::NotNormalized, "Schmidt vector must sum to 1");
    }
    std::sort(lambda_.begin(), lambda_.end(), std::greater<double>());
}

WParams validate_w(double x0, double x1, double x2, double x3) {
    double sum = x0 + x1 + x2 + x3;
    if (std::abs(sum - 1.0) > eps_norm) {
        throw Error(ErrorCode::NotNormalized, "W parameters must sum to 1");
    }
    if (x0 < -eps_norm || x1 < 0.0 || x2 < 0.0 || x3 < 0.0) {
        throw Error(ErrorCode::OutOfRange, "W parameters must be non-negative");
    }
    if (x1 <= 0.0 || x2 <= 0.0 || x3 <= 0.0) {
        throw Error(ErrorCode::Biseparable, "x1, x2, x3 must be strictly positive");
    }
    return WParams{std::max(x0, 0.0), x1, x2, x3};
}

GhzParams validate_ghz(double g1, double g2, double g3, double r, double phi) {
    for (double g : {g1, g2, g3}) {
        if (!(g >= 0.0 && g < 0.5)) {
            throw Error(ErrorCode::OutOfRange, "g_i must lie in [0, 1/2)");
        }
    }
    if (!(r > 0.0 && r <= 1.0 + eps_class)) {
        throw Error(ErrorCode::OutOfRange, "r must lie in (0, 1]");
    }
    if (!(phi >= 0.0 && phi < kPi)) {
        throw Error(ErrorCode::OutOfRange, "phi must lie in [0, pi)");
    }
    return GhzParams{g1, g2, g3, std::min(r, 1.0), phi};
}

GhzClass classify_ghz(const GhzParams& p) {
    GhzClass c{};
    c.vanishes = {p.g1 <= eps_class, p.g2 <= eps_class, p.g3 <= eps_class};
    c.rIsOne = std::abs(p.r - 1.0) <= eps_class;
    int zeros = c.zeroCount();
    if (zeros == 0) {
        bool zIsOne = c.rIsOne && std::abs(p.phi) <= eps_class;
        bool zIsI = c.rIsOne && std::abs(p.phi - kPi / 2.0) <= eps_class;
        c.tag = (zIsOne || zIsI) ? GhzTag::Mes : GhzTag::GenericNonMes;
    } else if (zeros == 1) {
        c.tag = GhzTag::VanishingOne;
    } else if (zeros == 2) {
        c.tag = GhzTag::VanishingTwo;
    } else {
        c.tag = c.rIsOne ? GhzTag::GhzState : GhzTag::VanishingThree;
    }
    return c;
}

GhzParams canonicalize_ghz(const GhzParams& p) {
    GhzParams q = p;
    // |z| <= 1 via the LU equivalence z <-> 1/z (which negates phi).
    if (q.r > 1.0) {
        q.r = 1.0 / q.r;
        q.phi = -q.phi;
    }
    // z ~ -z (global phase), so phi lives mod pi.
    q.phi = std::fmod(q.phi, kPi);
    if (q.phi < 0.0) q.phi += kPi;
    // Conjugation fold phi <-> pi - phi onto [0, pi/2].
    if (q.phi > kPi / 2.0) q.phi = kPi - q.phi;

    // Snap degenerate boundaries.
    if (q.g1 <= eps_class) q.g1 = 0.0;
    if (q.g2 <= eps_class) q.g2 = 0.0;
    if (q.g3 <= eps_class) q.g3 = 0.0;
    if (std::abs(q.r - 1.0) <= eps_class) q.r = 1.0;
    if (q.phi <= eps_class) q.phi = 0.0;
    if (std::abs(q.phi - kPi / 2.0) <= eps_class) q.phi = kPi / 2.0;
    if (std::abs(q.phi - kPi / 4.0) <= eps_class) q.phi = kPi / 4.0;

    // With a vanishing g_i the phase can be removed by an LU on that qubit.
    if (q.g1 == 0.0 || q.g2 == 0.0 || q.g3 == 0.0) q.phi = 0.0;
    return q;
}

VolumeDimension ghz_dims(const GhzClass& c) {
    switch (c.tag) {
        case GhzTag::GenericNonMes: return {3, 3};
        case GhzTag::Mes: return {4, 0};
        case GhzTag::VanishingOne: return c.rIsOne ? VolumeDimension{4, 2} : VolumeDimension{3, 3};
        case GhzTag::VanishingTwo: return c.rIsOne ? VolumeDimension{4, 1} : VolumeDimension{3, 2};
        case GhzTag::VanishingThree: return {3, 1};
        case GhzTag::GhzState: return {4, 0};
    }
    return {0, 0};
}

}  // namespace locc
