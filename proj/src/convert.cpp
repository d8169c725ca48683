#include "locc/convert.hpp"

#include <algorithm>
#include <cmath>

namespace locc {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEqTol = 1e-10;  // relative tolerance on condition (ii)

bool close_rel(double x, double y) {
    return std::abs(x - y) <= kEqTol * std::max({1.0, std::abs(x), std::abs(y)});
}

// a_z = 2 Re(z^2) / (|z|^4 + 1)
double a_of(const GhzParams& p) { return 2.0 * p.reZ2() / (p.modZ4() + 1.0); }
// b_z = 2 Im(z^2) / (|z|^4 - 1); only meaningful for |z| < 1
double b_of(const GhzParams& p) { return 2.0 * p.imZ2() / (p.modZ4() - 1.0); }

}  // namespace

std::string to_string(FailedCondition c) {
    switch (c) {
        case FailedCondition::Inequality_i: return "Inequality_i";
        case FailedCondition::EqualityRe: return "EqualityRe";
        case FailedCondition::EqualityIm: return "EqualityIm";
        case FailedCondition::SpecialReZero: return "SpecialReZero";
        case FailedCondition::SpecialImZero: return "SpecialImZero";
        case FailedCondition::SpecialModulusOne: return "SpecialModulusOne";
        case FailedCondition::VanishingR: return "VanishingR";
        case FailedCondition::MesPhiConstraint: return "MesPhiConstraint";
        case FailedCondition::CrossSloccClass: return "CrossSloccClass";
    }
    return "Unknown";
}

bool majorizes(const SchmidtVector& x, const SchmidtVector& y) {
    if (x.dim() != y.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "Schmidt vectors differ in dimension");
    }
    double sx = 0.0, sy = 0.0;
    for (int k = 0; k < x.dim(); ++k) {
        sx += x[k];
        sy += y[k];
        if (sx > sy + eps_norm) return false;
    }
    return std::abs(sx - sy) <= eps_norm;
}

bool w_convertible(const WParams& src, const WParams& dst) {
    return src.x1 >= dst.x1 - eps_norm && src.x2 >= dst.x2 - eps_norm &&
           src.x3 >= dst.x3 - eps_norm;
}

std::optional<std::pair<double, double>> solve_target_z(const GhzParams& src,
                                                        const std::array<double, 3>& h) {
    GhzClass cls = classify_ghz(src);
    if (cls.tag != GhzTag::GenericNonMes && cls.tag != GhzTag::Mes) {
        throw Error(ErrorCode::PreconditionViolated, "solve_target_z needs a case-A state");
    }
    double H = h[0] * h[1] * h[2];
    double G = src.G();
    if (H <= 0.0 || H < G * (1.0 - kEqTol)) {
        throw Error(ErrorCode::PreconditionViolated, "h must satisfy h_i >= g_i");
    }
    double rho = G / H;  // in (0, 1]

    if (src.r == 1.0) {
        // |z| = 1 targets stay on |z'| = 1; cos(2 phi') = cos(2 phi) G/H.
        double c = std::cos(2.0 * src.phi) * rho;
        double phi = 0.5 * std::acos(std::clamp(c, -1.0, 1.0));
        return std::make_pair(1.0, phi);
    }

    double a = a_of(src);
    double b = b_of(src);
    double d = a * a + b * b;
    double n = b * b - a * a + 2.0 / (rho * rho);
    double q = n / d;
    double disc = q * q - 1.0;
    if (disc < 0.0) return std::nullopt;
    double t = 1.0 / (q + std::sqrt(disc));  // r'^4, the root <= 1 (stable form)
    double rt = std::sqrt(t);        // r'^2
    double cos2 = a * rho * (t + 1.0) / (2.0 * rt);
    double sin2 = b * rho * (t - 1.0) / (2.0 * rt);
    double twoPhi = std::atan2(sin2, cos2);
    if (twoPhi < 0.0) twoPhi += 2.0 * kPi;
    GhzParams out = canonicalize_ghz(
        GhzParams{h[0], h[1], h[2], std::pow(t, 0.25), std::fmod(0.5 * twoPhi, kPi)});
    return std::make_pair(out.r, out.phi);
}

namespace {

// Case I: both states have all parameters non-vanishing.
ConvertDecision caseA(const GhzParams& src, const GhzParams& dst) {
    for (int i = 0; i < 3; ++i) {
        if (src.g(i) > dst.g(i) + eps_norm) {
            return ConvertDecision::no(FailedCondition::Inequality_i);
        }
    }
    double G = src.G(), H = dst.G();
    double m = src.modZ4(), mp = dst.modZ4();
    double R = src.reZ2(), Rp = dst.reZ2();
    double I = src.imZ2(), Ip = dst.imZ2();

    // Condition (ii) in cross-multiplied form. The direct ratio forms
    // a' = a G/H and b' = b G/H divide by |z|^4 -/+ 1, which is
    // catastrophically ill-conditioned near |z| = 1; the polynomial forms
    // below are algebraically equivalent, cover every degenerate branch
    // (vanishing numerators, |z| = 1 on either side) uniformly, and stay
    // well-conditioned everywhere.
    if (!close_rel(Rp * (m + 1.0) * H, R * (mp + 1.0) * G)) {
        return ConvertDecision::no(std::abs(R) <= eps_class
                                       ? FailedCondition::SpecialReZero
                                       : FailedCondition::EqualityRe);
    }
    if (!close_rel(Ip * (m - 1.0) * H, I * (mp - 1.0) * G)) {
        if (src.r == 1.0) {
            // |z| = 1 sources reach |z'| = 1 or Im(z^2) = 0 targets only
            return ConvertDecision::no(FailedCondition::SpecialModulusOne);
        }
        return ConvertDecision::no(std::abs(I) <= eps_class
                                       ? FailedCondition::SpecialImZero
                                       : FailedCondition::EqualityIm);
    }
    return ConvertDecision::yes(std::make_pair(dst.r, dst.phi));
}

}  // namespace

ConvertDecision ghz_convertible(const GhzParams& src, const GhzParams& dst) {
    GhzClass sc = classify_ghz(src);
    GhzClass dc = classify_ghz(dst);

    if (dc.zeroCount() > 0) {
        // Case II.1: target with at least one vanishing parameter.
        for (int i = 0; i < 3; ++i) {
            if (src.g(i) > dst.g(i) + eps_norm) {
                return ConvertDecision::no(FailedCondition::Inequality_i);
            }
        }
        if (src.r < dst.r - eps_class) {
            return ConvertDecision::no(FailedCondition::VanishingR);
        }
        return ConvertDecision::yes(std::make_pair(dst.r, dst.phi));
    }
    if (sc.zeroCount() > 0) {
        // Case II.2: from a vanishing-parameter state to an all-nonzero one.
        for (int i = 0; i < 3; ++i) {
            if (src.g(i) > dst.g(i) + eps_norm) {
                return ConvertDecision::no(FailedCondition::Inequality_i);
            }
        }
        if (src.r != 1.0) {
            return ConvertDecision::no(FailedCondition::VanishingR);
        }
        if (std::abs(dst.phi - kPi / 4.0) > eps_class) {
            return ConvertDecision::no(FailedCondition::MesPhiConstraint);
        }
        return ConvertDecision::yes(std::make_pair(dst.r, dst.phi));
    }
    return caseA(src, dst);
}

ConvertDecision convertible(const State& src, const State& dst) {
    if (std::holds_alternative<WParams>(src) && std::holds_alternative<WParams>(dst)) {
        bool ok = w_convertible(std::get<WParams>(src), std::get<WParams>(dst));
        return ok ? ConvertDecision::yes()
                  : ConvertDecision::no(FailedCondition::Inequality_i);
    }
    if (std::holds_alternative<GhzParams>(src) && std::holds_alternative<GhzParams>(dst)) {
        return ghz_convertible(std::get<GhzParams>(src), std::get<GhzParams>(dst));
    }
    return ConvertDecision::no(FailedCondition::CrossSloccClass);
}

}  // namespace locc
