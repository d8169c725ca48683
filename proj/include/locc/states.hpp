#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace locc {

// Tolerance for all degenerate-case decisions (g_i = 0, r = 1, z = 1 or i,
// Re(z^2) = 0, Im(z^2) = 0). Inputs within eps_class of a case boundary are
// snapped onto the degenerate case.
inline constexpr double eps_class = 1e-10;
inline constexpr double eps_norm = 1e-12;

enum class ErrorCode {
    NotNormalized,
    Biseparable,
    OutOfRange,
    DimensionMismatch,
    WrongClass,
    CubatureNotConverged,
    Inconsistent,
    NonPhysicalRoot,
    BitRequired,
    NoSecondCandidate,
    PreconditionViolated,
    DimensionTooLarge,
    NotConverged,
    UnsupportedCase,
};

std::string to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Sorted (non-increasing) eigenvalue vector of a single-party reduced state
// of a bipartite pure state.
class SchmidtVector {
public:
    // Sorts the entries; rejects vectors that are not a probability
    // distribution or have d < 2.
    explicit SchmidtVector(std::vector<double> lambda);

    const std::vector<double>& lambda() const { return lambda_; }
    int dim() const { return static_cast<int>(lambda_.size()); }
    double operator[](int i) const { return lambda_[static_cast<size_t>(i)]; }

private:
    std::vector<double> lambda_;
};

// Simplex coordinates (x0, x1, x2, x3) of a W-class three-qubit state,
// x1, x2, x3 > 0, x0 >= 0, sum = 1.
struct WParams {
    double x0, x1, x2, x3;

    std::array<double, 3> xs() const { return {x1, x2, x3}; }
    bool isMes() const { return x0 <= eps_class; }
};

// Throws on invalid input; zero entries in x1..x3 are Biseparable.
WParams validate_w(double x0, double x1, double x2, double x3);

// Canonical GHZ-class coordinates: g_i in [0, 1/2), z = r e^{i phi} with
// r in (0, 1], phi in [0, pi). Canonical representatives have phi in
// [0, pi/2] and phi = 0 whenever some g_i vanishes.
struct GhzParams {
    double g1, g2, g3;
    double r;
    double phi;

    std::array<double, 3> gs() const { return {g1, g2, g3}; }
    double g(int i) const { return i == 0 ? g1 : (i == 1 ? g2 : g3); }

    std::complex<double> z() const {
        return std::polar(r, phi);
    }
    // Re(z^2) = r^2 cos(2 phi)
    double reZ2() const { return r * r * std::cos(2.0 * phi); }
    // Im(z^2) = r^2 sin(2 phi)
    double imZ2() const { return r * r * std::sin(2.0 * phi); }
    double modZ4() const { return r * r * r * r; }

    double G() const { return g1 * g2 * g3; }
};

GhzParams validate_ghz(double g1, double g2, double g3, double r, double phi);

enum class GhzTag {
    GenericNonMes,
    Mes,
    VanishingOne,
    VanishingTwo,
    VanishingThree,
    GhzState,
};

std::string to_string(GhzTag tag);

struct GhzClass {
    GhzTag tag;
    bool rIsOne;
    // vanishes[i] == true iff g_{i+1} is (snapped to) zero.
    std::array<bool, 3> vanishes;

    int zeroCount() const {
        return (vanishes[0] ? 1 : 0) + (vanishes[1] ? 1 : 0) + (vanishes[2] ? 1 : 0);
    }
    bool isMes() const { return tag == GhzTag::Mes || tag == GhzTag::GhzState; }
};

// Total and deterministic; boundary decisions use eps_class.
GhzClass classify_ghz(const GhzParams& p);

// Enforces |z| <= 1 (z <-> 1/z), folds phi into [0, pi/2] (conjugation),
// sets phi = 0 when some g_i vanishes, and snaps eps_class boundaries.
// Idempotent; preserves every downstream measure.
GhzParams canonicalize_ghz(const GhzParams& p);

// Accessible/source manifold dimensions per case (MES: (4,0); generic: (3,3)).
struct VolumeDimension {
    int accessibleDim;
    int sourceDim;

    bool operator==(const VolumeDimension&) const = default;
};

VolumeDimension ghz_dims(const GhzClass& c);

}  // namespace locc
