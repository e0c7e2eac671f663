#pragma once

// The pencil description of W_{P,U}: fibers over z = z1·z2, grid sampling,
// membership, reflection symmetry, and distinguishedness certificates.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "distvar/model.hpp"

namespace distvar {

enum class Region { OpenPolydisc, Torus, Exterior, Mixed };
enum class Verdict { Distinguished, NotDistinguished, Undetermined };

std::string_view to_string(Region r);  // "D", "T", "E", "MIXED"
std::string_view to_string(Verdict v);

inline constexpr double kEpsTorus = 1e-6;
inline constexpr double kCompatMargin = 1e-4;
inline constexpr double kSpreadTol = 1e-6;
/// Coordinates at or below this modulus count as zero in reflection checks.
inline constexpr double kZeroCoord = 1e-8;

/// Region of a point of C^d from the moduli of its coordinates.
Region classify_region(std::span<const cplx> coords, double eps_t = kEpsTorus);

struct VarietyPoint {
    cplx fiber_param;
    std::vector<cplx> coords;
    Region region = Region::Mixed;
};

/// Lexicographic on (Re, Im) of the coordinates.
bool point_less(const VarietyPoint& a, const VarietyPoint& b);

struct GridSpec {
    cplx center = 0.0;
    double radius = 0.95;
    std::size_t radii = 8;
    std::size_t angles = 24;
    bool include_center = true;

    /// center + radius·(k/radii)·e^{2πij/angles}, k = 1..radii.
    std::vector<cplx> params() const;
};

struct CertificateRecord {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct CertificateBundle {
    bool compatible = false;
    bool nonconstant = false;
    double max_nu_phi1 = 0.0;
    double max_nu_phi2 = 0.0;
    double spread1 = 0.0;
    double spread2 = 0.0;
    std::size_t open_points = 0;
    std::size_t mixed_points = 0;
    Verdict verdict = Verdict::Undetermined;
    std::vector<CertificateRecord> evidence;
};

struct VarietySample {
    std::vector<VarietyPoint> points;
    GridSpec grid;
    Verdict verdict = Verdict::Undetermined;
    std::vector<CertificateRecord> evidence;
};

struct SampleOptions {
    double tol = 1e-8;           // joint triangularization
    double eps_t = kEpsTorus;    // region band
    double margin = kCompatMargin;
    double spread = kSpreadTol;
    Exec exec = Exec::parallel;
};

std::vector<VarietyPoint> fiber(const ModelTriple& t, cplx z, std::uint64_t seed,
                                double tol = 1e-8, double eps_t = kEpsTorus);

struct Membership {
    bool member = false;
    double defect = 0.0;
};

Membership is_member(const ModelTriple& t, cplx z1, cplx z2, double tol = 1e-6);

struct SymmetryReport {
    std::size_t checked = 0;
    std::size_t skipped = 0;  // points with a zero coordinate
    double max_defect = 0.0;
    std::vector<std::size_t> failures;
    bool ok = true;
};

/// Membership of (1/conj z1, 1/conj z2) for every point whose coordinates
/// exceed kZeroCoord in modulus.
SymmetryReport symmetry_check(const ModelTriple& t, std::span<const VarietyPoint> pts,
                              double tol = 1e-6);

/// Compatibility sweep, non-constancy shortcut and a verdict from the
/// default-grid sample.
CertificateBundle certify(const ModelTriple& t, std::uint64_t seed = 0,
                          const SampleOptions& opt = {});

VarietySample sample(const ModelTriple& t, const GridSpec& grid, std::uint64_t seed = 0,
                     const SampleOptions& opt = {});

/// Fibers only, no certificates; the serial path is the reference.
std::vector<VarietyPoint> sample_points(const ModelTriple& t, const GridSpec& grid,
                                        std::uint64_t seed, double tol, double eps_t,
                                        Exec exec);

/// Points of the compatibility sweep: 8 radii 0.999·k/8 × 25 angles.
std::vector<cplx> compatibility_grid();

/// 0 plus radii {0.3, 0.6, 0.9} × 5 angles.
std::vector<cplx> nonconstancy_grid();

}  // namespace distvar
