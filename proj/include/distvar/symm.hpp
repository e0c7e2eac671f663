#pragma once

// W_F = {(s, p) : det(F* + pF − sI) = 0} for F = PU + U*P^⊥, classified
// against the symmetrized bidisc through the roots of t² − st + p.

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "distvar/bidisc.hpp"

namespace distvar {

enum class GammaRegion { OpenG, DistBoundary, TopoBoundary, Outside };
std::string_view to_string(GammaRegion r);  // "G", "bGamma", "dGamma", "OUTSIDE"

struct SymmPoint {
    cplx s;
    cplx p;
    GammaRegion region = GammaRegion::Outside;
};

/// Roots of t² − st + p; the larger-modulus root comes from the branch of
/// the square root aligned with s, the other from p / t1.
std::pair<cplx, cplx> quadratic_roots(cplx s, cplx p);

GammaRegion classify_gamma(cplx s, cplx p, double eps = kEpsTorus);

/// Eigenvalues s of F* + pF, sorted by (Re, Im).
std::vector<cplx> wf_fiber(const Matrix& f, cplx p);

Membership is_member_symm(const Matrix& f, cplx s, cplx p, double tol = 1e-6);

struct SymmGrid {
    double radius = 1.0;
    std::size_t radii = 10;
    std::size_t angles = 24;
    bool include_center = true;

    std::vector<cplx> params() const;
};

struct SymmSample {
    std::vector<SymmPoint> points;
    Verdict verdict = Verdict::Undetermined;
    std::size_t open_points = 0;
    std::size_t topo_points = 0;
};

/// NOT_DISTINGUISHED on any point in ∂Γ \ bΓ; DISTINGUISHED when there is
/// none and at least one point lies in G.
SymmSample sample_symm(const ModelTriple& t, const SymmGrid& grid = {},
                       double eps = kEpsTorus, Exec exec = Exec::parallel);

/// (z1, z2) ↦ (z1 + z2, z1 z2).
std::vector<SymmPoint> pi_project(std::span<const VarietyPoint> pts, double eps = kEpsTorus);

struct NuCertificate {
    double nu = 0.0;
    bool strict = false;  // ν(F) < 1 − margin
};

NuCertificate nu_certificate(const ModelTriple& t, double margin = kCompatMargin);

enum class Representable { No, Undetermined };
std::string_view to_string(Representable r);

/// Necessary condition for a = PU + U*P^⊥ with 2×2 P, U: the eigenvalues
/// have equal moduli.
Representable representable_2x2(const Matrix& a, double tol = 1e-8);

}  // namespace distvar
