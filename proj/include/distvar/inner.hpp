#pragma once

// Rational inner functions Ψ(z) = A + zB(I − zD)^{-1}C from unitary
// colligations: evaluation, fibers of W_Ψ, ν sweeps and the defining
// polynomial ξ_Ψ.

#include <cstdint>
#include <optional>
#include <vector>

#include "distvar/bidisc.hpp"
#include "distvar/model.hpp"

namespace distvar {

/// Coefficient grid c[i][j] of z1^i z2^j.
struct BivariatePoly {
    std::vector<std::vector<cplx>> coeffs;

    std::size_t deg1() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    std::size_t deg2() const { return coeffs.empty() ? 0 : coeffs.front().size() - 1; }
    cplx eval(cplx z1, cplx z2) const;
    /// Σ|c_ij||z1|^i|z2|^j, the natural scale for evaluation residuals.
    double abs_eval(cplx z1, cplx z2) const;
};

/// Throws SingularResolvent when I − zD is singular (only possible for |z| ≥ 1).
Matrix transfer_eval(const Colligation& c, cplx z);

class RationalInnerFn {
public:
    /// Strips the part of H on which D is unitary (it reduces the
    /// colligation and does not affect Ψ), then checks innerness at 16
    /// circle points. Throws NotUnitary / NotInner.
    static RationalInnerFn create(const Colligation& c, double tol = 1e-8);

    /// Ψ_{P,U} of a triple, via its colligation.
    static RationalInnerFn from_triple(const ModelTriple& t, double tol = 1e-8);

    const Colligation& colligation() const { return coll_; }
    std::size_t dim_e() const { return coll_.dim_e; }
    std::size_t dim_h() const { return coll_.dim_h; }

    Matrix eval(cplx z) const { return transfer_eval(coll_, z); }

    /// q(z) = det(I − zD) with common factors of F = qΨ removed, ascending,
    /// normalized to q(0) = 1.
    const std::vector<cplx>& q() const { return q_; }
    /// Matrix coefficients of F(z) = q(z)Ψ(z), ascending.
    const std::vector<Matrix>& f() const { return f_; }
    /// Roots of q (with multiplicity), all outside the closed disc.
    const std::vector<cplx>& poles() const { return poles_; }

private:
    Colligation coll_;
    std::vector<cplx> q_;
    std::vector<Matrix> f_;
    std::vector<cplx> poles_;
};

/// Eigenvalues z2 of Ψ(z1), sorted by (Re, Im).
std::vector<cplx> psi_fiber(const RationalInnerFn& psi, cplx z1);

/// Smallest singular value of Ψ(z1) − z2 I.
Membership is_member_psi(const RationalInnerFn& psi, cplx z1, cplx z2, double tol = 1e-6);

struct NuSweep {
    double max_nu = 0.0;
    cplx argmax = 0.0;
    bool certified = false;  // max_nu < 1 − margin
};

NuSweep nu_sweep(const RationalInnerFn& psi, const GridSpec& grid,
                 double margin = kCompatMargin, Exec exec = Exec::parallel);

/// det(F(z1) − z2 q(z1) I) with the line factors at the roots of q removed,
/// normalized so the lexicographically largest (i, j) coefficient is 1.
/// Throws DeflationAmbiguous when a divisibility residual lands in
/// (tol, 100·tol].
BivariatePoly xi_extract(const RationalInnerFn& psi, double tol = 1e-8,
                         Exec exec = Exec::parallel);

struct SymmetryResult {
    bool ok = false;
    std::optional<cplx> c;
    double defect = 0.0;
};

/// c[i][j] = c·conj(c[m1−i][m2−j]) for a unimodular c.
SymmetryResult essential_symmetry_check(const BivariatePoly& xi, double tol = 1e-8);

}  // namespace distvar
