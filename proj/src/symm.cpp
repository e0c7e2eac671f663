#include "distvar/symm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "distvar/errors.hpp"

namespace distvar {

namespace {

bool cplx_less(cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
}

}  // namespace

std::string_view to_string(GammaRegion r) {
    switch (r) {
        case GammaRegion::OpenG: return "G";
        case GammaRegion::DistBoundary: return "bGamma";
        case GammaRegion::TopoBoundary: return "dGamma";
        case GammaRegion::Outside: return "OUTSIDE";
    }
    return "OUTSIDE";
}

std::string_view to_string(Representable r) {
    return r == Representable::No ? "NO" : "UNDETERMINED";
}

std::pair<cplx, cplx> quadratic_roots(cplx s, cplx p) {
    cplx sq = std::sqrt(s * s - 4.0 * p);
    if ((std::conj(s) * sq).real() < 0.0) sq = -sq;
    const cplx t1 = 0.5 * (s + sq);
    const cplx t2 = t1 == 0.0 ? cplx(0.0) : p / t1;
    return {t1, t2};
}

GammaRegion classify_gamma(cplx s, cplx p, double eps) {
    const auto [t1, t2] = quadratic_roots(s, p);
    const double m1 = std::abs(t1), m2 = std::abs(t2);
    if (m1 < 1.0 - eps && m2 < 1.0 - eps) return GammaRegion::OpenG;
    const bool on1 = std::abs(m1 - 1.0) <= eps, on2 = std::abs(m2 - 1.0) <= eps;
    if (on1 && on2) return GammaRegion::DistBoundary;
    if (m1 <= 1.0 + eps && m2 <= 1.0 + eps && (on1 || on2)) return GammaRegion::TopoBoundary;
    return GammaRegion::Outside;
}

std::vector<cplx> wf_fiber(const Matrix& f, cplx p) {
    require_square(f, "F");
    auto ev = eigenvalues(f.adjoint() + p * f);
    std::sort(ev.begin(), ev.end(), cplx_less);
    return ev;
}

Membership is_member_symm(const Matrix& f, cplx s, cplx p, double tol) {
    const Matrix m = f.adjoint() + p * f - s * Matrix::Identity(f.rows(), f.cols());
    const std::vector<Matrix> fam{m};
    const double d = common_kernel_defect(fam);
    return {d < tol, d};
}

std::vector<cplx> SymmGrid::params() const {
    std::vector<cplx> out;
    if (include_center) out.push_back(0.0);
    for (std::size_t k = 1; k <= radii; ++k) {
        const double r = radius * static_cast<double>(k) / static_cast<double>(radii);
        for (std::size_t j = 0; j < angles; ++j)
            out.push_back(std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                            static_cast<double>(angles)));
    }
    return out;
}

SymmSample sample_symm(const ModelTriple& t, const SymmGrid& grid, double eps, Exec exec) {
    const Matrix f = fundamental_operator(t);
    const auto ps = grid.params();
    const auto fibers = map_indexed(ps.size(), exec, [&](std::size_t k) {
        std::vector<SymmPoint> pts;
        for (const cplx s : wf_fiber(f, ps[k])) pts.push_back({s, ps[k], classify_gamma(s, ps[k], eps)});
        return pts;
    });
    SymmSample out;
    for (const auto& fb : fibers) out.points.insert(out.points.end(), fb.begin(), fb.end());
    for (const auto& pt : out.points) {
        if (pt.region == GammaRegion::OpenG) ++out.open_points;
        if (pt.region == GammaRegion::TopoBoundary) ++out.topo_points;
    }
    if (out.topo_points > 0) out.verdict = Verdict::NotDistinguished;
    else if (out.open_points > 0) out.verdict = Verdict::Distinguished;
    else out.verdict = Verdict::Undetermined;
    return out;
}

std::vector<SymmPoint> pi_project(std::span<const VarietyPoint> pts, double eps) {
    std::vector<SymmPoint> out;
    out.reserve(pts.size());
    for (const auto& v : pts) {
        if (v.coords.size() != 2)
            throw Error(ErrorCode::DimensionMismatch, "pi_project needs two coordinates");
        const cplx s = v.coords[0] + v.coords[1];
        const cplx p = v.coords[0] * v.coords[1];
        out.push_back({s, p, classify_gamma(s, p, eps)});
    }
    return out;
}

NuCertificate nu_certificate(const ModelTriple& t, double margin) {
    NuCertificate c;
    c.nu = numerical_radius(fundamental_operator(t), 1e-10);
    c.strict = c.nu < 1.0 - margin;
    return c;
}

Representable representable_2x2(const Matrix& a, double tol) {
    require_square(a, "matrix");
    if (a.rows() != 2) throw Error(ErrorCode::DimensionMismatch, "representable_2x2 needs a 2x2 matrix");
    const auto ev = eigenvalues(a);
    if (std::abs(std::abs(ev[0]) - std::abs(ev[1])) > tol) return Representable::No;
    return Representable::Undetermined;
}

}  // namespace distvar
