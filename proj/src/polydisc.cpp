#include "distvar/polydisc.hpp"

#include <algorithm>
#include <cmath>

#include "distvar/errors.hpp"

namespace distvar {

namespace {

constexpr double kNuTol = 1e-10;
constexpr double kDistinct = 1e-7;

std::size_t distinct_count(const std::vector<VarietyPoint>& pts) {
    std::vector<const VarietyPoint*> reps;
    for (const auto& p : pts) {
        const bool seen = std::any_of(reps.begin(), reps.end(), [&](const VarietyPoint* r) {
            double d = 0.0;
            for (std::size_t i = 0; i < p.coords.size(); ++i)
                d = std::max(d, std::abs(p.coords[i] - r->coords[i]));
            return d <= kDistinct;
        });
        if (!seen) reps.push_back(&p);
    }
    return reps.size();
}

}  // namespace

std::vector<VarietyPoint> tuple_fiber(const ModelTuple& t, cplx z, std::uint64_t seed,
                                      double tol, double eps_t) {
    const auto fam = tuple_pencils(t, z);
    const JointSpectrum js = joint_eigenvalues(fam, seed, tol);
    std::vector<VarietyPoint> out;
    for (const auto& pt : js.points) out.push_back({z, pt, classify_region(pt, eps_t)});
    std::sort(out.begin(), out.end(), point_less);
    return out;
}

Membership is_member_poly(const ModelTuple& t, std::span<const cplx> coords, double tol) {
    if (coords.size() != t.d())
        throw Error(ErrorCode::DimensionMismatch, "point has the wrong number of coordinates");
    cplx z = 1.0;
    for (const cplx c : coords) z *= c;
    auto fam = tuple_pencils(t, z);
    for (std::size_t i = 0; i < fam.size(); ++i) fam[i] -= coords[i] * identity(t.dim());
    const double d = common_kernel_defect(fam);
    return {d < tol, d};
}

SymmetryReport symmetry_check_poly(const ModelTuple& t, std::span<const VarietyPoint> pts,
                                   double tol) {
    SymmetryReport r;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const auto& c = pts[k].coords;
        if (std::any_of(c.begin(), c.end(), [](cplx w) { return std::abs(w) <= kZeroCoord; })) {
            ++r.skipped;
            continue;
        }
        std::vector<cplx> refl;
        for (const cplx w : c) refl.push_back(1.0 / std::conj(w));
        const Membership m = is_member_poly(t, refl, tol);
        ++r.checked;
        r.max_defect = std::max(r.max_defect, m.defect);
        if (!m.member) {
            r.failures.push_back(k);
            r.ok = false;
        }
    }
    return r;
}

std::vector<VarietyPoint> sample_poly(const ModelTuple& t, const GridSpec& grid,
                                      std::uint64_t seed, double tol, double eps_t, Exec exec) {
    const auto zs = grid.params();
    const auto fibers = map_indexed(zs.size(), exec, [&](std::size_t k) {
        return tuple_fiber(t, zs[k], derive_seed(seed, k), tol, eps_t);
    });
    std::vector<VarietyPoint> out;
    for (const auto& f : fibers) out.insert(out.end(), f.begin(), f.end());
    return out;
}

TupleCertificate certify_poly(const ModelTuple& t, const GridSpec& grid, std::uint64_t seed,
                              const SampleOptions& opt) {
    TupleCertificate c;
    c.pure = t.pure();
    c.evidence.push_back({"purity_defect", t.purity_defect(), 1e-10, c.pure});

    const auto sweep = compatibility_grid();
    const auto nus = map_indexed(sweep.size(), opt.exec, [&](std::size_t k) {
        std::vector<double> row;
        for (const auto& phi : tuple_pencils(t, sweep[k])) row.push_back(numerical_radius(phi, kNuTol));
        return row;
    });
    c.max_nu.assign(t.d(), 0.0);
    for (const auto& row : nus)
        for (std::size_t i = 0; i < t.d(); ++i) c.max_nu[i] = std::max(c.max_nu[i], row[i]);
    const double bound = 1.0 - opt.margin;
    c.compatible = true;
    for (std::size_t i = 0; i < t.d(); ++i) {
        const bool pass = c.max_nu[i] < bound;
        c.compatible = c.compatible && pass;
        c.evidence.push_back({"compat_max_nu[" + std::to_string(i) + "]", c.max_nu[i], bound, pass});
    }

    const auto pts = nonconstancy_grid();
    c.nonconstant = true;
    for (std::size_t i = 0; i < t.d(); ++i) {
        const Matrix& p = t.ps()[i];
        const Matrix& u = t.us()[i];
        const Matrix a = (identity(t.dim()) - p) * u;
        const Matrix b = u.adjoint() * p;
        const auto vals = map_indexed(pts.size(), opt.exec, [&](std::size_t k) {
            return numerical_radius(a + pts[k] * b, kNuTol);
        });
        const auto [lo, hi] = std::minmax_element(vals.begin(), vals.end());
        const double spread = *hi - *lo;
        c.spreads.push_back(spread);
        const bool pass = spread > opt.spread;
        c.nonconstant = c.nonconstant && pass;
        c.evidence.push_back({"nonconstant_spread[" + std::to_string(i) + "]", spread, opt.spread, pass});
    }

    const auto zs = grid.params();
    const auto fibers = map_indexed(zs.size(), opt.exec, [&](std::size_t k) {
        return tuple_fiber(t, zs[k], derive_seed(seed, k), opt.tol, opt.eps_t);
    });
    for (const auto& f : fibers) {
        c.max_fiber_size = std::max(c.max_fiber_size, f.size());
        c.max_distinct = std::max(c.max_distinct, distinct_count(f));
        for (const auto& p : f) {
            if (p.region == Region::OpenPolydisc) ++c.open_points;
            if (p.region == Region::Mixed) ++c.mixed_points;
        }
        c.points.insert(c.points.end(), f.begin(), f.end());
    }
    c.evidence.push_back({"fiber_size", static_cast<double>(c.max_fiber_size),
                          static_cast<double>(t.dim()), c.max_fiber_size <= t.dim()});
    c.evidence.push_back({"mixed_points", static_cast<double>(c.mixed_points), 0.0, c.mixed_points == 0});

    double worst = 0.0;
    for (double v : c.max_nu) worst = std::max(worst, v);
    if (!c.pure) c.verdict = Verdict::Undetermined;
    else if (c.mixed_points > 0) c.verdict = Verdict::NotDistinguished;
    else if (c.compatible || c.nonconstant)
        c.verdict = c.open_points > 0 ? Verdict::Distinguished : Verdict::Undetermined;
    else if (worst >= 1.0 - 1e-10) c.verdict = Verdict::NotDistinguished;
    else c.verdict = Verdict::Undetermined;
    return c;
}

}  // namespace distvar
