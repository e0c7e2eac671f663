#include "distvar/bidisc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace distvar {

namespace {

constexpr double kNuTol = 1e-10;
constexpr double kBoundaryNu = 1.0 - 1e-10;

std::vector<cplx> circle_grid(const std::vector<double>& radii, std::size_t angles) {
    std::vector<cplx> out;
    for (double r : radii)
        for (std::size_t j = 0; j < angles; ++j)
            out.push_back(std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                            static_cast<double>(angles)));
    return out;
}

CertificateBundle flags(const ModelTriple& t, const SampleOptions& opt) {
    CertificateBundle b;
    const auto sweep = compatibility_grid();
    const auto nus = map_indexed(sweep.size(), opt.exec, [&](std::size_t k) {
        const auto [phi1, phi2] = bcl_pair(t, sweep[k]);
        return std::pair{numerical_radius(phi1, kNuTol), numerical_radius(phi2, kNuTol)};
    });
    for (const auto& [a, c] : nus) {
        b.max_nu_phi1 = std::max(b.max_nu_phi1, a);
        b.max_nu_phi2 = std::max(b.max_nu_phi2, c);
    }
    const double bound = 1.0 - opt.margin;
    b.compatible = b.max_nu_phi1 < bound && b.max_nu_phi2 < bound;
    b.evidence.push_back({"compat_phi1_max_nu", b.max_nu_phi1, bound, b.max_nu_phi1 < bound});
    b.evidence.push_back({"compat_phi2_max_nu", b.max_nu_phi2, bound, b.max_nu_phi2 < bound});

    const Matrix pp = t.p_perp();
    const Matrix a1 = pp * t.u();
    const Matrix b1 = t.u().adjoint() * t.p();
    const Matrix a2 = t.u().adjoint() * t.p();
    const Matrix b2 = pp * t.u();
    const auto pts = nonconstancy_grid();
    const auto vals = map_indexed(pts.size(), opt.exec, [&](std::size_t k) {
        return std::pair{numerical_radius(a1 + pts[k] * b1, kNuTol),
                         numerical_radius(a2 + pts[k] * b2, kNuTol)};
    });
    double lo1 = vals[0].first, hi1 = lo1, lo2 = vals[0].second, hi2 = lo2;
    for (const auto& [x, y] : vals) {
        lo1 = std::min(lo1, x);
        hi1 = std::max(hi1, x);
        lo2 = std::min(lo2, y);
        hi2 = std::max(hi2, y);
    }
    b.spread1 = hi1 - lo1;
    b.spread2 = hi2 - lo2;
    b.nonconstant = b.spread1 > opt.spread && b.spread2 > opt.spread;
    b.evidence.push_back({"nonconstant_spread1", b.spread1, opt.spread, b.spread1 > opt.spread});
    b.evidence.push_back({"nonconstant_spread2", b.spread2, opt.spread, b.spread2 > opt.spread});
    return b;
}

void finish(CertificateBundle& b, const std::vector<VarietyPoint>& pts) {
    b.open_points = 0;
    b.mixed_points = 0;
    for (const auto& p : pts) {
        if (p.region == Region::OpenPolydisc) ++b.open_points;
        if (p.region == Region::Mixed) ++b.mixed_points;
    }
    b.evidence.push_back({"mixed_points", static_cast<double>(b.mixed_points), 0.0,
                          b.mixed_points == 0});
    b.evidence.push_back({"open_points", static_cast<double>(b.open_points), 1.0,
                          b.open_points >= 1});
    if (b.mixed_points > 0) {
        b.verdict = Verdict::NotDistinguished;
    } else if (b.compatible || b.nonconstant) {
        b.verdict = b.open_points >= 1 ? Verdict::Distinguished : Verdict::Undetermined;
    } else if (std::max(b.max_nu_phi1, b.max_nu_phi2) >= kBoundaryNu) {
        b.verdict = Verdict::NotDistinguished;
    } else {
        b.verdict = Verdict::Undetermined;
    }
}

}  // namespace

std::string_view to_string(Region r) {
    switch (r) {
        case Region::OpenPolydisc: return "D";
        case Region::Torus: return "T";
        case Region::Exterior: return "E";
        case Region::Mixed: return "MIXED";
    }
    return "MIXED";
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Distinguished: return "DISTINGUISHED";
        case Verdict::NotDistinguished: return "NOT_DISTINGUISHED";
        case Verdict::Undetermined: return "UNDETERMINED";
    }
    return "UNDETERMINED";
}

Region classify_region(std::span<const cplx> coords, double eps_t) {
    bool in = true, on = true, out = true;
    for (const auto& w : coords) {
        const double m = std::abs(w);
        const bool i = m < 1.0 - eps_t;
        const bool t = std::abs(m - 1.0) <= eps_t;
        in = in && i;
        on = on && t;
        out = out && !i && !t;
    }
    if (in) return Region::OpenPolydisc;
    if (on) return Region::Torus;
    if (out) return Region::Exterior;
    return Region::Mixed;
}

bool point_less(const VarietyPoint& a, const VarietyPoint& b) {
    const std::size_t n = std::min(a.coords.size(), b.coords.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coords[i].real() != b.coords[i].real()) return a.coords[i].real() < b.coords[i].real();
        if (a.coords[i].imag() != b.coords[i].imag()) return a.coords[i].imag() < b.coords[i].imag();
    }
    return a.coords.size() < b.coords.size();
}

std::vector<cplx> GridSpec::params() const {
    std::vector<cplx> out;
    if (include_center) out.push_back(center);
    for (std::size_t k = 1; k <= radii; ++k) {
        const double r = radius * static_cast<double>(k) / static_cast<double>(radii);
        for (std::size_t j = 0; j < angles; ++j)
            out.push_back(center + std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                                     static_cast<double>(angles)));
    }
    return out;
}

std::vector<VarietyPoint> fiber(const ModelTriple& t, cplx z, std::uint64_t seed, double tol,
                                double eps_t) {
    const auto [phi1, phi2] = bcl_pair(t, z);
    const std::vector<Matrix> fam{phi1, phi2};
    const JointSpectrum js = joint_eigenvalues(fam, seed, tol);
    std::vector<VarietyPoint> out;
    out.reserve(js.points.size());
    for (const auto& pt : js.points)
        out.push_back({z, pt, classify_region(pt, eps_t)});
    std::sort(out.begin(), out.end(), point_less);
    return out;
}

Membership is_member(const ModelTriple& t, cplx z1, cplx z2, double tol) {
    const auto [phi1, phi2] = bcl_pair(t, z1 * z2);
    const Matrix id = identity(t.dim());
    const std::vector<Matrix> fam{phi1 - z1 * id, phi2 - z2 * id};
    const double d = common_kernel_defect(fam);
    return {d < tol, d};
}

SymmetryReport symmetry_check(const ModelTriple& t, std::span<const VarietyPoint> pts,
                              double tol) {
    SymmetryReport r;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const auto& c = pts[k].coords;
        if (c.size() != 2 || std::abs(c[0]) <= kZeroCoord || std::abs(c[1]) <= kZeroCoord) {
            ++r.skipped;
            continue;
        }
        const Membership m = is_member(t, 1.0 / std::conj(c[0]), 1.0 / std::conj(c[1]), tol);
        ++r.checked;
        r.max_defect = std::max(r.max_defect, m.defect);
        if (!m.member) {
            r.failures.push_back(k);
            r.ok = false;
        }
    }
    return r;
}

std::vector<VarietyPoint> sample_points(const ModelTriple& t, const GridSpec& grid,
                                        std::uint64_t seed, double tol, double eps_t,
                                        Exec exec) {
    const auto zs = grid.params();
    const auto fibers = map_indexed(zs.size(), exec, [&](std::size_t k) {
        return fiber(t, zs[k], derive_seed(seed, k), tol, eps_t);
    });
    std::vector<VarietyPoint> out;
    for (const auto& f : fibers) out.insert(out.end(), f.begin(), f.end());
    return out;
}

CertificateBundle certify(const ModelTriple& t, std::uint64_t seed, const SampleOptions& opt) {
    CertificateBundle b = flags(t, opt);
    finish(b, sample_points(t, GridSpec{}, seed, opt.tol, opt.eps_t, opt.exec));
    return b;
}

VarietySample sample(const ModelTriple& t, const GridSpec& grid, std::uint64_t seed,
                     const SampleOptions& opt) {
    VarietySample s;
    s.grid = grid;
    s.points = sample_points(t, grid, seed, opt.tol, opt.eps_t, opt.exec);
    CertificateBundle b = flags(t, opt);
    finish(b, s.points);
    s.verdict = b.verdict;
    s.evidence = std::move(b.evidence);
    return s;
}

std::vector<cplx> compatibility_grid() {
    std::vector<double> radii;
    for (int k = 1; k <= 8; ++k) radii.push_back(0.999 * k / 8.0);
    return circle_grid(radii, 25);
}

std::vector<cplx> nonconstancy_grid() {
    std::vector<cplx> out{0.0};
    const auto ring = circle_grid({0.3, 0.6, 0.9}, 5);
    out.insert(out.end(), ring.begin(), ring.end());
    return out;
}

}  // namespace distvar
