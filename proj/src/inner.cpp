#include "distvar/inner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "distvar/errors.hpp"

namespace distvar {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

constexpr double kUnitaryPartTol = 1e-8;
constexpr double kCommonFactorTol = 1e-7;
constexpr double kPoleMatch = 1e-6;

cplx root_of_unity(std::size_t k, std::size_t n) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) /
                               static_cast<double>(n));
}

// Inverse DFT: coefficients of the degree < n polynomial through the
// samples at the n-th roots of unity.
template <class T>
std::vector<T> interpolate(const std::vector<T>& samples) {
    const std::size_t n = samples.size();
    std::vector<T> out;
    for (std::size_t j = 0; j < n; ++j) {
        T acc = samples[0] * cplx(0.0);
        for (std::size_t k = 0; k < n; ++k)
            acc = acc + samples[k] * std::conj(root_of_unity((j * k) % n, n));
        out.push_back(acc * cplx(1.0 / static_cast<double>(n)));
    }
    return out;
}

// Quotient of c(z) by (1 − z/α), |α| > 1, computed from the low end.
template <class T>
std::vector<T> divide_by_factor(const std::vector<T>& c, cplx alpha) {
    std::vector<T> q;
    if (c.size() <= 1) return c;
    q.push_back(c[0]);
    for (std::size_t i = 1; i + 1 < c.size(); ++i) q.push_back(c[i] + q.back() * (1.0 / alpha));
    return q;
}

template <class T>
T horner(const std::vector<T>& c, cplx z) {
    T acc = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * z + c[i];
    return acc;
}

double mat_norm(const Matrix& m) { return m.norm(); }

template <class T>
double relative_value(const std::vector<T>& c, cplx z) {
    double scale = 0.0, zp = 1.0;
    for (const auto& x : c) {
        scale += mat_norm(x) * zp;
        zp *= std::abs(z);
    }
    if (scale == 0.0) return 0.0;
    return mat_norm(horner(c, z)) / scale;
}

// Removes the subspace of H on which D acts unitarily. Vectors there are
// annihilated by B and C*, so Ψ does not see them.
Colligation strip_unitary_part(const Colligation& c) {
    const auto h = idx(c.dim_h);
    if (h == 0) return c;
    Matrix stack(2 * h * h, h);
    Matrix dk = Matrix::Identity(h, h);
    const Matrix id = Matrix::Identity(h, h);
    for (Eigen::Index k = 0; k < h; ++k) {
        dk = c.d * dk;
        stack.middleRows(2 * k * h, h) = id - dk.adjoint() * dk;
        stack.middleRows(2 * k * h + h, h) = id - dk * dk.adjoint();
    }
    Eigen::JacobiSVD<Matrix> svd(stack, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    Eigen::Index keep = 0;
    while (keep < h && sv(keep) > kUnitaryPartTol) ++keep;
    if (keep == h) return c;
    const Matrix vc = svd.matrixV().leftCols(keep);
    Colligation r;
    r.dim_e = c.dim_e;
    r.dim_h = static_cast<std::size_t>(keep);
    r.a = c.a;
    r.b = c.b * vc;
    r.c = vc.adjoint() * c.c;
    r.d = vc.adjoint() * c.d * vc;
    return r;
}

void trim_tail(std::vector<Matrix>& f) {
    double mx = 0.0;
    for (const auto& m : f) mx = std::max(mx, m.norm());
    while (f.size() > 1 && f.back().norm() <= 1e-13 * mx) f.pop_back();
}

}  // namespace

cplx BivariatePoly::eval(cplx z1, cplx z2) const {
    cplx acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        cplx row = 0.0;
        for (std::size_t j = coeffs[i].size(); j-- > 0;) row = row * z2 + coeffs[i][j];
        acc = acc * z1 + row;
    }
    return acc;
}

double BivariatePoly::abs_eval(cplx z1, cplx z2) const {
    double acc = 0.0;
    const double a1 = std::abs(z1), a2 = std::abs(z2);
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        double row = 0.0;
        for (std::size_t j = coeffs[i].size(); j-- > 0;) row = row * a2 + std::abs(coeffs[i][j]);
        acc = acc * a1 + row;
    }
    return acc;
}

Matrix transfer_eval(const Colligation& c, cplx z) {
    if (c.dim_h == 0) return c.a;
    const auto h = idx(c.dim_h);
    const Matrix m = Matrix::Identity(h, h) - z * c.d;
    Eigen::FullPivLU<Matrix> lu(m);
    if (!lu.isInvertible())
        throw Error(ErrorCode::SingularResolvent, "I - zD is singular");
    return c.a + z * c.b * lu.solve(c.c);
}

RationalInnerFn RationalInnerFn::create(const Colligation& c, double tol) {
    // Shape and unitarity checks come with the triple constructor.
    (void)triple_from_colligation(c, std::max(tol, 1e-9));

    RationalInnerFn r;
    r.coll_ = strip_unitary_part(c);
    const std::size_t h = r.coll_.dim_h;
    const std::size_t e = r.coll_.dim_e;

    for (std::size_t k = 0; k < 16; ++k) {
        const cplx zeta = std::polar(1.0, std::numbers::pi * (2.0 * static_cast<double>(k) + 0.5) / 16.0);
        const Matrix v = transfer_eval(r.coll_, zeta);
        const double d = (v.adjoint() * v - identity(e)).norm();
        if (!(d <= tol)) throw Error(ErrorCode::NotInner, "Psi is not unitary on the circle");
    }

    const std::size_t n = h + 1;
    std::vector<cplx> qs;
    std::vector<Matrix> fs;
    for (std::size_t k = 0; k < n; ++k) {
        const cplx z = root_of_unity(k, n);
        const cplx qz = h == 0 ? cplx(1.0)
                               : (Matrix::Identity(idx(h), idx(h)) - z * r.coll_.d).determinant();
        qs.push_back(qz);
        fs.push_back(qz * transfer_eval(r.coll_, z));
    }
    r.q_ = interpolate(qs);
    r.f_ = interpolate(fs);

    std::vector<cplx> poles;
    if (h > 0) {
        for (const cplx mu : eigenvalues(r.coll_.d))
            if (std::abs(mu) > 1e-12) poles.push_back(1.0 / mu);
    }
    r.q_.resize(poles.size() + 1);

    // Factors of q shared by every entry of F are not poles of Ψ.
    for (const cplx alpha : poles) {
        if (relative_value(r.f_, alpha) <= kCommonFactorTol) {
            r.f_ = divide_by_factor(r.f_, alpha);
            r.q_ = divide_by_factor(r.q_, alpha);
        } else {
            r.poles_.push_back(alpha);
        }
    }
    trim_tail(r.f_);
    return r;
}

RationalInnerFn RationalInnerFn::from_triple(const ModelTriple& t, double tol) {
    return create(colligation_from_triple(t), tol);
}

std::vector<cplx> psi_fiber(const RationalInnerFn& psi, cplx z1) {
    auto ev = eigenvalues(psi.eval(z1));
    std::sort(ev.begin(), ev.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return ev;
}

Membership is_member_psi(const RationalInnerFn& psi, cplx z1, cplx z2, double tol) {
    const Matrix m = psi.eval(z1) - z2 * identity(psi.dim_e());
    const std::vector<Matrix> fam{m};
    const double d = common_kernel_defect(fam);
    return {d < tol, d};
}

NuSweep nu_sweep(const RationalInnerFn& psi, const GridSpec& grid, double margin, Exec exec) {
    const auto zs = grid.params();
    if (zs.empty()) throw Error(ErrorCode::InvalidInput, "empty grid");
    auto nu_at = [&](cplx z) { return numerical_radius(psi.eval(z), 1e-10); };
    const auto vals = map_indexed(zs.size(), exec, [&](std::size_t k) { return nu_at(zs[k]); });

    NuSweep out;
    const auto it = std::max_element(vals.begin(), vals.end());
    out.max_nu = *it;
    out.argmax = zs[static_cast<std::size_t>(it - vals.begin())];

    // Compass search around the grid maximum, kept inside the grid disc.
    const double spacing = grid.radii > 0 ? grid.radius / static_cast<double>(grid.radii) : 0.0;
    double step = 0.5 * spacing;
    for (int iter = 0; iter < 200 && step > 1e-6; ++iter) {
        bool moved = false;
        for (int dir = 0; dir < 8; ++dir) {
            cplx cand = out.argmax + std::polar(step, std::numbers::pi * dir / 4.0);
            if (std::abs(cand - grid.center) > grid.radius) {
                const cplx off = cand - grid.center;
                cand = grid.center + off * (grid.radius / std::abs(off));
            }
            const double v = nu_at(cand);
            if (v > out.max_nu) {
                out.max_nu = v;
                out.argmax = cand;
                moved = true;
            }
        }
        if (!moved) step *= 0.5;
    }
    out.certified = out.max_nu < 1.0 - margin;
    return out;
}

BivariatePoly xi_extract(const RationalInnerFn& psi, double tol, Exec exec) {
    const std::size_t e = psi.dim_e();
    const std::size_t degq = psi.q().size() - 1;
    const std::size_t degf = psi.f().size() - 1;
    const std::size_t nodes = e * std::max(degq, degf) + 1;

    // Row k: coefficients in z2 of det(F(ω^k) − z2 q(ω^k) I).
    const auto rows = map_indexed(nodes, exec, [&](std::size_t k) {
        const cplx z = root_of_unity(k, nodes);
        const Matrix fz = horner(psi.f(), z);
        const cplx qz = horner(psi.q(), z);
        std::vector<cplx> poly{1.0};
        for (const cplx lam : eigenvalues(fz)) {
            std::vector<cplx> next(poly.size() + 1, 0.0);
            for (std::size_t j = 0; j < poly.size(); ++j) {
                next[j] += lam * poly[j];
                next[j + 1] -= qz * poly[j];
            }
            poly = std::move(next);
        }
        return poly;
    });

    // columns[j] holds the z1-coefficients of the z2^j term.
    std::vector<std::vector<cplx>> columns(e + 1);
    for (std::size_t j = 0; j <= e; ++j) {
        std::vector<cplx> samples;
        for (const auto& r : rows) samples.push_back(r[j]);
        columns[j] = interpolate(samples);
    }

    // Distinct poles with multiplicity.
    std::vector<std::pair<cplx, std::size_t>> groups;
    for (const cplx a : psi.poles()) {
        auto hit = std::find_if(groups.begin(), groups.end(), [&](const auto& g) {
            return std::abs(g.first - a) <= kPoleMatch * std::abs(a);
        });
        if (hit == groups.end()) groups.push_back({a, 1});
        else ++hit->second;
    }
    for (const auto& [alpha, mult] : groups) {
        for (std::size_t k = 0; k < mult * e; ++k) {
            double num = 0.0, den = 0.0;
            for (const auto& col : columns) {
                num = std::max(num, std::abs(horner(col, alpha)));
                double s = 0.0, zp = 1.0;
                for (const auto& x : col) {
                    s += std::abs(x) * zp;
                    zp *= std::abs(alpha);
                }
                den = std::max(den, s);
            }
            const double res = den > 0.0 ? num / den : 0.0;
            if (res > 100.0 * tol) break;
            if (res > tol)
                throw Error(ErrorCode::DeflationAmbiguous,
                            "divisibility residual " + std::to_string(res) +
                                " inside the ambiguity band");
            for (auto& col : columns) col = divide_by_factor(col, alpha);
        }
    }

    std::size_t len = 0;
    for (const auto& col : columns) len = std::max(len, col.size());
    BivariatePoly xi;
    xi.coeffs.assign(len, std::vector<cplx>(e + 1, 0.0));
    double mx = 0.0;
    for (std::size_t j = 0; j <= e; ++j)
        for (std::size_t i = 0; i < columns[j].size(); ++i) {
            xi.coeffs[i][j] = columns[j][i];
            mx = std::max(mx, std::abs(columns[j][i]));
        }
    if (mx == 0.0) throw Error(ErrorCode::InvalidInput, "xi vanishes identically");

    for (auto& row : xi.coeffs)
        for (auto& c : row)
            if (std::abs(c) <= 1e-12 * mx) c = 0.0;
    auto row_zero = [&](std::size_t i) {
        return std::all_of(xi.coeffs[i].begin(), xi.coeffs[i].end(),
                           [](cplx c) { return c == 0.0; });
    };
    while (xi.coeffs.size() > 1 && row_zero(xi.coeffs.size() - 1)) xi.coeffs.pop_back();
    auto col_zero = [&](std::size_t j) {
        return std::all_of(xi.coeffs.begin(), xi.coeffs.end(),
                           [&](const auto& row) { return row[j] == 0.0; });
    };
    while (xi.coeffs.front().size() > 1 && col_zero(xi.coeffs.front().size() - 1))
        for (auto& row : xi.coeffs) row.pop_back();

    const auto& top = xi.coeffs.back();
    std::size_t jmax = top.size();
    while (jmax-- > 0 && top[jmax] == 0.0) {}
    const cplx lead = top[jmax];
    for (auto& row : xi.coeffs)
        for (auto& c : row) c /= lead;
    return xi;
}

SymmetryResult essential_symmetry_check(const BivariatePoly& xi, double tol) {
    SymmetryResult out;
    const std::size_t m1 = xi.deg1(), m2 = xi.deg2();
    double mx = 0.0;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i <= m1; ++i)
        for (std::size_t j = 0; j <= m2; ++j)
            if (std::abs(xi.coeffs[i][j]) > mx) {
                mx = std::abs(xi.coeffs[i][j]);
                bi = i;
                bj = j;
            }
    if (mx == 0.0) return out;
    const cplx partner = xi.coeffs[m1 - bi][m2 - bj];
    if (std::abs(partner) <= tol * mx) {
        out.defect = 1.0;
        return out;
    }
    cplx c = xi.coeffs[bi][bj] / std::conj(partner);
    if (std::abs(std::abs(c) - 1.0) > tol) {
        out.defect = std::abs(std::abs(c) - 1.0);
        return out;
    }
    c /= std::abs(c);
    double defect = 0.0;
    for (std::size_t i = 0; i <= m1; ++i)
        for (std::size_t j = 0; j <= m2; ++j)
            defect = std::max(defect, std::abs(xi.coeffs[i][j] -
                                               c * std::conj(xi.coeffs[m1 - i][m2 - j])));
    out.defect = defect / mx;
    out.ok = out.defect <= tol;
    if (out.ok) out.c = c;
    return out;
}

}  // namespace distvar
