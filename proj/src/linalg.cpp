#include "distvar/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "distvar/errors.hpp"

namespace distvar {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

// Largest eigenvalue of a Hermitian matrix; 2×2 is done in closed form
// since it dominates the fixture workload.
double lambda_max_hermitian(const Matrix& h) {
    if (h.rows() == 1) return h(0, 0).real();
    if (h.rows() == 2) {
        const double a = h(0, 0).real();
        const double d = h(1, 1).real();
        const double half = 0.5 * (a - d);
        return 0.5 * (a + d) + std::sqrt(half * half + std::norm(h(0, 1)));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

// Swap adjacent diagonal entries k, k+1 of the upper triangular t,
// updating q so that q t q* is unchanged.
void swap_adjacent(Matrix& t, Matrix& q, Eigen::Index k) {
    const cplx a = t(k, k);
    const cplx b = t(k + 1, k + 1);
    const cplx x0 = t(k, k + 1);
    const cplx x1 = b - a;
    const double r = std::hypot(std::abs(x0), std::abs(x1));
    Eigen::Matrix2cd g;
    if (r == 0.0) {
        g << 0, 1, 1, 0;
    } else {
        const cplx c0 = x0 / r;
        const cplx c1 = x1 / r;
        g << c0, -std::conj(c1), c1, std::conj(c0);
    }
    t.middleRows(k, 2) = (g.adjoint() * t.middleRows(k, 2)).eval();
    t.middleCols(k, 2) = (t.middleCols(k, 2) * g).eval();
    q.middleCols(k, 2) = (q.middleCols(k, 2) * g).eval();
    t(k + 1, k) = 0;
}

// Unitary whose first column is the unit vector v.
Matrix complete_to_unitary(const Vector& v) {
    const Matrix col = v;
    Eigen::HouseholderQR<Matrix> qr(col);
    return qr.householderQ();
}

// Within a cluster block, build a common flag of the compressed family by
// repeated common-kernel extraction of the centered blocks.
Matrix refine_block(const std::vector<Matrix>& blocks) {
    const Eigen::Index k = blocks.front().rows();
    Matrix w = Matrix::Identity(k, k);
    std::vector<Matrix> centered;
    centered.reserve(blocks.size());
    for (const auto& b : blocks) {
        const cplx mean = b.trace() / static_cast<double>(k);
        centered.push_back(b - mean * Matrix::Identity(k, k));
    }
    for (Eigen::Index l = 0; l + 1 < k; ++l) {
        const Eigen::Index m = k - l;
        Matrix stack(m * idx(centered.size()), m);
        for (std::size_t i = 0; i < centered.size(); ++i) {
            const Matrix cur = w.adjoint() * centered[i] * w;
            stack.middleRows(idx(i) * m, m) = cur.bottomRightCorner(m, m);
        }
        Eigen::JacobiSVD<Matrix> svd(stack, Eigen::ComputeFullV);
        const Vector v = svd.matrixV().col(m - 1);
        w.rightCols(m) = (w.rightCols(m) * complete_to_unitary(v)).eval();
    }
    return w;
}

struct Attempt {
    Matrix q;
    std::vector<Matrix> ts;
    bool ok = false;
};

Attempt try_triangularize(const std::vector<Matrix>& family, const std::vector<double>& scales,
                          const Matrix& m, bool use_clusters, double tol) {
    SchurForm s = schur(m);
    Matrix q = std::move(s.q);
    Matrix t = std::move(s.t);
    const Eigen::Index n = t.rows();

    if (use_clusters) {
        std::vector<cplx> diag(static_cast<std::size_t>(n));
        for (Eigen::Index i = 0; i < n; ++i) diag[static_cast<std::size_t>(i)] = t(i, i);
        const auto clusters = cluster_eigenvalues(diag, std::max(1.0, operator_norm(m)));

        // label[pos] = target cluster rank; bubble into contiguous order.
        std::vector<std::size_t> label(static_cast<std::size_t>(n));
        for (std::size_t c = 0; c < clusters.size(); ++c)
            for (auto p : clusters[c]) label[p] = c;
        for (Eigen::Index pass = 0; pass < n; ++pass) {
            bool moved = false;
            for (Eigen::Index k = 0; k + 1 < n; ++k) {
                auto& lk = label[static_cast<std::size_t>(k)];
                auto& lk1 = label[static_cast<std::size_t>(k + 1)];
                if (lk > lk1) {
                    swap_adjacent(t, q, k);
                    std::swap(lk, lk1);
                    moved = true;
                }
            }
            if (!moved) break;
        }

        Eigen::Index start = 0;
        for (const auto& c : clusters) {
            const auto k = idx(c.size());
            if (k > 1) {
                const Matrix qb = q.middleCols(start, k);
                std::vector<Matrix> blocks;
                blocks.reserve(family.size());
                for (const auto& a : family) blocks.push_back(qb.adjoint() * a * qb);
                q.middleCols(start, k) = qb * refine_block(blocks);
            }
            start += k;
        }
    }

    Attempt out;
    out.ok = true;
    for (std::size_t i = 0; i < family.size(); ++i) {
        Matrix ti = q.adjoint() * family[i] * q;
        if (strict_lower_max(ti) > tol * scales[i]) out.ok = false;
        out.ts.push_back(std::move(ti));
    }
    out.q = std::move(q);
    return out;
}

}  // namespace

Matrix identity(std::size_t n) { return Matrix::Identity(idx(n), idx(n)); }

bool all_finite(const Matrix& a) { return a.allFinite(); }

double operator_norm(const Matrix& a) {
    if (a.size() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(a);
    return svd.singularValues()(0);
}

double strict_lower_max(const Matrix& a) {
    double m = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = j + 1; i < a.rows(); ++i) m = std::max(m, std::abs(a(i, j)));
    return m;
}

double unitary_defect(const Matrix& a) {
    return (a.adjoint() * a - Matrix::Identity(a.cols(), a.cols())).norm();
}

void require_square(const Matrix& a, const char* what) {
    if (a.rows() < 1 || a.rows() != a.cols())
        throw Error(ErrorCode::NonSquare, std::string(what) + " must be square and nonempty");
    if (!a.allFinite())
        throw Error(ErrorCode::InvalidInput, std::string(what) + " has non-finite entries");
}

SchurForm schur(const Matrix& a, double tol) {
    require_square(a, "schur input");
    if (!(tol > 0)) throw Error(ErrorCode::InvalidInput, "schur tol must be positive");
    const Eigen::Index n = a.rows();
    SchurForm out;
    out.source_dim = static_cast<std::size_t>(n);
    if (n == 1) {
        out.q = Matrix::Identity(1, 1);
        out.t = a;
        return out;
    }
    Eigen::ComplexSchur<Matrix> cs(n);
    cs.setMaxIterations(100 * n * n);
    cs.compute(a, true);
    if (cs.info() != Eigen::Success)
        throw Error(ErrorCode::NonConvergence, "Schur iteration did not converge");
    out.q = cs.matrixU();
    out.t = cs.matrixT();
    // Eigen leaves exact zeros below the diagonal; clear any roundoff anyway.
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = j + 1; i < n; ++i) out.t(i, j) = 0;
    return out;
}

std::vector<cplx> eigenvalues(const Matrix& a) {
    const SchurForm s = schur(a);
    std::vector<cplx> out(s.source_dim);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = s.t(idx(i), idx(i));
    return out;
}

std::vector<std::vector<std::size_t>> cluster_eigenvalues(std::span<const cplx> values,
                                                          double scale) {
    const double s = std::max(scale, std::numeric_limits<double>::min());
    const double unit = static_cast<double>(std::max<std::size_t>(values.size(), 1)) * kEps;
    auto radius = [&](std::size_t k) {
        const double defect = 10.0 * std::pow(unit, 1.0 / static_cast<double>(k));
        return std::max(kClusterTol, defect) * s;
    };

    std::vector<std::vector<std::size_t>> cl;
    for (std::size_t i = 0; i < values.size(); ++i) cl.push_back({i});

    auto diameter = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
        double d = 0.0;
        for (auto i : a)
            for (auto j : b) d = std::max(d, std::abs(values[i] - values[j]));
        return d;
    };

    for (bool merged = true; merged;) {
        merged = false;
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < cl.size(); ++i) {
            for (std::size_t j = i + 1; j < cl.size(); ++j) {
                const double d = std::max({diameter(cl[i], cl[j]), diameter(cl[i], cl[i]),
                                           diameter(cl[j], cl[j])});
                if (d <= radius(cl[i].size() + cl[j].size()) && d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (std::isfinite(best)) {
            cl[bi].insert(cl[bi].end(), cl[bj].begin(), cl[bj].end());
            std::sort(cl[bi].begin(), cl[bi].end());
            cl.erase(cl.begin() + static_cast<std::ptrdiff_t>(bj));
            merged = true;
        }
    }
    std::sort(cl.begin(), cl.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return cl;
}

Triangularization joint_triangularize(std::span<const Matrix> family, std::uint64_t seed,
                                      double tol) {
    if (family.empty()) throw Error(ErrorCode::InvalidInput, "empty matrix family");
    const Eigen::Index n = family.front().rows();
    for (const auto& a : family) {
        require_square(a, "family member");
        if (a.rows() != n)
            throw Error(ErrorCode::DimensionMismatch, "family members differ in dimension");
    }

    std::vector<Matrix> fam(family.begin(), family.end());
    std::vector<double> scales;
    for (const auto& a : fam) scales.push_back(std::max(1.0, operator_norm(a)));

    for (std::size_t i = 0; i < fam.size(); ++i) {
        for (std::size_t j = i + 1; j < fam.size(); ++j) {
            const double c = (fam[i] * fam[j] - fam[j] * fam[i]).norm();
            if (c > tol * scales[i] * scales[j])
                throw Error(ErrorCode::NotCommuting,
                            "commutator norm " + std::to_string(c) + " exceeds tolerance");
        }
    }

    if (n == 1) return {Matrix::Identity(1, 1), fam};

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int attempt = 0; attempt < kJointRetries; ++attempt) {
        Matrix m = Matrix::Zero(n, n);
        for (std::size_t i = 0; i < fam.size(); ++i) m += cplx(g(rng), g(rng)) / scales[i] * fam[i];

        for (bool clusters : {true, false}) {
            Attempt at = try_triangularize(fam, scales, m, clusters, tol);
            if (at.ok) return {std::move(at.q), std::move(at.ts)};
        }
    }
    throw Error(ErrorCode::RetriesExhausted, "joint triangularization failed verification");
}

JointSpectrum joint_eigenvalues(std::span<const Matrix> family, std::uint64_t seed, double tol) {
    const Triangularization tr = joint_triangularize(family, seed, tol);
    JointSpectrum js;
    js.dim = static_cast<std::size_t>(tr.q.rows());
    for (std::size_t k = 0; k < js.dim; ++k) {
        std::vector<cplx> pt;
        pt.reserve(tr.ts.size());
        for (const auto& t : tr.ts) pt.push_back(t(idx(k), idx(k)));
        js.points.push_back(std::move(pt));
    }
    return js;
}

double numerical_radius(const Matrix& a, double tol, Exec exec) {
    require_square(a, "numerical_radius input");
    if (!(tol > 0)) throw Error(ErrorCode::InvalidInput, "tol must be positive");
    if (a.rows() == 1) return std::abs(a(0, 0));
    const double norm = operator_norm(a);
    if (norm == 0.0) return 0.0;

    const Matrix adj = a.adjoint();
    auto f = [&](double th) {
        const cplx e = std::polar(1.0, th);
        const Matrix h = 0.5 * (e * a + std::conj(e) * adj);
        return lambda_max_hermitian(h);
    };

    const double h = 2.0 * std::numbers::pi / kNumRadGrid;
    const std::vector<double> grid = map_indexed(
        static_cast<std::size_t>(kNumRadGrid), exec,
        [&](std::size_t k) { return f(h * static_cast<double>(k)); });

    double best = *std::max_element(grid.begin(), grid.end());
    std::vector<std::size_t> peaks;
    const std::size_t g = grid.size();
    for (std::size_t k = 0; k < g; ++k) {
        const double v = grid[k];
        if (v >= grid[(k + g - 1) % g] && v >= grid[(k + 1) % g] && v >= best - norm * h)
            peaks.push_back(k);
    }
    std::sort(peaks.begin(), peaks.end(), [&](auto x, auto y) { return grid[x] > grid[y]; });
    if (peaks.size() > 6) peaks.resize(6);

    const double width = std::max(tol / norm, 1e-13);
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    for (auto k : peaks) {
        double lo = h * static_cast<double>(k) - h;
        double hi = h * static_cast<double>(k) + h;
        double x1 = hi - phi * (hi - lo);
        double x2 = lo + phi * (hi - lo);
        double f1 = f(x1), f2 = f(x2);
        for (int it = 0; it < 200 && hi - lo > width; ++it) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + phi * (hi - lo);
                f2 = f(x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - phi * (hi - lo);
                f1 = f(x1);
            }
        }
        best = std::max({best, f1, f2});
    }
    return std::min(best, norm);
}

double common_kernel_defect(std::span<const Matrix> family) {
    if (family.empty()) throw Error(ErrorCode::InvalidInput, "empty matrix family");
    const Eigen::Index cols = family.front().cols();
    Eigen::Index rows = 0;
    for (const auto& a : family) {
        if (a.cols() != cols)
            throw Error(ErrorCode::DimensionMismatch, "family members differ in column count");
        rows += a.rows();
    }
    if (rows < cols) return 0.0;
    Matrix stack(rows, cols);
    Eigen::Index r = 0;
    for (const auto& a : family) {
        stack.middleRows(r, a.rows()) = a;
        r += a.rows();
    }
    Eigen::JacobiSVD<Matrix> svd(stack);
    return svd.singularValues()(cols - 1);
}

Vector common_kernel_vector(std::span<const Matrix> family) {
    if (family.empty()) throw Error(ErrorCode::InvalidInput, "empty matrix family");
    const Eigen::Index cols = family.front().cols();
    Eigen::Index rows = 0;
    for (const auto& a : family) {
        if (a.cols() != cols)
            throw Error(ErrorCode::DimensionMismatch, "family members differ in column count");
        rows += a.rows();
    }
    Matrix stack(std::max(rows, cols), cols);
    stack.setZero();
    Eigen::Index r = 0;
    for (const auto& a : family) {
        stack.middleRows(r, a.rows()) = a;
        r += a.rows();
    }
    Eigen::JacobiSVD<Matrix> svd(stack, Eigen::ComputeFullV);
    return svd.matrixV().col(cols - 1);
}

}  // namespace distvar
