#include "distvar/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "distvar/errors.hpp"

namespace distvar {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

std::size_t rank_at(const Eigen::VectorXd& desc, double rel) {
    if (desc.size() == 0 || desc(0) <= 1e-13) return 0;
    std::size_t r = 0;
    while (idx(r) < desc.size() && desc(idx(r)) > rel * desc(0)) ++r;
    return r;
}

std::size_t numerical_rank(const Matrix& m, double rel) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Matrix> svd(m);
    return rank_at(svd.singularValues(), rel);
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix polar_factor(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace

std::string_view to_string(Equivalence e) {
    switch (e) {
        case Equivalence::Equivalent: return "EQUIVALENT";
        case Equivalence::NotEquivalent: return "NOT_EQUIVALENT";
        case Equivalence::Undetermined: return "UNDETERMINED";
    }
    return "UNDETERMINED";
}

std::vector<cplx> kernel_nodes(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-0.25, 0.25);
    std::vector<cplx> out;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(std::max<std::size_t>(count, 1));
    for (std::size_t k = 0; k < count; ++k) {
        const double r = k % 2 == 0 ? 0.4 : 0.7;
        out.push_back(std::polar(r, step * (static_cast<double>(k) + jitter(rng))));
    }
    return out;
}

KernelFrame kernel_frame(const RationalInnerFn& psi, std::span<const cplx> nodes,
                         double tol_rank, Exec exec) {
    const std::size_t e = psi.dim_e();
    const std::size_t n = nodes.size();
    KernelFrame f;
    f.nodes.assign(nodes.begin(), nodes.end());
    f.directions = identity(e);

    std::vector<Matrix> vals;
    for (const cplx w : nodes) vals.push_back(psi.eval(w));

    const auto ee = idx(e);
    f.gram = Matrix::Zero(idx(n * e), idx(n * e));
    const auto rows = map_indexed(n, exec, [&](std::size_t j) {
        Matrix row(ee, idx(n * e));
        for (std::size_t k = 0; k < n; ++k) {
            const cplx denom = 1.0 - nodes[j] * std::conj(nodes[k]);
            row.middleCols(idx(k * e), ee) =
                (identity(e) - vals[j] * vals[k].adjoint()) / denom;
        }
        return row;
    });
    for (std::size_t j = 0; j < n; ++j) f.gram.middleRows(idx(j * e), ee) = rows[j];
    f.gram = (0.5 * (f.gram + f.gram.adjoint())).eval();

    Eigen::SelfAdjointEigenSolver<Matrix> es(f.gram);
    // Descending order.
    const Eigen::VectorXd lam = es.eigenvalues().reverse();
    const Matrix vecs = es.eigenvectors().rowwise().reverse();

    const std::size_t r = rank_at(lam, tol_rank);
    if (rank_at(lam, tol_rank * 10.0) != r || rank_at(lam, tol_rank / 10.0) != r)
        throw Error(ErrorCode::RankDeficiencyUnstable,
                    "Gram rank changes across the threshold decade");
    f.rank = r;
    f.coord_map = Matrix::Zero(idx(r), idx(n * e));
    for (std::size_t l = 0; l < r; ++l)
        f.coord_map.row(idx(l)) = std::sqrt(lam(idx(l))) * vecs.col(idx(l)).adjoint();
    return f;
}

CanonicalModel canonical_triple(const RationalInnerFn& psi, std::size_t node_count,
                                std::uint64_t seed, double tol_rank, Exec exec) {
    const std::size_t e = psi.dim_e();
    if (node_count < 2 * (e + psi.dim_h()))
        throw Error(ErrorCode::InvalidInput, "node_count must be at least 2(dim_e + dim_h)");
    const auto nodes = kernel_nodes(node_count, seed);
    KernelFrame f = kernel_frame(psi, nodes, tol_rank, exec);

    const std::size_t r = f.rank;
    const auto ee = idx(e), rr = idx(r), cols = idx(node_count * e);
    Matrix dm(ee + rr, cols), cm(ee + rr, cols);
    for (std::size_t j = 0; j < node_count; ++j) {
        const Matrix psi_star = psi.eval(nodes[j]).adjoint();
        for (std::size_t a = 0; a < e; ++a) {
            const auto col = idx(j * e + a);
            const Vector x = f.coord_map.col(col);
            dm.col(col).head(ee) = identity(e).col(idx(a));
            dm.col(col).tail(rr) = std::conj(nodes[j]) * x;
            cm.col(col).head(ee) = psi_star.col(idx(a));
            cm.col(col).tail(rr) = x;
        }
    }
    if (numerical_rank(dm, tol_rank) != numerical_rank(cm, tol_rank))
        throw Error(ErrorCode::DefectMismatch,
                    "domain and range of the lurking isometry differ in dimension");

    // Procrustes: the polar factor of cm·dm* maps dm onto cm exactly when
    // their Gram matrices agree, and completes the complements in order.
    const Matrix u = polar_factor(cm * dm.adjoint());
    Matrix p = Matrix::Zero(ee + rr, ee + rr);
    p.topLeftCorner(ee, ee).setIdentity();
    ModelTriple triple(std::move(p), u);

    std::mt19937_64 rng(derive_seed(seed, 0x5eed));
    std::uniform_real_distribution<double> rad(0.0, 0.81), ang(0.0, 2.0 * std::numbers::pi);
    double resid = 0.0;
    for (int k = 0; k < 20; ++k) {
        const cplx z = std::polar(std::sqrt(rad(rng)), ang(rng));
        resid = std::max(resid, (realize(triple, z) - psi.eval(z)).norm());
    }
    return {std::move(triple), std::move(f), resid};
}

EquivalenceResult unitary_equivalence(const ModelTriple& t1, const ModelTriple& t2, double tol,
                                      std::uint64_t seed) {
    EquivalenceResult out;
    if (t1.dim() != t2.dim()) {
        out.verdict = Equivalence::NotEquivalent;
        return out;
    }
    const std::size_t n = t1.dim();
    const auto nn = idx(n * n);
    const Matrix id = identity(n);
    Matrix l(2 * nn, nn);
    l.topRows(nn) = kron(id, t2.p()) - kron(t1.p().transpose(), id);
    l.bottomRows(nn) = kron(id, t2.u()) - kron(t1.u().transpose(), id);

    Eigen::JacobiSVD<Matrix> svd(l, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double thr = std::max(tol, 1e-10) * std::max(1.0, sv(0));
    Eigen::Index k0 = nn;
    while (k0 > 0 && sv(k0 - 1) <= thr) --k0;
    out.kernel_dim = static_cast<std::size_t>(nn - k0);
    if (out.kernel_dim == 0) {
        out.verdict = Equivalence::NotEquivalent;
        return out;
    }

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    Vector x = Vector::Zero(nn);
    for (Eigen::Index k = k0; k < nn; ++k) x += cplx(g(rng), g(rng)) * svd.matrixV().col(k);
    const Matrix xm = Eigen::Map<const Matrix>(x.data(), idx(n), idx(n));
    const Matrix w = polar_factor(xm);

    const double d1 = (t2.p() * w - w * t1.p()).norm();
    const double d2 = (t2.u() * w - w * t1.u()).norm();
    if (d1 <= tol && d2 <= tol) {
        out.verdict = Equivalence::Equivalent;
        out.witness = w;
    } else {
        out.verdict = Equivalence::Undetermined;
    }
    return out;
}

}  // namespace distvar
