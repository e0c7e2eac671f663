#include "distvar/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "distvar/errors.hpp"

namespace distvar {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

constexpr double kRangeThreshold = 1e-6;
constexpr double kPurityTol = 1e-10;

void check_pair(const Matrix& p, const Matrix& u) {
    require_square(p, "P");
    require_square(u, "U");
    if (p.rows() != u.rows()) throw Error(ErrorCode::DimensionMismatch, "P and U differ in size");
}

double projection_defect(const Matrix& p) { return (p * p - p).norm(); }
double selfadjoint_defect(const Matrix& p) { return (p - p.adjoint()).norm(); }

}  // namespace

void ValidationReport::add(std::string name, double defect, double tol) {
    const bool pass = std::isfinite(defect) && defect <= tol;
    items.push_back({std::move(name), defect, tol, pass});
    ok = ok && pass;
}

void ValidationReport::add_flag(std::string name, bool pass) {
    items.push_back({std::move(name), pass ? 0.0 : 1.0, 0.0, pass});
    ok = ok && pass;
}

Matrix range_basis_of(const Matrix& p) {
    const Eigen::Index n = p.rows();
    Matrix r = p;
    std::vector<Vector> basis;
    std::vector<bool> used(static_cast<std::size_t>(p.cols()), false);
    for (;;) {
        double best = kRangeThreshold;
        Eigen::Index pick = -1;
        for (Eigen::Index j = 0; j < r.cols(); ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            const double nr = r.col(j).norm();
            if (nr > best) {
                best = nr;
                pick = j;
            }
        }
        if (pick < 0) break;
        used[static_cast<std::size_t>(pick)] = true;
        Vector v = r.col(pick) / best;
        // Second pass keeps orthogonality at roundoff level.
        for (const auto& q : basis) v -= q * q.dot(v);
        v.normalize();
        basis.push_back(v);
        for (Eigen::Index j = 0; j < r.cols(); ++j) r.col(j) -= v * v.dot(r.col(j));
    }
    Matrix out(n, idx(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k) out.col(idx(k)) = basis[k];
    return out;
}

ModelTriple::ModelTriple(Matrix p, Matrix u) : p_(std::move(p)), u_(std::move(u)) {
    check_pair(p_, u_);
    basis_ = range_basis_of(p_);
}

ValidationReport validate_triple(const ModelTriple& t, double tol) {
    ValidationReport r;
    r.add("projection_idempotent", projection_defect(t.p()), tol);
    r.add("projection_selfadjoint", selfadjoint_defect(t.p()), tol);
    r.add("unitary", unitary_defect(t.u()), tol);
    return r;
}

std::pair<Matrix, Matrix> bcl_pair(const ModelTriple& t, cplx z) {
    const Matrix pp = t.p_perp();
    Matrix phi1 = (pp + z * t.p()) * t.u();
    Matrix phi2 = t.u().adjoint() * (t.p() + z * pp);
    return {std::move(phi1), std::move(phi2)};
}

Matrix realize(const ModelTriple& t, cplx z) {
    if (t.rank() == 0) throw Error(ErrorCode::EmptyRange, "projection has trivial range");
    const Matrix ustar = t.u().adjoint();
    const Matrix m = identity(t.dim()) - z * ustar * t.p_perp();
    Eigen::FullPivLU<Matrix> lu(m);
    if (!lu.isInvertible())
        throw Error(ErrorCode::SingularResolvent, "I - zU*P^perp is singular");
    const Matrix& b = t.range_basis();
    return b.adjoint() * lu.solve(ustar * b);
}

Matrix Colligation::assembled() const {
    const auto e = idx(dim_e), h = idx(dim_h);
    Matrix m(e + h, e + h);
    m.topLeftCorner(e, e) = a;
    m.topRightCorner(e, h) = b;
    m.bottomLeftCorner(h, e) = c;
    m.bottomRightCorner(h, h) = d;
    return m;
}

Colligation Colligation::split(const Matrix& full, std::size_t dim_e) {
    require_square(full, "colligation");
    const auto n = static_cast<std::size_t>(full.rows());
    if (dim_e < 1 || dim_e > n) throw Error(ErrorCode::InvalidInput, "dim_e out of range");
    Colligation c;
    c.dim_e = dim_e;
    c.dim_h = n - dim_e;
    const auto e = idx(dim_e), h = idx(c.dim_h);
    c.a = full.topLeftCorner(e, e);
    c.b = full.topRightCorner(e, h);
    c.c = full.bottomLeftCorner(h, e);
    c.d = full.bottomRightCorner(h, h);
    return c;
}

ModelTriple triple_from_colligation(const Colligation& c, double tol) {
    const auto e = idx(c.dim_e), h = idx(c.dim_h);
    if (e < 1) throw Error(ErrorCode::InvalidInput, "dim_e must be positive");
    if (c.a.rows() != e || c.a.cols() != e || c.b.rows() != e || c.b.cols() != h ||
        c.c.rows() != h || c.c.cols() != e || c.d.rows() != h || c.d.cols() != h)
        throw Error(ErrorCode::DimensionMismatch, "colligation blocks have inconsistent shapes");
    const Matrix v = c.assembled();
    if (!v.allFinite()) throw Error(ErrorCode::InvalidInput, "colligation has non-finite entries");
    const double defect = unitary_defect(v);
    if (defect > tol)
        throw Error(ErrorCode::NotUnitary,
                    "colligation unitarity defect " + std::to_string(defect));
    Matrix p = Matrix::Zero(e + h, e + h);
    p.topLeftCorner(e, e).setIdentity();
    return ModelTriple(std::move(p), v.adjoint());
}

Colligation colligation_from_triple(const ModelTriple& t) {
    const Matrix& rb = t.range_basis();
    const Matrix kb = range_basis_of(t.p_perp());
    if (rb.cols() + kb.cols() != idx(t.dim()))
        throw Error(ErrorCode::InvalidInput, "P is not an orthogonal projection");
    Matrix q(idx(t.dim()), idx(t.dim()));
    q << rb, kb;
    return Colligation::split(q.adjoint() * t.u().adjoint() * q, t.rank());
}

Matrix fundamental_operator(const ModelTriple& t) {
    return t.p() * t.u() + t.u().adjoint() * t.p_perp();
}

ModelTuple::ModelTuple(std::vector<Matrix> ps, std::vector<Matrix> us)
    : ps_(std::move(ps)), us_(std::move(us)) {
    if (ps_.size() != us_.size())
        throw Error(ErrorCode::DimensionMismatch, "P_list and U_list differ in length");
    if (ps_.size() < 3) throw Error(ErrorCode::InvalidInput, "model tuples need d >= 3");
    const Eigen::Index n = ps_.front().rows();
    for (std::size_t i = 0; i < ps_.size(); ++i) {
        check_pair(ps_[i], us_[i]);
        if (ps_[i].rows() != n)
            throw Error(ErrorCode::DimensionMismatch, "tuple members differ in dimension");
    }

    // Product pencil has degree ≤ d; recover its coefficients from d+1
    // samples on the unit circle.
    const std::size_t nodes = ps_.size() + 1;
    std::vector<Matrix> vals;
    for (std::size_t k = 0; k < nodes; ++k) {
        const cplx w = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) /
                                           static_cast<double>(nodes));
        Matrix prod = identity(dim());
        for (const auto& phi : tuple_pencils(*this, w)) prod = prod * phi;
        vals.push_back(std::move(prod));
    }
    double defect = 0.0;
    for (std::size_t j = 0; j < nodes; ++j) {
        Matrix coef = Matrix::Zero(n, n);
        for (std::size_t k = 0; k < nodes; ++k) {
            const cplx w = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(j * k) /
                                               static_cast<double>(nodes));
            coef += w * vals[k];
        }
        coef /= static_cast<double>(nodes);
        if (j == 1) coef -= identity(dim());
        defect = std::max(defect, coef.norm());
    }
    purity_defect_ = defect;
    pure_ = defect <= kPurityTol;
}

std::vector<Matrix> tuple_pencils(const ModelTuple& t, cplx z) {
    std::vector<Matrix> out;
    out.reserve(t.d());
    for (std::size_t i = 0; i < t.d(); ++i) {
        const Matrix& p = t.ps()[i];
        const Matrix pp = identity(t.dim()) - p;
        out.push_back((pp + z * p) * t.us()[i]);
    }
    return out;
}

ValidationReport validate_tuple(const ModelTuple& t, double tol) {
    ValidationReport r;
    bool nontrivial = false;
    const Matrix id = identity(t.dim());
    for (std::size_t i = 0; i < t.d(); ++i) {
        const Matrix& p = t.ps()[i];
        const std::string tag = "[" + std::to_string(i) + "]";
        r.add("projection_idempotent" + tag, projection_defect(p), tol);
        r.add("projection_selfadjoint" + tag, selfadjoint_defect(p), tol);
        r.add("unitary" + tag, unitary_defect(t.us()[i]), tol);
        if (p.norm() > 0.5 && (id - p).norm() > 0.5) nontrivial = true;
    }
    r.add_flag("nontrivial_projection", nontrivial);

    std::vector<Matrix> as, bs;
    for (std::size_t i = 0; i < t.d(); ++i) {
        as.push_back((id - t.ps()[i]) * t.us()[i]);
        bs.push_back(t.ps()[i] * t.us()[i]);
    }
    for (std::size_t i = 0; i < t.d(); ++i) {
        for (std::size_t j = i + 1; j < t.d(); ++j) {
            const double c0 = (as[i] * as[j] - as[j] * as[i]).norm();
            const double c2 = (bs[i] * bs[j] - bs[j] * bs[i]).norm();
            const double c1 =
                (as[i] * bs[j] + bs[i] * as[j] - as[j] * bs[i] - bs[j] * as[i]).norm();
            r.add("commute[" + std::to_string(i) + "," + std::to_string(j) + "]",
                  std::max({c0, c1, c2}), tol);
        }
    }
    r.add("purity", t.purity_defect(), std::max(tol, kPurityTol));
    return r;
}

}  // namespace distvar
