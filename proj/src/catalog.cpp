#include "distvar/catalog.hpp"

#include <cmath>
#include <numeric>

#include "distvar/errors.hpp"

namespace distvar {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

Matrix p1() {
    Matrix p = Matrix::Zero(2, 2);
    p(0, 0) = 1;
    return p;
}

Matrix swap2() {
    Matrix u = Matrix::Zero(2, 2);
    u(0, 1) = 1;
    u(1, 0) = 1;
    return u;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix m = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    m.topLeftCorner(a.rows(), a.cols()) = a;
    m.bottomRightCorner(b.rows(), b.cols()) = b;
    return m;
}

Matrix u_lambda(cplx lambda) {
    const double r = std::sqrt(std::max(0.0, 1.0 - std::norm(lambda)));
    Matrix u(2, 2);
    u << lambda, r, -r, std::conj(lambda);
    return u;
}

}  // namespace

ModelTriple diagonal_triple() { return ModelTriple(p1(), swap2()); }

ModelTriple identity_projection_triple() { return ModelTriple(p1(), identity(2)); }

ModelTriple block4_triple() {
    return ModelTriple(block_diag(p1(), p1()), block_diag(identity(2), swap2()));
}

ModelTriple generalized_neil(std::size_t n, std::size_t m) {
    if (n < 1 || m < 1) throw Error(ErrorCode::InvalidInput, "generalized_neil needs n, m >= 1");
    const auto dim = idx(n + m);
    const auto mm = idx(m), nn = idx(n);
    Matrix ustar = Matrix::Zero(dim, dim);
    for (Eigen::Index i = 1; i < mm; ++i) ustar(i, i - 1) = 1;  // A
    ustar(0, mm) = 1;                                           // B
    ustar(mm + nn - 1, mm - 1) = 1;                             // C
    for (Eigen::Index i = 0; i + 1 < nn; ++i) ustar(mm + i, mm + i + 1) = 1;  // D
    Matrix p = Matrix::Zero(dim, dim);
    p.topLeftCorner(mm, mm).setIdentity();
    return ModelTriple(std::move(p), ustar.adjoint());
}

ModelTriple neil_triple() { return generalized_neil(3, 2); }

ModelTriple perturbed_royal_triple() {
    return ModelTriple(block_diag(p1(), p1()), block_diag(swap2(), cplx(0, 1) * swap2()));
}

ModelTriple diag_lambda_triple(cplx lambda) {
    if (std::abs(lambda) >= 1.0) throw Error(ErrorCode::InvalidInput, "need |lambda| < 1");
    return ModelTriple(block_diag(p1(), p1()), block_diag(u_lambda(lambda), u_lambda(0.0)));
}

Colligation z2_colligation() {
    Matrix full = Matrix::Zero(3, 3);
    full(0, 2) = 1;
    full(1, 0) = 1;
    full(2, 1) = 1;
    return Colligation::split(full, 1);
}

Colligation z2_colligation_alt() {
    Matrix full = Matrix::Zero(3, 3);
    full(0, 1) = 1;
    full(1, 2) = 1;
    full(2, 0) = 1;
    return Colligation::split(full, 1);
}

ModelTriple z2_permutation_triple() {
    Matrix u = Matrix::Zero(3, 3);
    u(1, 0) = 1;
    u(2, 1) = 1;
    u(0, 2) = 1;
    Matrix p = Matrix::Zero(3, 3);
    p(0, 0) = 1;
    return ModelTriple(std::move(p), std::move(u));
}

Colligation mobius_colligation(cplx a) {
    if (std::abs(a) >= 1.0) throw Error(ErrorCode::InvalidInput, "need |a| < 1");
    const double r = std::sqrt(1.0 - std::norm(a));
    Matrix full(2, 2);
    full << -a, r, r, std::conj(a);
    return Colligation::split(full, 1);
}

ModelTuple power_tuple(const std::vector<std::size_t>& exponents) {
    const std::size_t n = std::accumulate(exponents.begin(), exponents.end(), std::size_t{0});
    if (n < 1) throw Error(ErrorCode::InvalidInput, "exponents must not all vanish");
    const auto nn = idx(n);
    Matrix shift = Matrix::Zero(nn, nn);
    for (Eigen::Index j = 0; j < nn; ++j) shift((j + 1) % nn, j) = 1;

    std::vector<Matrix> ps, us;
    for (auto k : exponents) {
        Matrix p = Matrix::Zero(nn, nn);
        p.topLeftCorner(idx(k), idx(k)).setIdentity();
        Matrix u = identity(n);
        for (std::size_t r = 0; r < k; ++r) u = shift * u;
        ps.push_back(std::move(p));
        us.push_back(std::move(u));
    }
    return ModelTuple(std::move(ps), std::move(us));
}

Matrix random_projection(std::size_t n, std::size_t rank, Rng& rng) {
    const Matrix q = random_unitary(n, rng);
    const Matrix qr = q.leftCols(idx(rank));
    return qr * qr.adjoint();
}

ModelTriple random_triple(std::size_t n, Rng& rng) {
    if (n < 2) throw Error(ErrorCode::InvalidInput, "random_triple needs n >= 2");
    std::uniform_int_distribution<std::size_t> pick(1, n - 1);
    const std::size_t rank = pick(rng);
    Matrix p = random_projection(n, rank, rng);
    Matrix u = random_unitary(n, rng);
    return ModelTriple(std::move(p), std::move(u));
}

Colligation random_colligation(std::size_t dim_e, std::size_t dim_h, Rng& rng) {
    return Colligation::split(random_unitary(dim_e + dim_h, rng), dim_e);
}

}  // namespace distvar
