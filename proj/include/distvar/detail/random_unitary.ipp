#pragma once

#include <random>

namespace distvar {

template <class Rng>
Matrix random_unitary(std::size_t n, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    const auto m = static_cast<Eigen::Index>(n);
    Matrix z(m, m);
    for (Eigen::Index j = 0; j < m; ++j)
        for (Eigen::Index i = 0; i < m; ++i) z(i, j) = cplx(g(rng), g(rng));
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ();
    const Matrix& r = qr.matrixQR();
    for (Eigen::Index k = 0; k < m; ++k) {
        const double a = std::abs(r(k, k));
        if (a > 0) q.col(k) *= r(k, k) / a;
    }
    return q;
}

}  // namespace distvar
