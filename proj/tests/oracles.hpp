#pragma once

// Independent reference computations for tests. Nothing here calls the
// library's numerical kernels.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// max |<Ah,h>| over a grid of unit vectors h = (cos t, e^{iφ} sin t).
inline double numerical_radius_2x2(const Matrix& a, int steps = 1200) {
    double best = 0.0;
    for (int i = 0; i <= steps; ++i) {
        const double t = 0.5 * std::numbers::pi * i / steps;
        for (int k = 0; k < steps; ++k) {
            const double phi = 2.0 * std::numbers::pi * k / steps;
            Eigen::Vector2cd h(std::cos(t), std::polar(std::sin(t), phi));
            best = std::max(best, std::abs(h.dot(a * h)));
        }
    }
    return best;
}

// Lower bound on ν(a) from random unit vectors.
inline double numerical_radius_sampled(const Matrix& a, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    double best = 0.0;
    for (int s = 0; s < samples; ++s) {
        Eigen::VectorXcd h(a.rows());
        for (Eigen::Index i = 0; i < h.size(); ++i) h(i) = {g(rng), g(rng)};
        h.normalize();
        best = std::max(best, std::abs(h.dot(a * h)));
    }
    return best;
}

// A + zB(I − zD)^{-1}C by a truncated Neumann series (|z|·‖D‖ < 1).
inline Matrix transfer_series(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d,
                              cplx z, int terms = 400) {
    Matrix acc = Matrix::Zero(d.rows(), c.cols());
    Matrix pw = Matrix::Identity(d.rows(), d.cols());
    for (int k = 0; k < terms; ++k) {
        acc += pw * c;
        pw = (z * d * pw).eval();
    }
    return a + z * b * acc;
}

// Smallest singular value of a − λI via the full SVD.
inline double sigma_min(const Matrix& a) {
    Eigen::JacobiSVD<Matrix> svd(a);
    return svd.singularValues().tail(1)(0);
}

}  // namespace oracle
