#include <doctest.h>

#include "distvar/catalog.hpp"
#include "distvar/linalg.hpp"
#include "oracles.hpp"
#include "unit/helpers.hpp"

using namespace distvar;

TEST_SUITE("linalg") {

TEST_CASE("schur reconstructs and is triangular") {
    Rng rng(1);
    for (std::size_t n : {1u, 2u, 5u, 9u}) {
        const Matrix a = Matrix::Random(n, n);
        const SchurForm s = schur(a);
        CHECK(unitary_defect(s.q) < 1e-12);
        CHECK(strict_lower_max(s.t) == 0.0);
        CHECK((s.q * s.t * s.q.adjoint() - a).norm() < 1e-12 * (1 + a.norm()));
    }
}

TEST_CASE("schur rejects bad input") {
    CHECK(error_of([] { schur(Matrix::Zero(2, 3)); }) == ErrorCode::NonSquare);
    Matrix a = Matrix::Identity(2, 2);
    a(0, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK(error_of([&] { schur(a); }) == ErrorCode::InvalidInput);
}

TEST_CASE("cluster_eigenvalues") {
    const std::vector<cplx> v{1.0, 2.0, 1.0 + 1e-10};
    const auto c = cluster_eigenvalues(v, 2.0);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == std::vector<std::size_t>{0, 2});
    CHECK(c[1] == std::vector<std::size_t>{1});
}

TEST_CASE("joint triangularization of polynomials in a Jordan-type matrix") {
    Matrix j = Matrix::Zero(4, 4);
    j(0, 1) = 1.0;
    j(1, 2) = 1.0;
    j.diagonal() << 0.3, 0.3, 0.3, -0.5;
    const Matrix a = j * j + 2.0 * j;
    const Matrix b = j * j * j - identity(4);
    const std::vector<Matrix> fam{j, a, b};
    const Triangularization tr = joint_triangularize(fam, 3);
    CHECK(unitary_defect(tr.q) < 1e-10);
    for (std::size_t i = 0; i < fam.size(); ++i) {
        CHECK(strict_lower_max(tr.ts[i]) < 1e-8 * operator_norm(fam[i]));
        CHECK((tr.q * tr.ts[i] * tr.q.adjoint() - fam[i]).norm() < 1e-10 * (1 + fam[i].norm()));
    }
    const JointSpectrum js = joint_eigenvalues(fam, 3);
    REQUIRE(js.points.size() == 4);
    for (const auto& pt : js.points) {
        // Each tuple is (λ, λ² + 2λ, λ³ − 1) for one eigenvalue λ of j.
        CHECK(std::abs(pt[1] - (pt[0] * pt[0] + 2.0 * pt[0])) < 1e-6);
        CHECK(std::abs(pt[2] - (pt[0] * pt[0] * pt[0] - 1.0)) < 1e-6);
    }
}

TEST_CASE("joint triangularization rejects non-commuting families") {
    Matrix a = Matrix::Zero(2, 2), b = Matrix::Zero(2, 2);
    a(0, 1) = 1.0;
    b(1, 0) = 1.0;
    const std::vector<Matrix> fam{a, b};
    CHECK(error_of([&] { joint_triangularize(fam, 0); }) == ErrorCode::NotCommuting);
}

TEST_CASE("numerical radius against oracles") {
    Matrix nil = Matrix::Zero(2, 2);
    nil(0, 1) = 2.0;
    CHECK(numerical_radius(nil) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(oracle::numerical_radius_2x2(nil) == doctest::Approx(1.0).epsilon(1e-5));

    Rng rng(5);
    for (int k = 0; k < 10; ++k) {
        const Matrix a = Matrix::Random(2, 2);
        CHECK(numerical_radius(a) == doctest::Approx(oracle::numerical_radius_2x2(a)).epsilon(1e-5));
    }
    for (std::size_t n : {3u, 6u}) {
        const Matrix a = Matrix::Random(n, n);
        const double nu = numerical_radius(a);
        CHECK(nu >= oracle::numerical_radius_sampled(a, 20000, 9) - 1e-12);
        CHECK(nu <= operator_norm(a) + 1e-12);
        CHECK(nu >= operator_norm(a) / 2 - 1e-12);
    }
    // Normal matrices: ν equals the spectral radius.
    const Matrix u = random_unitary(5, rng);
    Eigen::VectorXcd d(5);
    d << 0.2, cplx(0, -0.9), 0.5, cplx(0.3, 0.3), -0.1;
    const Matrix nrm = u * d.asDiagonal() * u.adjoint();
    CHECK(numerical_radius(nrm) == doctest::Approx(0.9).epsilon(1e-9));
}

TEST_CASE("common kernel") {
    Matrix a = Matrix::Random(3, 3), b = Matrix::Random(3, 3);
    Vector v = Vector::Random(3).normalized();
    a -= (a * v) * v.adjoint();
    b -= (b * v) * v.adjoint();
    const std::vector<Matrix> fam{a, b};
    CHECK(common_kernel_defect(fam) < 1e-12);
    const Vector w = common_kernel_vector(fam);
    CHECK(std::abs(std::abs(w.dot(v)) - 1.0) < 1e-10);
    const std::vector<Matrix> id{identity(3)};
    CHECK(common_kernel_defect(id) == doctest::Approx(1.0));
}

TEST_CASE("random_unitary is unitary and seeded") {
    Rng r1(42), r2(42);
    const Matrix u1 = random_unitary(6, r1), u2 = random_unitary(6, r2);
    CHECK(unitary_defect(u1) < 1e-12);
    CHECK(u1 == u2);
}

}
