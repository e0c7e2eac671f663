#include <doctest.h>

#include "distvar/catalog.hpp"
#include "distvar/model.hpp"
#include "oracles.hpp"
#include "unit/helpers.hpp"

using namespace distvar;

TEST_SUITE("model") {

TEST_CASE("catalog triples validate") {
    for (const ModelTriple& t : {diagonal_triple(), identity_projection_triple(), block4_triple(),
                                 neil_triple(), perturbed_royal_triple(),
                                 diag_lambda_triple(0.6), z2_permutation_triple(),
                                 generalized_neil(4, 3)})
        CHECK(validate_triple(t).ok);
}

TEST_CASE("validation flags bad triples") {
    Matrix p = Matrix::Zero(2, 2);
    p(0, 0) = 1.0;
    p(0, 1) = 0.5;
    const ModelTriple bad(p, identity(2));
    CHECK_FALSE(validate_triple(bad).ok);
    const ModelTriple nonunitary(diagonal_triple().p(), 2.0 * identity(2));
    CHECK_FALSE(validate_triple(nonunitary).ok);
    CHECK(error_of([] { ModelTriple(Matrix::Zero(2, 2), Matrix::Zero(3, 3)); }) ==
          ErrorCode::DimensionMismatch);
}

TEST_CASE("BCL pencils multiply to zI") {
    Rng rng(3);
    for (int k = 0; k < 10; ++k) {
        const ModelTriple t = random_triple(2 + k % 6, rng);
        for (const cplx z : {cplx(0.3, -0.2), cplx(-0.9, 0.1), cplx(2.0, 1.0)}) {
            const auto [f1, f2] = bcl_pair(t, z);
            CHECK((f1 * f2 - z * identity(t.dim())).norm() < 1e-12 * (1 + std::abs(z)));
            CHECK((f2 * f1 - z * identity(t.dim())).norm() < 1e-12 * (1 + std::abs(z)));
        }
    }
}

TEST_CASE("realize matches the transfer function of the colligation") {
    Rng rng(8);
    for (int k = 0; k < 8; ++k) {
        const ModelTriple t = random_triple(2 + k % 5, rng);
        const Colligation c = colligation_from_triple(t);
        for (const cplx z : {cplx(0.0), cplx(0.4, 0.3), cplx(-0.7, 0.0)}) {
            const Matrix want = oracle::transfer_series(c.a, c.b, c.c, c.d, z);
            CHECK((realize(t, z) - want).norm() < 1e-10);
        }
    }
}

TEST_CASE("realize of the (231) triple is z squared") {
    const ModelTriple t = z2_permutation_triple();
    for (const cplx z : {cplx(0.5), cplx(0.2, 0.7)})
        CHECK(std::abs(realize(t, z)(0, 0) - z * z) < 1e-14);
}

TEST_CASE("realize rejects P = 0") {
    const ModelTriple t(Matrix::Zero(2, 2), identity(2));
    CHECK(error_of([&] { realize(t, 0.5); }) == ErrorCode::EmptyRange);
}

TEST_CASE("colligation round trip") {
    Rng rng(2);
    const Colligation c = random_colligation(2, 3, rng);
    const ModelTriple t = triple_from_colligation(c);
    CHECK(validate_triple(t).ok);
    const Colligation back = colligation_from_triple(t);
    CHECK((back.assembled() - c.assembled()).norm() < 1e-12);
    Colligation bad = c;
    bad.a *= 2.0;
    CHECK(error_of([&] { triple_from_colligation(bad); }) == ErrorCode::NotUnitary);
}

TEST_CASE("generalized Neil permutation entries") {
    const Matrix u = neil_triple().u();
    for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {1, 4}, {2, 0}, {3, 2}, {4, 3}})
        CHECK(u(i, j) == cplx(1.0));
    CHECK(u.cwiseAbs().sum() == doctest::Approx(5.0));
}

TEST_CASE("fundamental operator of the diagonal triple") {
    Matrix want = Matrix::Zero(2, 2);
    want(0, 1) = 2.0;
    CHECK((fundamental_operator(diagonal_triple()) - want).norm() == 0.0);
}

TEST_CASE("power tuples are pure and validate") {
    for (const auto& ex : std::vector<std::vector<std::size_t>>{{1, 1, 1}, {1, 2, 1}, {2, 1, 1, 1}}) {
        const ModelTuple t = power_tuple(ex);
        CHECK(t.pure());
        CHECK(t.purity_defect() < 1e-10);
        CHECK(validate_tuple(t).ok);
    }
}

TEST_CASE("tuple checks") {
    const ModelTriple n = neil_triple();
    const Matrix pp = n.u() * n.p_perp() * n.u().adjoint();
    const ModelTuple impure({n.p(), pp, n.p()}, {n.u(), n.u().adjoint(), n.u()});
    CHECK_FALSE(impure.pure());
    CHECK_FALSE(validate_tuple(impure).ok);
    CHECK(error_of([&] { ModelTuple({n.p(), n.p()}, {n.u(), n.u()}); }) == ErrorCode::InvalidInput);
}

}
