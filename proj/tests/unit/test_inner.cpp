#include <doctest.h>

#include "distvar/catalog.hpp"
#include "distvar/inner.hpp"
#include "oracles.hpp"
#include "unit/helpers.hpp"

using namespace distvar;

namespace {

cplx coeff(const BivariatePoly& p, std::size_t i, std::size_t j) {
    return i < p.coeffs.size() && j < p.coeffs[i].size() ? p.coeffs[i][j] : cplx(0.0);
}

}  // namespace

TEST_SUITE("inner") {

TEST_CASE("transfer_eval matches the Neumann series") {
    Rng rng(4);
    const Colligation c = random_colligation(2, 3, rng);
    for (const cplx z : {cplx(0.0), cplx(0.5, -0.2), cplx(0.0, 0.8)})
        CHECK((transfer_eval(c, z) - oracle::transfer_series(c.a, c.b, c.c, c.d, z)).norm() < 1e-10);
}

TEST_CASE("inner functions are unitary on the circle and contractive inside") {
    Rng rng(6);
    const RationalInnerFn psi = RationalInnerFn::create(random_colligation(3, 4, rng));
    for (int k = 0; k < 12; ++k) {
        const cplx z = std::polar(1.0, 0.5 + k);
        CHECK(unitary_defect(psi.eval(z)) < 1e-10);
        CHECK(operator_norm(psi.eval(0.8 * z)) <= 1.0 + 1e-10);
    }
    for (const cplx a : psi.poles()) CHECK(std::abs(a) > 1.0);
}

TEST_CASE("Mobius numerator and denominator") {
    const RationalInnerFn psi = RationalInnerFn::create(mobius_colligation(0.5));
    REQUIRE(psi.q().size() == 2);
    CHECK(std::abs(psi.q()[1] + 0.5) < 1e-12);
    REQUIRE(psi.poles().size() == 1);
    CHECK(std::abs(psi.poles()[0] - 2.0) < 1e-10);

    const BivariatePoly xi = xi_extract(psi);
    CHECK(std::abs(coeff(xi, 1, 1) - 1.0) < 1e-10);
    CHECK(std::abs(coeff(xi, 1, 0) - 2.0) < 1e-10);
    CHECK(std::abs(coeff(xi, 0, 0) + 1.0) < 1e-10);
    CHECK(std::abs(coeff(xi, 0, 1) + 2.0) < 1e-10);
}

TEST_CASE("xi of the Neil triple is z1^3 - z2^2") {
    const BivariatePoly xi = xi_extract(RationalInnerFn::from_triple(neil_triple()));
    CHECK(xi.deg1() == 3);
    CHECK(xi.deg2() == 2);
    for (std::size_t i = 0; i <= 3; ++i)
        for (std::size_t j = 0; j <= 2; ++j) {
            const cplx want = (i == 3 && j == 0) ? 1.0 : (i == 0 && j == 2) ? -1.0 : 0.0;
            CHECK(std::abs(coeff(xi, i, j) - want) < 1e-8);
        }
}

TEST_CASE("xi of z squared") {
    const BivariatePoly xi = xi_extract(RationalInnerFn::create(z2_colligation()));
    CHECK(std::abs(coeff(xi, 2, 0) - 1.0) < 1e-10);
    CHECK(std::abs(coeff(xi, 0, 1) + 1.0) < 1e-10);
    CHECK(std::abs(xi.eval(0.3, 0.09)) < 1e-12);
}

TEST_CASE("xi vanishes on the fibers of a random inner function") {
    Rng rng(12);
    const RationalInnerFn psi = RationalInnerFn::create(random_colligation(2, 3, rng));
    const BivariatePoly xi = xi_extract(psi);
    for (const cplx z1 : {cplx(0.2, 0.1), cplx(-0.6, 0.3)})
        for (const cplx z2 : psi_fiber(psi, z1))
            CHECK(std::abs(xi.eval(z1, z2)) < 1e-8 * xi.abs_eval(z1, z2));
    CHECK(essential_symmetry_check(xi).ok);
}

TEST_CASE("direct sums of Mobius maps deflate") {
    Colligation c;
    c.dim_e = 2;
    c.dim_h = 2;
    const Colligation m1 = mobius_colligation(0.3), m2 = mobius_colligation(cplx(0, -0.4));
    c.a = Matrix::Zero(2, 2);
    c.b = Matrix::Zero(2, 2);
    c.c = Matrix::Zero(2, 2);
    c.d = Matrix::Zero(2, 2);
    c.a(0, 0) = m1.a(0, 0);
    c.a(1, 1) = m2.a(0, 0);
    c.b(0, 0) = m1.b(0, 0);
    c.b(1, 1) = m2.b(0, 0);
    c.c(0, 0) = m1.c(0, 0);
    c.c(1, 1) = m2.c(0, 0);
    c.d(0, 0) = m1.d(0, 0);
    c.d(1, 1) = m2.d(0, 0);
    const BivariatePoly xi = xi_extract(RationalInnerFn::create(c));
    CHECK(xi.deg1() == 2);
    CHECK(xi.deg2() == 2);
}

TEST_CASE("membership in W_Psi") {
    const RationalInnerFn psi = RationalInnerFn::create(z2_colligation());
    CHECK(is_member_psi(psi, 0.5, 0.25).member);
    CHECK_FALSE(is_member_psi(psi, 0.5, 0.5).member);
}

TEST_CASE("nu sweep") {
    GridSpec g;
    g.radii = 4;
    g.angles = 12;
    const NuSweep s = nu_sweep(RationalInnerFn::from_triple(neil_triple()), g);
    CHECK(s.max_nu < 1.0);
    CHECK(s.certified);
}

TEST_CASE("essential symmetry") {
    BivariatePoly good;  // (z1 − z2)(z1 z2 − 1) = z1²z2 − z1 − z1z2² + z2
    good.coeffs = {{0.0, 1.0, 0.0}, {-1.0, 0.0, -1.0}, {0.0, 1.0, 0.0}};
    const SymmetryResult r = essential_symmetry_check(good);
    CHECK(r.ok);
    REQUIRE(r.c.has_value());
    CHECK(std::abs(std::abs(*r.c) - 1.0) < 1e-12);
    BivariatePoly bad;  // z1 − 2
    bad.coeffs = {{-2.0}, {1.0}};
    CHECK_FALSE(essential_symmetry_check(bad).ok);
}

TEST_CASE("non-unitary colligations are rejected") {
    Colligation c = mobius_colligation(0.5);
    c.d(0, 0) = 0.9;
    CHECK(error_of([&] { RationalInnerFn::create(c); }) == ErrorCode::NotUnitary);
}

}
