#include <doctest.h>

#include "distvar/canonical.hpp"
#include "distvar/catalog.hpp"
#include "distvar/polydisc.hpp"
#include "distvar/symm.hpp"

using namespace distvar;

// The OpenMP path must reproduce the serial reference exactly.
TEST_SUITE("parallel") {

TEST_CASE("map_indexed ordering and error propagation") {
    const auto v = map_indexed(100, Exec::parallel, [](std::size_t k) { return k * k; });
    for (std::size_t k = 0; k < v.size(); ++k) CHECK(v[k] == k * k);
    const auto boom = [](std::size_t k) -> int {
        if (k == 7 || k == 40) throw std::runtime_error(std::to_string(k));
        return 0;
    };
    try {
        map_indexed(64, Exec::parallel, boom);
        FAIL("no exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()) == "7");
    }
}

TEST_CASE("derive_seed spreads indices") {
    CHECK(derive_seed(0, 0) != derive_seed(0, 1));
    CHECK(derive_seed(1, 0) != derive_seed(0, 0));
}

TEST_CASE("fiber sampling") {
    GridSpec g;
    g.radii = 4;
    g.angles = 10;
    for (const ModelTriple& t : {neil_triple(), block4_triple()}) {
        const auto s = sample_points(t, g, 3, 1e-8, kEpsTorus, Exec::serial);
        const auto p = sample_points(t, g, 3, 1e-8, kEpsTorus, Exec::parallel);
        REQUIRE(s.size() == p.size());
        for (std::size_t k = 0; k < s.size(); ++k) CHECK(s[k].coords == p[k].coords);
    }
    const ModelTuple tup = power_tuple({1, 2, 1});
    const auto s = sample_poly(tup, g, 3, 1e-8, kEpsTorus, Exec::serial);
    const auto p = sample_poly(tup, g, 3, 1e-8, kEpsTorus, Exec::parallel);
    REQUIRE(s.size() == p.size());
    for (std::size_t k = 0; k < s.size(); ++k) CHECK(s[k].coords == p[k].coords);
}

TEST_CASE("numerical radius, kernel frame, xi and nu sweep") {
    Rng rng(17);
    const Matrix a = Matrix::Random(7, 7);
    CHECK(numerical_radius(a, 1e-10, Exec::serial) == numerical_radius(a, 1e-10, Exec::parallel));

    const RationalInnerFn psi = RationalInnerFn::create(random_colligation(2, 3, rng));
    const auto nodes = kernel_nodes(20, 1);
    CHECK(kernel_frame(psi, nodes, kRankTol, Exec::serial).gram ==
          kernel_frame(psi, nodes, kRankTol, Exec::parallel).gram);
    CHECK(xi_extract(psi, 1e-8, Exec::serial).coeffs == xi_extract(psi, 1e-8, Exec::parallel).coeffs);
    GridSpec g;
    g.radii = 3;
    g.angles = 9;
    CHECK(nu_sweep(psi, g, kCompatMargin, Exec::serial).max_nu ==
          nu_sweep(psi, g, kCompatMargin, Exec::parallel).max_nu);

    const SymmSample ss = sample_symm(diagonal_triple(), {}, kEpsTorus, Exec::serial);
    const SymmSample sp = sample_symm(diagonal_triple(), {}, kEpsTorus, Exec::parallel);
    REQUIRE(ss.points.size() == sp.points.size());
    for (std::size_t k = 0; k < ss.points.size(); ++k) CHECK(ss.points[k].s == sp.points[k].s);
}

}
