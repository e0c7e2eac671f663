#include <doctest.h>

#include "distvar/catalog.hpp"
#include "distvar/errors.hpp"
#include "distvar/polydisc.hpp"

using namespace distvar;

TEST_SUITE("polydisc") {

TEST_CASE("power tuple fibers") {
    const ModelTuple t = power_tuple({1, 2, 1});
    for (const cplx z : {cplx(0.3), cplx(-0.1, 0.5)}) {
        const auto f = tuple_fiber(t, z, 0);
        CHECK(f.size() == t.dim());
        for (const auto& p : f) {
            CHECK(std::abs(p.coords[0] * p.coords[1] * p.coords[2] - z) < 1e-8);
            CHECK(is_member_poly(t, p.coords).member);
        }
    }
}

TEST_CASE("membership rejects wrong arity and off-variety points") {
    const ModelTuple t = power_tuple({1, 1, 1});
    const std::vector<cplx> two{0.5, 0.5};
    CHECK_THROWS_AS(is_member_poly(t, two), Error);
    const std::vector<cplx> off{0.5, 0.5, 0.1};
    CHECK_FALSE(is_member_poly(t, off).member);
}

TEST_CASE("certify pure tuples") {
    GridSpec g;
    g.radii = 3;
    g.angles = 8;
    const TupleCertificate c = certify_poly(power_tuple({1, 1, 1}), g);
    CHECK(c.pure);
    CHECK(c.max_fiber_size == 3);
    CHECK(c.mixed_points == 0);
    CHECK(c.verdict == Verdict::Distinguished);
    CHECK(symmetry_check_poly(power_tuple({1, 1, 1}), c.points).ok);
}

}
