#include <doctest.h>

#include "distvar/canonical.hpp"
#include "distvar/catalog.hpp"
#include "unit/helpers.hpp"

using namespace distvar;

TEST_SUITE("canonical") {

TEST_CASE("kernel nodes are seeded and inside the disc") {
    const auto a = kernel_nodes(24, 1), b = kernel_nodes(24, 1), c = kernel_nodes(24, 2);
    CHECK(a == b);
    CHECK(a != c);
    for (const cplx w : a) CHECK(std::abs(w) < 0.75);
}

TEST_CASE("kernel Gram is Hermitian positive semidefinite with rank dim_h") {
    Rng rng(21);
    const RationalInnerFn psi = RationalInnerFn::create(random_colligation(2, 3, rng));
    const auto nodes = kernel_nodes(20, 0);
    const KernelFrame f = kernel_frame(psi, nodes);
    CHECK((f.gram - f.gram.adjoint()).norm() < 1e-12);
    Eigen::SelfAdjointEigenSolver<Matrix> es(f.gram);
    CHECK(es.eigenvalues().minCoeff() > -1e-10);
    CHECK(f.rank == 3);
}

TEST_CASE("canonical model of z squared") {
    const CanonicalModel m = canonical_triple(RationalInnerFn::create(z2_colligation()));
    CHECK(m.triple.dim() == 3);
    CHECK(validate_triple(m.triple, 1e-8).ok);
    CHECK(m.holdout_residual < 1e-6);
    for (const cplx z : {cplx(0.3, 0.4), cplx(-0.5)})
        CHECK(std::abs(realize(m.triple, z)(0, 0) - z * z) < 1e-8);
    const EquivalenceResult e = unitary_equivalence(m.triple, z2_permutation_triple());
    CHECK(e.verdict == Equivalence::Equivalent);
    REQUIRE(e.witness.has_value());
    CHECK(unitary_defect(*e.witness) < 1e-8);
}

TEST_CASE("canonical round trip of random colligations") {
    Rng rng(31);
    for (std::size_t e = 1; e <= 2; ++e)
        for (std::size_t h = 1; h <= 3; ++h) {
            const RationalInnerFn psi = RationalInnerFn::create(random_colligation(e, h, rng));
            const CanonicalModel m = canonical_triple(psi);
            CHECK(m.triple.dim() == e + psi.dim_h());
            CHECK(m.holdout_residual < 1e-6);
        }
}

TEST_CASE("too few nodes") {
    const RationalInnerFn psi = RationalInnerFn::create(z2_colligation());
    CHECK(error_of([&] { canonical_triple(psi, 4); }) == ErrorCode::InvalidInput);
}

TEST_CASE("unitary equivalence") {
    Rng rng(5);
    const ModelTriple t = random_triple(4, rng);
    const Matrix w = random_unitary(4, rng);
    const ModelTriple moved(w * t.p() * w.adjoint(), w * t.u() * w.adjoint());
    const EquivalenceResult r = unitary_equivalence(t, moved);
    CHECK(r.verdict == Equivalence::Equivalent);
    REQUIRE(r.witness.has_value());
    CHECK((*r.witness * t.p() - moved.p() * *r.witness).norm() < 1e-8);
    CHECK((*r.witness * t.u() - moved.u() * *r.witness).norm() < 1e-8);

    CHECK(unitary_equivalence(diagonal_triple(), identity_projection_triple()).verdict ==
          Equivalence::NotEquivalent);
    CHECK(unitary_equivalence(diagonal_triple(), neil_triple()).verdict ==
          Equivalence::NotEquivalent);
    // Same Psi, different colligations.
    CHECK(unitary_equivalence(triple_from_colligation(z2_colligation()),
                              triple_from_colligation(z2_colligation_alt()))
              .verdict == Equivalence::Equivalent);
}

}
