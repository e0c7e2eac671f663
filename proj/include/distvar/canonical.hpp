#pragma once

// Canonical model triple of a rational inner function from the
// de Branges-Rovnyak kernel, and unitary equivalence of model triples.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "distvar/inner.hpp"

namespace distvar {

struct KernelFrame {
    std::vector<cplx> nodes;
    Matrix directions;  // orthonormal basis of E (columns)
    Matrix gram;        // entry ((j,a),(k,b)) = e_a* K(w_j, w_k) e_b
    std::size_t rank = 0;
    Matrix coord_map;   // rank × (nodes·dim_e): coordinates of K(·, w_j)e_a
};

struct CanonicalModel {
    ModelTriple triple;
    KernelFrame frame;
    double holdout_residual = 0.0;  // max ‖realize − Ψ‖ over held-out points
};

inline constexpr double kRankTol = 1e-8;

/// Nodes on radii 0.4 and 0.7 (alternating), equally spaced angles with
/// seeded jitter.
std::vector<cplx> kernel_nodes(std::size_t count, std::uint64_t seed);

KernelFrame kernel_frame(const RationalInnerFn& psi, std::span<const cplx> nodes,
                         double tol_rank = kRankTol, Exec exec = Exec::parallel);

/// Throws InvalidInput when node_count < 2·(dim_e + dim_h),
/// RankDeficiencyUnstable, DefectMismatch.
CanonicalModel canonical_triple(const RationalInnerFn& psi, std::size_t node_count = 24,
                                std::uint64_t seed = 0, double tol_rank = kRankTol,
                                Exec exec = Exec::parallel);

enum class Equivalence { Equivalent, NotEquivalent, Undetermined };
std::string_view to_string(Equivalence e);

struct EquivalenceResult {
    Equivalence verdict = Equivalence::Undetermined;
    std::optional<Matrix> witness;  // W with W P1 = P2 W and W U1 = U2 W
    std::size_t kernel_dim = 0;
};

EquivalenceResult unitary_equivalence(const ModelTriple& t1, const ModelTriple& t2,
                                      double tol = 1e-8, std::uint64_t seed = 0);

}  // namespace distvar
