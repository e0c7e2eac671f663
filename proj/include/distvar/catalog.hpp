#pragma once

// Named fixtures and seeded random generators.

#include <random>
#include <vector>

#include "distvar/model.hpp"

namespace distvar {

/// P = diag(1,0), U = [[0,1],[1,0]]; variety {(z,z)}.
ModelTriple diagonal_triple();

/// P = diag(1,0), U = I; variety {(z,1)} ∪ {(1,z)}.
ModelTriple identity_projection_triple();

/// P = diag(P1,P1), U = diag(I2, swap).
ModelTriple block4_triple();

/// Dimension m+n, P onto the first m coordinates, U* = [A B; C D] with
/// A the down-shift on C^m, B = e1 e1ᵀ, C = e_n e_mᵀ, D the up-shift on
/// C^n. Variety {z1^n = z2^m}.
ModelTriple generalized_neil(std::size_t n, std::size_t m);

/// generalized_neil(3, 2): the permutation triple on C^5.
ModelTriple neil_triple();

/// P = diag(P1,P1), U = diag(swap, i·swap).
ModelTriple perturbed_royal_triple();

/// P = diag(P1,P1), U = diag(U_λ, U_0) with
/// U_λ = [[λ, r],[−r, conj λ]], r = sqrt(1−|λ|²); F = diag(λ, λ, 0, 0).
ModelTriple diag_lambda_triple(cplx lambda);

/// A = 0, B = [0 1], C = [1; 0], D = [[0,0],[1,0]]; Ψ(z) = z².
Colligation z2_colligation();

/// A = 0, B = [1 0], C = [0; 1], D = [[0,1],[0,0]]; also Ψ(z) = z².
Colligation z2_colligation_alt();

/// C^3, P onto the first coordinate, U the permutation matrix of (231).
ModelTriple z2_permutation_triple();

/// [[−a, r],[r, conj a]]; Ψ(z) = (z − a)/(1 − conj(a) z).
Colligation mobius_colligation(cplx a);

/// Φi(z) = S(z)^{k_i} on C^n, n = Σk_i, where S(z) = (P^⊥ + zP)C with C the
/// cyclic shift and P onto e_0. Pure whenever the exponents sum to n.
ModelTuple power_tuple(const std::vector<std::size_t>& exponents);

using Rng = std::mt19937_64;

Matrix random_projection(std::size_t n, std::size_t rank, Rng& rng);

/// Random triple with 1 ≤ rank P ≤ n−1 (n ≥ 2).
ModelTriple random_triple(std::size_t n, Rng& rng);

Colligation random_colligation(std::size_t dim_e, std::size_t dim_h, Rng& rng);

}  // namespace distvar
