#pragma once

// Dense complex linear algebra: Schur form, joint triangularization of
// commuting families, numerical radius, and common-kernel tests.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "distvar/sweep.hpp"

namespace distvar {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

struct SchurForm {
    Matrix q;  // unitary
    Matrix t;  // upper triangular, a = q t q*
    std::size_t source_dim = 0;
};

struct Triangularization {
    Matrix q;
    std::vector<Matrix> ts;  // q* A_i q, upper triangular within tolerance
};

/// Joint eigenvalues of a commuting family, one tuple per dimension
/// (multiplicity by repetition).
struct JointSpectrum {
    std::vector<std::vector<cplx>> points;
    std::size_t dim = 0;
};

inline constexpr double kClusterTol = 1e-7;
inline constexpr int kJointRetries = 20;
inline constexpr int kNumRadGrid = 720;

// Basic helpers.
Matrix identity(std::size_t n);
bool all_finite(const Matrix& a);
double operator_norm(const Matrix& a);
double strict_lower_max(const Matrix& a);
double unitary_defect(const Matrix& a);  // ‖a*a − I‖_F
void require_square(const Matrix& a, const char* what);

SchurForm schur(const Matrix& a, double tol = 1e-12);

/// Eigenvalues with multiplicity (diagonal of the Schur form).
std::vector<cplx> eigenvalues(const Matrix& a);

/// Groups eigenvalues of a matrix with norm `scale` into clusters. Values
/// within kClusterTol·scale always merge; larger groups merge only while
/// their spread is consistent with a perturbed defective eigenvalue,
/// which spreads like scale·ε^(1/k) for a k-fold Jordan block.
std::vector<std::vector<std::size_t>> cluster_eigenvalues(std::span<const cplx> values,
                                                          double scale);

Triangularization joint_triangularize(std::span<const Matrix> family, std::uint64_t seed,
                                      double tol = 1e-8);

JointSpectrum joint_eigenvalues(std::span<const Matrix> family, std::uint64_t seed,
                                double tol = 1e-8);

/// ν(a) = max_θ λ_max((e^{iθ}a + e^{−iθ}a*)/2), by a 720-point θ grid
/// with golden-section refinement of the promising cells.
double numerical_radius(const Matrix& a, double tol = 1e-10, Exec exec = Exec::serial);

/// Smallest singular value of the vertically stacked family; 0 iff the
/// members share a kernel vector.
double common_kernel_defect(std::span<const Matrix> family);

/// Right singular vector for the smallest singular value of the stack.
Vector common_kernel_vector(std::span<const Matrix> family);

/// Haar-distributed unitary (QR of a complex Ginibre matrix with phase fix).
template <class Rng>
Matrix random_unitary(std::size_t n, Rng& rng);

}  // namespace distvar

#include "distvar/detail/random_unitary.ipp"
