#pragma once

// Model triples (n, P, U), model tuples, BCL pencils, transfer-function
// realization and unitary colligations.

#include <string>
#include <utility>
#include <vector>

#include "distvar/linalg.hpp"

namespace distvar {

struct ValidationItem {
    std::string name;
    double defect = 0.0;
    double tol = 0.0;
    bool ok = true;
};

struct ValidationReport {
    std::vector<ValidationItem> items;
    bool ok = true;

    void add(std::string name, double defect, double tol);
    void add_flag(std::string name, bool ok);
};

/// Orthonormal basis (as columns) of the range of a projection, by
/// column-pivoted modified Gram-Schmidt with lowest-index tie-break.
Matrix range_basis_of(const Matrix& p);

class ModelTriple {
public:
    ModelTriple(Matrix p, Matrix u);

    std::size_t dim() const { return static_cast<std::size_t>(p_.rows()); }
    const Matrix& p() const { return p_; }
    const Matrix& u() const { return u_; }
    Matrix p_perp() const { return identity(dim()) - p_; }

    /// n × rank(P), fixed at construction.
    const Matrix& range_basis() const { return basis_; }
    std::size_t rank() const { return static_cast<std::size_t>(basis_.cols()); }

private:
    Matrix p_;
    Matrix u_;
    Matrix basis_;
};

ValidationReport validate_triple(const ModelTriple& t, double tol = 1e-10);

/// (Φ1(z), Φ2(z)) = ((P^⊥ + zP)U, U*(P + zP^⊥)).
std::pair<Matrix, Matrix> bcl_pair(const ModelTriple& t, cplx z);

/// Ψ(z) = P(I − zU*P^⊥)^{-1}U*P on Ran P, in the basis range_basis().
/// Allowed off the disc whenever the resolvent exists.
Matrix realize(const ModelTriple& t, cplx z);

struct Colligation {
    std::size_t dim_e = 0;
    std::size_t dim_h = 0;
    Matrix a, b, c, d;

    Matrix assembled() const;
    static Colligation split(const Matrix& full, std::size_t dim_e);
};

/// U* = [A B; C D], P onto the E summand. Throws NotUnitary.
ModelTriple triple_from_colligation(const Colligation& c, double tol = 1e-10);

/// Inverse direction: U* written in the basis (Ran P, ker P).
Colligation colligation_from_triple(const ModelTriple& t);

/// F = PU + U*P^⊥.
Matrix fundamental_operator(const ModelTriple& t);

class ModelTuple {
public:
    ModelTuple(std::vector<Matrix> ps, std::vector<Matrix> us);

    std::size_t dim() const { return static_cast<std::size_t>(ps_.front().rows()); }
    std::size_t d() const { return ps_.size(); }
    const std::vector<Matrix>& ps() const { return ps_; }
    const std::vector<Matrix>& us() const { return us_; }

    /// Max coefficient defect of Φ1···Φd against zI (interpolated at
    /// d+1 roots of unity) and the derived flag at 1e-10.
    double purity_defect() const { return purity_defect_; }
    bool pure() const { return pure_; }

private:
    std::vector<Matrix> ps_;
    std::vector<Matrix> us_;
    double purity_defect_ = 0.0;
    bool pure_ = false;
};

/// Φi(z) = Pi^⊥Ui + zPiUi for every index.
std::vector<Matrix> tuple_pencils(const ModelTuple& t, cplx z);

ValidationReport validate_tuple(const ModelTuple& t, double tol = 1e-10);

}  // namespace distvar
