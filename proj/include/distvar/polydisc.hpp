#pragma once

// One-dimensional varieties of the polydisc from pure model tuples.

#include <cstdint>
#include <span>
#include <vector>

#include "distvar/bidisc.hpp"

namespace distvar {

std::vector<VarietyPoint> tuple_fiber(const ModelTuple& t, cplx z, std::uint64_t seed,
                                      double tol = 1e-8, double eps_t = kEpsTorus);

/// common_kernel_defect of {Φi(z1···zd) − zi I}.
Membership is_member_poly(const ModelTuple& t, std::span<const cplx> coords,
                          double tol = 1e-6);

/// Reflection (1/conj zi)_i membership for points with nonzero coordinates.
SymmetryReport symmetry_check_poly(const ModelTuple& t, std::span<const VarietyPoint> pts,
                                   double tol = 1e-6);

std::vector<VarietyPoint> sample_poly(const ModelTuple& t, const GridSpec& grid,
                                      std::uint64_t seed, double tol = 1e-8,
                                      double eps_t = kEpsTorus, Exec exec = Exec::parallel);

struct TupleCertificate {
    std::vector<double> max_nu;   // per index, over the compatibility grid
    std::vector<double> spreads;  // per index, of z ↦ ν(Pj^⊥Uj + zUj*Pj)
    bool compatible = false;
    bool nonconstant = false;
    bool pure = false;
    std::size_t open_points = 0;
    std::size_t mixed_points = 0;
    std::size_t max_fiber_size = 0;  // with multiplicity
    std::size_t max_distinct = 0;    // distinct tuples per fiber
    Verdict verdict = Verdict::Undetermined;
    std::vector<CertificateRecord> evidence;
    std::vector<VarietyPoint> points;
};

TupleCertificate certify_poly(const ModelTuple& t, const GridSpec& grid = {},
                              std::uint64_t seed = 0, const SampleOptions& opt = {});

}  // namespace distvar
