#pragma once

#include <string>
#include <vector>

#include "cleanwords/rational.hpp"

namespace cleanwords {

/// One off-diagonal contribution: coeff * unknown. Coefficients produced by
/// the enumerator are monomials x*y^alpha; alpha may be negative, so they
/// live in the fraction field rather than the polynomial ring.
struct LinearTerm {
    int unknown;
    RationalFunction coeff;
};

/// Row i encodes  unknown_i = constant + sum_j coeff_j * unknown_{u_j}.
struct LinearRow {
    std::vector<LinearTerm> terms;
    Polynomial constant;
};

/// A square sparse system over the rational-function field.
struct LinearSystem {
    VarsPtr vars;
    std::vector<std::string> unknown_ids; ///< display names, index-aligned with rows
    std::vector<LinearRow> rows;

    int size() const { return static_cast<int>(rows.size()); }
};

struct Solution {
    std::vector<RationalFunction> values; ///< index-aligned with unknown_ids
};

/// Sparse Gaussian elimination over the fraction field, pivot chosen by
/// Markowitz count with ties broken by unknown order. Every row is verified
/// by back-substitution before returning. Throws VerificationError naming
/// the pivot stage when the matrix is singular.
Solution solve(const LinearSystem& system);

/// True iff every equation holds exactly (rf_equal) under `sol`.
bool verify(const LinearSystem& system, const Solution& sol);

} // namespace cleanwords
