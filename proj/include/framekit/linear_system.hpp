#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "framekit/rational.hpp"

namespace framekit {

/// Exact linear system A x = b over the rationals, kept in reduced row
/// echelon form as equations are added one at a time.
///
/// Adding an equation that contradicts the current system is rejected and
/// leaves the system unchanged, so the caller learns exactly which equation
/// made it infeasible.
class IncrementalSystem {
public:
    explicit IncrementalSystem(std::size_t unknowns) : unknowns_(unknowns) {}

    std::size_t unknowns() const { return unknowns_; }
    std::size_t rank() const { return rows_.size(); }

    /// Returns false (and leaves the system untouched) if the equation is
    /// inconsistent with those already accepted.
    bool add(std::vector<Rational> coefficients, Rational rhs);

    /// Whether the equation is already implied by the accepted ones.
    bool implies(const std::vector<Rational>& coefficients, const Rational& rhs) const;

    /// Particular solution with every free variable set to zero.
    std::vector<Rational> basic_solution() const;

    /// One basis vector per free variable, ordered by free column.
    std::vector<std::vector<Rational>> nullspace() const;

    std::vector<std::size_t> free_columns() const;

private:
    struct Row {
        std::size_t pivot;
        std::vector<Rational> coeffs;
        Rational rhs;
    };

    /// Reduce an equation against the current pivots.
    void reduce(std::vector<Rational>& coeffs, Rational& rhs) const;

    std::size_t unknowns_;
    std::vector<Row> rows_;
};

/// Nullspace basis of a dense matrix (rows x cols). Convenience for callers
/// that only need a kernel.
std::vector<std::vector<Rational>> nullspace(const std::vector<std::vector<Rational>>& matrix, std::size_t cols);

}  // namespace framekit
