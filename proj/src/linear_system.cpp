#include "framekit/linear_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace framekit {

void IncrementalSystem::reduce(std::vector<Rational>& coeffs, Rational& rhs) const {
    for (const Row& row : rows_) {
        const Rational factor = coeffs[row.pivot];
        if (factor.is_zero()) continue;
        for (std::size_t j = 0; j < unknowns_; ++j) {
            if (!row.coeffs[j].is_zero()) coeffs[j] -= factor * row.coeffs[j];
        }
        rhs -= factor * row.rhs;
    }
}

bool IncrementalSystem::add(std::vector<Rational> coefficients, Rational rhs) {
    if (coefficients.size() != unknowns_) throw std::invalid_argument("equation width does not match unknown count");
    reduce(coefficients, rhs);
    auto lead = std::find_if(coefficients.begin(), coefficients.end(), [](const Rational& v) { return !v.is_zero(); });
    if (lead == coefficients.end()) return rhs.is_zero();

    const std::size_t pivot = static_cast<std::size_t>(lead - coefficients.begin());
    const Rational inv = coefficients[pivot].reciprocal();
    for (auto& v : coefficients) {
        if (!v.is_zero()) v *= inv;
    }
    rhs *= inv;

    // Keep the echelon form fully reduced in the new pivot column.
    for (Row& row : rows_) {
        const Rational factor = row.coeffs[pivot];
        if (factor.is_zero()) continue;
        for (std::size_t j = 0; j < unknowns_; ++j) {
            if (!coefficients[j].is_zero()) row.coeffs[j] -= factor * coefficients[j];
        }
        row.rhs -= factor * rhs;
    }
    Row fresh{pivot, std::move(coefficients), std::move(rhs)};
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot, [](const Row& r, std::size_t p) { return r.pivot < p; });
    rows_.insert(pos, std::move(fresh));
    return true;
}

bool IncrementalSystem::implies(const std::vector<Rational>& coefficients, const Rational& rhs) const {
    std::vector<Rational> c = coefficients;
    Rational r = rhs;
    reduce(c, r);
    return r.is_zero() && std::all_of(c.begin(), c.end(), [](const Rational& v) { return v.is_zero(); });
}

std::vector<Rational> IncrementalSystem::basic_solution() const {
    std::vector<Rational> x(unknowns_);
    for (const Row& row : rows_) x[row.pivot] = row.rhs;
    return x;
}

std::vector<std::size_t> IncrementalSystem::free_columns() const {
    std::vector<bool> is_pivot(unknowns_, false);
    for (const Row& row : rows_) is_pivot[row.pivot] = true;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < unknowns_; ++j) {
        if (!is_pivot[j]) out.push_back(j);
    }
    return out;
}

std::vector<std::vector<Rational>> IncrementalSystem::nullspace() const {
    std::vector<std::vector<Rational>> basis;
    for (std::size_t j : free_columns()) {
        std::vector<Rational> v(unknowns_);
        v[j] = Rational(1);
        for (const Row& row : rows_) v[row.pivot] = -row.coeffs[j];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Rational>> nullspace(const std::vector<std::vector<Rational>>& matrix, std::size_t cols) {
    IncrementalSystem sys(cols);
    for (const auto& row : matrix) sys.add(row, Rational(0));
    return sys.nullspace();
}

}  // namespace framekit
