#include "framekit/frame.hpp"

#include <algorithm>
#include <stdexcept>

#include "framekit/errors.hpp"

namespace framekit {

namespace {

void require_terms(Index n_terms) {
    if (n_terms < 1) throw std::invalid_argument("number of terms must be >= 1");
}

Rational coefficient(const FramePair& frame, const FinVec& x, Index n) {
    return dot(frame.functionals.member(n), x);
}

struct Scan {
    std::optional<Reconstruction> hit;
    Rational best;
};

Scan scan(const FramePair& frame, const FinVec& x, const Rational& epsilon, Index horizon) {
    FinVec sum;
    Scan out;
    for (Index n = 1; n <= horizon; ++n) {
        const Rational a = coefficient(frame, x, n);
        if (!a.is_zero()) sum = sum + a * frame.vectors.member(n);
        Rational r = norm(x - sum, frame.space);
        if (n == 1 || r < out.best) out.best = r;
        if (r <= epsilon) {
            out.hit = Reconstruction{n, std::move(r)};
            return out;
        }
    }
    return out;
}

}  // namespace

std::vector<Rational> coefficients(const FramePair& frame, const FinVec& x, Index n_terms) {
    require_terms(n_terms);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(n_terms));
    for (Index n = 1; n <= n_terms; ++n) out.push_back(coefficient(frame, x, n));
    return out;
}

FinVec partial_sum(const FramePair& frame, const FinVec& x, Index n_terms) {
    require_terms(n_terms);
    FinVec sum;
    for (Index n = 1; n <= n_terms; ++n) {
        const Rational a = coefficient(frame, x, n);
        if (!a.is_zero()) sum = sum + a * frame.vectors.member(n);
    }
    return sum;
}

Rational residual(const FramePair& frame, const FinVec& x, Index n_terms) {
    return norm(x - partial_sum(frame, x, n_terms), frame.space);
}

Index default_horizon(const FramePair& frame, const FinVec& x) {
    Index involved = x.max_index();
    for (const RuleFamily* fam : {static_cast<const RuleFamily*>(&frame.vectors),
                                  static_cast<const RuleFamily*>(&frame.functionals)}) {
        involved = std::max({involved, fam->tail_start(), fam->max_fixed_index()});
        if (!fam->tail().is_zero_rule()) {
            const Index b = fam->tail().index_offset;
            involved = std::max(involved, b < 0 ? -b : b);
        }
    }
    return 4 * involved + 16;
}

Reconstruction reconstruct(const FramePair& frame, const FinVec& x, const Rational& epsilon,
                           std::optional<Index> horizon) {
    if (epsilon.sign() < 0) throw std::invalid_argument("epsilon must be >= 0");
    const Index limit = horizon.value_or(default_horizon(frame, x));
    Scan s = scan(frame, x, epsilon, limit);
    if (!s.hit) throw HorizonExceeded(limit);
    return *s.hit;
}

SchauderResult verify_schauder(const FramePair& frame, Index basis_count) {
    if (basis_count < 1) throw std::invalid_argument("basis count must be >= 1");
    for (Index m = 1; m <= basis_count; ++m) {
        const FinVec e = FinVec::unit(m);
        Scan s = scan(frame, e, Rational(0), default_horizon(frame, e));
        if (!s.hit) return SchauderFailure{m, s.best};
    }
    return SchauderVerified{};
}

}  // namespace framekit
