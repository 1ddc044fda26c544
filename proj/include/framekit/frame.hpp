#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "framekit/sequence.hpp"

namespace framekit {

/// Schauder-frame candidate (x_n, f_n) over E.
struct FramePair {
    VectorFamily vectors;
    FunctionalFamily functionals;
    SpaceId space = SpaceId::L1;

    friend bool operator==(const FramePair&, const FramePair&) = default;
};

/// [f_1(x), ..., f_N(x)].
std::vector<Rational> coefficients(const FramePair& frame, const FinVec& x, Index n_terms);

/// S_N x = sum_{n <= N} f_n(x) x_n.
FinVec partial_sum(const FramePair& frame, const FinVec& x, Index n_terms);

/// ||x - S_N x||_E.
Rational residual(const FramePair& frame, const FinVec& x, Index n_terms);

/// Default scan horizon for reconstructing x: 4 * (largest index involved) + 16.
Index default_horizon(const FramePair& frame, const FinVec& x);

struct Reconstruction {
    Index terms;
    Rational residual;
};

/// Smallest N <= horizon with residual(frame, x, N) <= epsilon.
/// Throws HorizonExceeded when no such N exists; std::invalid_argument for epsilon < 0.
Reconstruction reconstruct(const FramePair& frame, const FinVec& x, const Rational& epsilon,
                           std::optional<Index> horizon = std::nullopt);

struct SchauderVerified {};

struct SchauderFailure {
    Index basis_index;
    Rational best_residual;
};

using SchauderResult = std::variant<SchauderVerified, SchauderFailure>;

inline bool verified(const SchauderResult& r) { return std::holds_alternative<SchauderVerified>(r); }

/// Exact reconstruction of e_1..e_M at the default horizon. By linearity a
/// Verified result covers every finitely supported x with support in 1..M.
SchauderResult verify_schauder(const FramePair& frame, Index basis_count);

}  // namespace framekit
