#pragma once

// Seeded random inputs and brute-force oracles shared by the property tests
// and the acceptance runner. The oracles only use plain Gaussian elimination
// on dense truncated matrices; nothing here calls the symbolic solvers.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "framekit/frame.hpp"
#include "framekit/random.hpp"
#include "framekit/sequence.hpp"

namespace gen {

using framekit::DualFunctional;
using framekit::FinVec;
using framekit::FramePair;
using framekit::FunctionalFamily;
using framekit::Index;
using framekit::Rational;
using framekit::Sampler;
using framekit::ScaleExpr;
using framekit::SpaceId;
using framekit::TailRule;
using framekit::VectorFamily;

using Matrix = std::vector<std::vector<Rational>>;

inline FinVec random_finvec(Sampler& s, Index max_index, double density = 0.5, std::int64_t num = 4,
                            std::int64_t den = 3) {
    std::vector<FinVec::Entry> terms;
    const auto threshold = static_cast<std::int64_t>(density * 1000);
    for (Index i = 1; i <= max_index; ++i)
        if (s.uniform(0, 999) < threshold) terms.emplace_back(i, s.nonzero_rational(num, den));
    return FinVec(std::move(terms));
}

inline ScaleExpr random_scale(Sampler& s) {
    const Rational k = s.nonzero_rational(3, 2);
    switch (s.uniform(0, 2)) {
        case 0: return ScaleExpr::constant(k);
        case 1: return ScaleExpr::linear(k);
        default: return ScaleExpr::inverse(k);
    }
}

/// Largest coordinate the oracle must see so that every annihilator or Phi
/// is visible on 1..M: prefix and offset supports, every coordinate below
/// the first tail coordinate, and one free coordinate past a zero rule.
inline Index structural_size(const VectorFamily& f) {
    Index m = f.max_fixed_index();
    if (f.tail().is_zero_rule()) return m + 1;
    return std::max(m, f.tail_start() + f.tail().index_offset - 1);
}

/// Whether the symbolic tail class can absorb a non-zero value of phi on the
/// tail offset. When it cannot, every admissible solution has phi(offset)
/// fixed, and the oracle adds that as an explicit row.
inline bool tail_absorbs_offset(const VectorFamily& f, SpaceId space) {
    if (f.tail().is_zero_rule()) return false;
    if (space == SpaceId::C0) return false;
    switch (f.tail().scale.kind()) {
        case ScaleExpr::Kind::Const: return true;
        case ScaleExpr::Kind::Linear: return f.tail().index_offset == 0;
        case ScaleExpr::Kind::Inverse: return false;
    }
    return false;
}

/// L1 with a linear scale and b != 0 needs a 1/(n - b) dual tail, which the
/// symbolic class does not represent; generators avoid it.
inline bool in_scope(const VectorFamily& f, SpaceId space) {
    return !(space == SpaceId::L1 && !f.tail().is_zero_rule() && f.tail().scale.kind() == ScaleExpr::Kind::Linear &&
             f.tail().index_offset != 0);
}

/// Random in-scope family with structural_size <= max_size.
inline VectorFamily random_family(Sampler& s, SpaceId space, Index max_size) {
    for (;;) {
        const Index len = s.uniform(0, std::min<Index>(4, max_size));
        std::vector<FinVec> prefix;
        for (Index i = 0; i < len; ++i) prefix.push_back(random_finvec(s, max_size, 0.35));
        const FinVec offset = s.uniform(0, 2) == 0 ? random_finvec(s, max_size, 0.3) : FinVec{};
        TailRule tail;
        if (s.uniform(0, 5) == 0) {
            tail = TailRule::zero(offset);
        } else {
            const Index b = s.uniform(-len, 3);
            tail = TailRule::shifted_canonical(b, random_scale(s), offset);
        }
        if (!tail.is_zero_rule() && len + 1 + tail.index_offset < 1) continue;
        VectorFamily f(std::move(prefix), std::move(tail));
        if (structural_size(f) > max_size || !in_scope(f, space)) continue;
        return f;
    }
}

/// Row of a vector restricted to coordinates 1..m.
inline std::vector<Rational> dense(const FinVec& v, Index m) {
    std::vector<Rational> row(static_cast<std::size_t>(m));
    for (const auto& [i, val] : v.entries())
        if (i <= m) row[static_cast<std::size_t>(i - 1)] = val;
    return row;
}

/// Rows x_n (restricted to 1..M) for all members supported inside 1..M, plus
/// the offset row when the tail cannot absorb it. Both oracles use the same
/// rows with different right-hand sides.
struct Truncation {
    Matrix rows;
};

inline Truncation truncate(const VectorFamily& f, SpaceId space, Index m, Index skip = 0) {
    Truncation t;
    for (Index n = 1; n < f.tail_start(); ++n) {
        if (n == skip) continue;
        t.rows.push_back(dense(f.member(n), m));
    }
    if (!f.tail().is_zero_rule()) {
        for (Index n = f.tail_start(); n + f.tail().index_offset <= m; ++n) {
            if (n == skip) continue;
            t.rows.push_back(dense(f.member(n), m));
            }
    }
    if (!tail_absorbs_offset(f, space)) {
        t.rows.push_back(dense(f.tail().offset, m));
    }
    return t;
}

/// Rank of [A | b] versus rank of A by straightforward elimination.
struct EliminationResult {
    std::size_t rank = 0;
    bool consistent = true;
};

inline EliminationResult eliminate(Matrix a, std::vector<Rational> rhs, std::size_t cols) {
    EliminationResult out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c].is_zero()) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        std::swap(rhs[p], rhs[r]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const Rational k = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= k * a[r][j];
            rhs[i] -= k * rhs[r];
        }
        ++r;
    }
    out.rank = r;
    for (std::size_t i = r; i < a.size(); ++i)
        if (!rhs[i].is_zero()) out.consistent = false;
    return out;
}

/// Oracle: some non-zero phi on 1..M annihilates every truncated row.
/// A non-zero skip drops that member first.
inline bool truncated_kernel_nontrivial(const VectorFamily& f, SpaceId space, Index m, Index skip = 0) {
    const Truncation t = truncate(f, space, m, skip);
    const auto res = eliminate(t.rows, std::vector<Rational>(t.rows.size()), static_cast<std::size_t>(m));
    return res.rank < static_cast<std::size_t>(m);
}

/// Oracle: phi(x_n) = 1 on every truncated row (and phi(offset) = 1 when the
/// offset row is present) has a solution.
inline bool truncated_phi_solvable(const VectorFamily& f, SpaceId space, Index m) {
    const Truncation t = truncate(f, space, m);
    return eliminate(t.rows, std::vector<Rational>(t.rows.size(), Rational(1)), static_cast<std::size_t>(m)).consistent;
}

/// Random Schauder frame: coordinates 1..c are covered by one or two prefix
/// copies a e_j with dual weights w e*_j (sum of w a over copies is 1), then
/// the tail pairs scale(n) e_{n+b} with e*_{n+b} / scale(n), starting at
/// coordinate c + 1.
struct RandomFrameOptions {
    Index max_coords = 4;
    bool allow_duplicates = true;
};

inline FramePair random_schauder_frame(Sampler& s, SpaceId space, RandomFrameOptions opts = {}) {
    const Index c = s.uniform(0, opts.max_coords);
    std::vector<std::pair<FinVec, FinVec>> members;
    const auto scale_kind = s.uniform(0, 2);
    // A linear scale over l1 needs b = 0, so one copy per coordinate.
    const bool dup_ok = opts.allow_duplicates && !(space == SpaceId::L1 && scale_kind == 1);
    for (Index j = 1; j <= c; ++j) {
        const Index copies = dup_ok ? s.uniform(1, 2) : 1;
        Rational remaining(1);
        for (Index k = 1; k <= copies; ++k) {
            const Rational a = s.nonzero_rational(3, 2);
            Rational w;
            if (k == copies) {
                w = remaining / a;
            } else {
                w = s.nonzero_rational(3, 2);
                remaining -= w * a;
            }
            members.emplace_back(FinVec::unit(j, a), w.is_zero() ? FinVec{} : FinVec::unit(j, w));
        }
    }
    // Fisher-Yates with the portable sampler.
    for (std::size_t i = members.size(); i > 1; --i)
        std::swap(members[i - 1], members[static_cast<std::size_t>(s.uniform(0, static_cast<std::int64_t>(i) - 1))]);

    std::vector<FinVec> xs, fs;
    for (auto& [x, f] : members) {
        xs.push_back(std::move(x));
        fs.push_back(std::move(f));
    }
    const Index b = c - static_cast<Index>(xs.size());
    const Rational k = s.nonzero_rational(3, 2);
    ScaleExpr xs_scale = ScaleExpr::constant(k), fs_scale = ScaleExpr::constant(k.reciprocal());
    if (scale_kind == 1) {
        xs_scale = ScaleExpr::linear(k);
        fs_scale = ScaleExpr::inverse(k.reciprocal());
    } else if (scale_kind == 2) {
        xs_scale = ScaleExpr::inverse(k);
        fs_scale = ScaleExpr::linear(k.reciprocal());
    }
    return {VectorFamily(std::move(xs), TailRule::shifted_canonical(b, xs_scale)),
            FunctionalFamily(std::move(fs), TailRule::shifted_canonical(b, fs_scale)), space};
}

}  // namespace gen
