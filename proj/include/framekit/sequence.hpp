#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "framekit/rational.hpp"

namespace framekit {

/// Coordinate / member index. Coordinates and members are 1-based.
using Index = std::int64_t;

/// The two sequence spaces in scope. The dual of l1 is the bounded sequences
/// (sup-norm regime); the dual of c0 is l1 (sum regime).
enum class SpaceId { L1, C0 };

std::string_view to_string(SpaceId space);
std::optional<SpaceId> parse_space(std::string_view text);

/// Finitely supported sequence of exact rationals.
///
/// Entries are kept sorted by index with no zero values, so structural
/// equality coincides with equality as sequences.
class FinVec {
public:
    using Entry = std::pair<Index, Rational>;

    FinVec() = default;

    /// Validating constructor: indices >= 1, strictly increasing, values non-zero.
    /// Throws ValidationError("entries", ...) otherwise.
    explicit FinVec(std::vector<Entry> entries);

    /// Accumulating constructor: any order, duplicates summed, zeros dropped.
    static FinVec from_terms(std::vector<Entry> terms);

    /// k * e_index.
    static FinVec unit(Index index, const Rational& scale = Rational(1));

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    /// Coordinate value at index (0 when outside the support).
    Rational at(Index index) const;
    /// Largest index in the support; 0 for the zero vector.
    Index max_index() const { return entries_.empty() ? 0 : entries_.back().first; }

    FinVec operator-() const;
    friend FinVec operator+(const FinVec& a, const FinVec& b);
    friend FinVec operator-(const FinVec& a, const FinVec& b);
    friend FinVec operator*(const Rational& k, const FinVec& v);

    /// Coordinatewise product sum; also the pairing of a finitely supported
    /// dual element with a vector.
    friend Rational dot(const FinVec& a, const FinVec& b);

    friend bool operator==(const FinVec&, const FinVec&) = default;

private:
    std::vector<Entry> entries_;
};

/// n -> k, n -> k*n, or n -> k/n.
class ScaleExpr {
public:
    enum class Kind { Const, Linear, Inverse };

    ScaleExpr(Kind kind, Rational k);
    static ScaleExpr constant(Rational k) { return {Kind::Const, std::move(k)}; }
    static ScaleExpr linear(Rational k) { return {Kind::Linear, std::move(k)}; }
    static ScaleExpr inverse(Rational k) { return {Kind::Inverse, std::move(k)}; }

    Kind kind() const { return kind_; }
    const Rational& k() const { return k_; }
    Rational operator()(Index n) const;

    friend bool operator==(const ScaleExpr&, const ScaleExpr&) = default;

private:
    Kind kind_;
    Rational k_;
};

std::string_view to_string(ScaleExpr::Kind kind);

/// Members n >= n0 of a family: scale(n) * e_{n+b} + offset, or just offset
/// for the Zero rule. n0 is implied by the owning family's prefix length.
struct TailRule {
    enum class Kind { Zero, ShiftedCanonical };

    Kind kind = Kind::Zero;
    Index index_offset = 0;  // b
    ScaleExpr scale = ScaleExpr::constant(Rational(1));
    FinVec offset;

    static TailRule zero(FinVec offset = {}) { return {Kind::Zero, 0, ScaleExpr::constant(Rational(1)), std::move(offset)}; }
    static TailRule shifted_canonical(Index b, ScaleExpr scale, FinVec offset = {}) {
        return {Kind::ShiftedCanonical, b, std::move(scale), std::move(offset)};
    }

    bool is_zero_rule() const { return kind == Kind::Zero; }

    /// Member value for a tail index n (no range check against the start).
    FinVec member(Index n) const;

    friend bool operator==(const TailRule& a, const TailRule& b);
};

/// Infinite indexed family described by a finite prefix and a tail rule.
class RuleFamily {
public:
    RuleFamily() = default;
    /// Throws ValidationError when the tail addresses a coordinate < 1.
    RuleFamily(std::vector<FinVec> prefix, TailRule tail);

    const std::vector<FinVec>& prefix() const { return prefix_; }
    const TailRule& tail() const { return tail_; }
    /// First index governed by the tail rule.
    Index tail_start() const { return static_cast<Index>(prefix_.size()) + 1; }

    FinVec member(Index n) const;

    /// Largest coordinate index used by the prefix or the tail offset.
    Index max_fixed_index() const;

    friend bool operator==(const RuleFamily&, const RuleFamily&) = default;

private:
    std::vector<FinVec> prefix_;
    TailRule tail_;
};

/// Family {x_n} of elements of E.
class VectorFamily : public RuleFamily {
public:
    using RuleFamily::RuleFamily;
    friend bool operator==(const VectorFamily&, const VectorFamily&) = default;
};

/// Family {f_n} of finitely supported elements of E*; the tail offset must be zero.
class FunctionalFamily : public RuleFamily {
public:
    FunctionalFamily() = default;
    FunctionalFamily(std::vector<FinVec> prefix, TailRule tail);
    friend bool operator==(const FunctionalFamily&, const FunctionalFamily&) = default;
};

/// e_1, e_2, e_3, ...
VectorFamily canonical_vectors();
/// Coordinate functionals e*_1, e*_2, ...
FunctionalFamily canonical_functionals();

/// Dual element given by explicit coordinates 1..m0-1 and a tail rule for
/// coordinates n >= m0: zero, constant c, or c/n.
class DualFunctional {
public:
    enum class TailKind { Zero, Const, Inverse };

    DualFunctional() = default;
    DualFunctional(std::vector<Rational> prefix, TailKind tail_kind, Rational c = Rational(0));

    static DualFunctional zero() { return {}; }
    /// Finitely supported functional from a FinVec of coordinates.
    static DualFunctional from_finvec(const FinVec& coords);

    const std::vector<Rational>& prefix() const { return prefix_; }
    TailKind tail_kind() const { return tail_kind_; }
    const Rational& c() const { return c_; }
    /// First coordinate governed by the tail.
    Index tail_start() const { return static_cast<Index>(prefix_.size()) + 1; }

    Rational coord(Index i) const;
    bool is_zero() const;

    /// Canonical representation: zero-parameter tails become Zero, trailing
    /// prefix coordinates that agree with the tail are absorbed into it.
    /// Two functionals are equal as sequences iff their normal forms match.
    DualFunctional normalized() const;

    /// Rescaled to a primitive integer-parameter form with a positive leading
    /// coordinate (all prefix values and c integral with gcd 1).
    DualFunctional primitive() const;

    DualFunctional operator-() const;
    friend DualFunctional operator*(const Rational& k, const DualFunctional& phi);

    /// Sequence equality (compares normal forms).
    friend bool operator==(const DualFunctional& a, const DualFunctional& b);

private:
    std::vector<Rational> prefix_;
    TailKind tail_kind_ = TailKind::Zero;
    Rational c_;
};

std::string_view to_string(DualFunctional::TailKind kind);

/// ||x||_E: sum of |values| for l1, max |value| for c0.
Rational norm(const FinVec& x, SpaceId space);

/// ||f||_{E*} of a finitely supported dual element: max |value| for l1,
/// sum of |values| for c0.
Rational dual_norm(const FinVec& f, SpaceId space);

/// ||phi||_{E*}; nullopt means phi is not an element of E* (non-summable
/// tail over c0).
std::optional<Rational> dual_norm(const DualFunctional& phi, SpaceId space);

bool in_dual(const DualFunctional& phi, SpaceId space);

Rational pair(const DualFunctional& phi, const FinVec& x);

FinVec family_member(const RuleFamily& family, Index n);

}  // namespace framekit
