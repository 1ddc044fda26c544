#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

#include "framekit/phi.hpp"
#include "framekit/sequence.hpp"

namespace framekit {

namespace detail {
struct MemberSystem;
}

namespace totality_outcome {

struct Total {};

/// Non-zero phi in E* with phi(x_n) = 0 for every member.
struct Annihilator {
    DualFunctional phi;
};

}  // namespace totality_outcome

struct TotalityResult {
    std::variant<totality_outcome::Total, totality_outcome::Annihilator> outcome;

    bool total() const { return std::holds_alternative<totality_outcome::Total>(outcome); }
    const DualFunctional& annihilator() const { return std::get<totality_outcome::Annihilator>(outcome).phi; }
};

/// Decides whether some non-zero phi in E* (with a {0, c, c/n} tail)
/// annihilates every member. Annihilators are returned in primitive form.
/// Throws UnsupportedTail if the only annihilators have tails outside that
/// class.
TotalityResult totality(const VectorFamily& family, SpaceId space);

namespace detail {
TotalityResult totality(const MemberSystem& system, SpaceId space);
}

enum class CoefficientNorm {
    /// ||{f(x_n)}|| := ||f||, the transported norm; A = B = 1 exactly.
    Transported,
    /// sup_n |f(x_n)|, estimated from random finitely supported f.
    SupNorm,
};

std::string_view to_string(CoefficientNorm norm);

struct RetroBoundsOptions {
    CoefficientNorm coeff_norm = CoefficientNorm::SupNorm;
    Index sample_count = 200;
    /// Sampled functionals are supported in 1..truncation.
    Index truncation = 16;
    std::uint64_t seed = 1;
    /// Members 1..horizon enter sup_n |f(x_n)|; defaults from the family shape.
    std::optional<Index> horizon;
    std::int64_t max_numerator = 6;
    std::int64_t max_denominator = 4;
};

struct BoundsEstimate {
    Rational lower;  // A witness
    Rational upper;  // B witness
    bool exact = false;
    Index samples = 0;
    Index horizon = 0;
    std::uint64_t seed = 0;
    /// No two distinct sampled functionals shared a coefficient sequence.
    bool well_defined = true;
};

Index default_retro_horizon(const VectorFamily& family, Index truncation);

/// Retro frame bounds for {x_n}. Throws NotTotal if the family has an annihilator.
BoundsEstimate estimate_retro_bounds(const VectorFamily& family, SpaceId space, const RetroBoundsOptions& options);

/// Exactness is taken as: the family is total and removing any single
/// member leaves a non-total family.
inline constexpr std::string_view kExactnessDefinition =
    "exact: the family is total and removing any single member destroys totality";

struct ExactResult {
    bool total = false;
    bool exact = false;
    /// First member whose removal keeps the family total.
    std::optional<Index> removable;
    /// Member indices whose removal was tested (1..M, plus the tail start
    /// as the representative of all tail removals when it lies beyond M).
    std::vector<Index> checked;
};

ExactResult is_exact(const VectorFamily& family, SpaceId space, Index max_member);

struct TypePReport {
    ExactResult exactness;
    PhiCertificate psi;
    bool is_type_p = false;
};

TypePReport classify_type_p(const VectorFamily& family, SpaceId space, Index max_member);

}  // namespace framekit
