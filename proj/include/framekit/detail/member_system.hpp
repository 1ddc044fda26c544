#pragma once

// Shared machinery for deciding "pair(phi, x_n) = target for every member n"
// over rule-described families: exhaustive checks on the finite part and
// closed-form identities on the tail.

#include <optional>
#include <string>
#include <vector>

#include "framekit/rational.hpp"
#include "framekit/sequence.hpp"

namespace framekit::detail {

/// A vector family viewed as a set of members, possibly with some members
/// removed. Member indices always refer to the original family.
struct MemberSystem {
    std::vector<Index> explicit_ids;
    std::vector<FinVec> explicit_members;
    TailRule tail;
    Index tail_start = 1;
    std::vector<Index> holes;  // removed tail indices, sorted

    static MemberSystem of(const RuleFamily& family);

    /// Same system with member m removed.
    MemberSystem without(Index m) const;

    bool is_hole(Index n) const;
    Index max_fixed_index() const;
};

struct Violation {
    Index member;
    Rational value;
};

/// Smallest member index n with pair(phi, x_n) != target, if any.
std::optional<Violation> first_pairing_violation(const MemberSystem& system, const DualFunctional& phi,
                                                 const Rational& target);

/// Linear model for the unknown functional phi in the {0, c, c/n} tail class.
///
/// Unknowns are phi's coordinates 1..m0-1 followed, when the tail is
/// parametric, by the tail parameter c.
struct ConstraintModel {
    enum class Role {
        Member,            // a finite member's pairing
        TailIdentity,      // the closed-form identity over all tail members
        DualMembership,    // c0 admits only summable tails
        ClassRestriction,  // holds for representable tails only
    };

    struct Equation {
        std::vector<Rational> coeffs;
        Rational rhs;
        Role role;
        std::string label;
    };

    Index phi_tail_start = 1;
    std::size_t coord_unknowns = 0;
    bool has_tail_parameter = false;
    DualFunctional::TailKind tail_kind = DualFunctional::TailKind::Zero;
    std::vector<Equation> equations;

    std::size_t unknowns() const { return coord_unknowns + (has_tail_parameter ? 1 : 0); }
    DualFunctional functional(const std::vector<Rational>& solution) const;
};

/// Equations for pair(phi, x_n) = target over every member of the system.
/// With reserve_free_coordinate, a zero-rule tail leaves one coordinate
/// untouched so that free directions show up in the kernel.
ConstraintModel build_model(const MemberSystem& system, SpaceId space, const Rational& target,
                            bool reserve_free_coordinate);

}  // namespace framekit::detail
