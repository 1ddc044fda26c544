#include "framekit/detail/member_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace framekit::detail {

MemberSystem MemberSystem::of(const RuleFamily& family) {
    MemberSystem out;
    out.explicit_members = family.prefix();
    for (Index i = 1; i <= static_cast<Index>(family.prefix().size()); ++i) out.explicit_ids.push_back(i);
    out.tail = family.tail();
    out.tail_start = family.tail_start();
    return out;
}

MemberSystem MemberSystem::without(Index m) const {
    MemberSystem out = *this;
    if (m < tail_start) {
        auto it = std::find(out.explicit_ids.begin(), out.explicit_ids.end(), m);
        if (it != out.explicit_ids.end()) {
            const auto pos = it - out.explicit_ids.begin();
            out.explicit_ids.erase(it);
            out.explicit_members.erase(out.explicit_members.begin() + pos);
        }
    } else if (!is_hole(m)) {
        out.holes.insert(std::upper_bound(out.holes.begin(), out.holes.end(), m), m);
    }
    return out;
}

bool MemberSystem::is_hole(Index n) const { return std::binary_search(holes.begin(), holes.end(), n); }

Index MemberSystem::max_fixed_index() const {
    Index m = tail.offset.max_index();
    for (const auto& v : explicit_members) m = std::max(m, v.max_index());
    return m;
}

namespace {

/// scale(n) * tau(n + b) is a constant function of n on the tail.
std::optional<Rational> constant_tail_product(const ScaleExpr& scale, Index b, const DualFunctional& phi) {
    using TK = DualFunctional::TailKind;
    if (phi.tail_kind() == TK::Zero || phi.c().is_zero()) return Rational(0);
    // scale(n) * tau(n+b) = k*c * n^num / (n^den * (n+b)^den_shift)
    const int num = scale.kind() == ScaleExpr::Kind::Linear ? 1 : 0;
    const int den = scale.kind() == ScaleExpr::Kind::Inverse ? 1 : 0;
    const int den_shift = phi.tail_kind() == TK::Inverse ? 1 : 0;
    const bool constant = b == 0 ? num == den + den_shift : (den_shift == 0 && num == den);
    if (!constant) return std::nullopt;
    return scale.k() * phi.c();
}

}  // namespace

std::optional<Violation> first_pairing_violation(const MemberSystem& system, const DualFunctional& phi,
                                                 const Rational& target) {
    for (std::size_t i = 0; i < system.explicit_members.size(); ++i) {
        Rational v = pair(phi, system.explicit_members[i]);
        if (v != target) return Violation{system.explicit_ids[i], std::move(v)};
    }

    const Rational offset_value = pair(phi, system.tail.offset);
    auto next_member = [&](Index n) {
        while (system.is_hole(n)) ++n;
        return n;
    };

    if (system.tail.is_zero_rule()) {
        if (offset_value != target) return Violation{next_member(system.tail_start), offset_value};
        return std::nullopt;
    }

    const Index b = system.tail.index_offset;
    // From `symbolic` on, x_n hits phi's tail rule rather than its prefix.
    const Index symbolic = std::max(system.tail_start, phi.tail_start() - b);
    for (Index n = system.tail_start; n < symbolic; ++n) {
        if (system.is_hole(n)) continue;
        Rational v = pair(phi, system.tail.member(n));
        if (v != target) return Violation{n, std::move(v)};
    }

    const auto product = constant_tail_product(system.tail.scale, b, phi);
    if (product && *product + offset_value == target) return std::nullopt;

    // The identity fails: scale(n)*tau(n+b) + t - target has a numerator
    // polynomial of degree <= 2 that is not identically zero, so it vanishes
    // at no more than two tail members and the scan below terminates.
    Index n = symbolic;
    for (int misses = 0; misses <= 2; ++n) {
        if (system.is_hole(n)) continue;
        Rational v = pair(phi, system.tail.member(n));
        if (v != target) return Violation{n, std::move(v)};
        ++misses;
    }
    throw std::logic_error("tail identity failed symbolically but no violating member was found");
}

DualFunctional ConstraintModel::functional(const std::vector<Rational>& solution) const {
    std::vector<Rational> prefix(solution.begin(), solution.begin() + static_cast<std::ptrdiff_t>(coord_unknowns));
    Rational c = has_tail_parameter ? solution[coord_unknowns] : Rational(0);
    return DualFunctional(std::move(prefix), tail_kind, std::move(c)).normalized();
}

ConstraintModel build_model(const MemberSystem& system, SpaceId space, const Rational& target,
                            bool reserve_free_coordinate) {
    ConstraintModel model;
    const TailRule& tail = system.tail;
    const Index n0 = system.tail_start;
    const Index b = tail.index_offset;
    const Index fixed = system.max_fixed_index();

    Index m0 = fixed + 1;
    if (tail.is_zero_rule()) {
        if (reserve_free_coordinate) m0 += 1;
    } else {
        m0 = std::max(m0, n0 + b);
        if (!system.holes.empty()) m0 = std::max(m0, system.holes.back() + b + 1);
    }
    model.phi_tail_start = m0;
    model.coord_unknowns = static_cast<std::size_t>(m0 - 1);

    const bool parametric = !tail.is_zero_rule() && (tail.scale.kind() == ScaleExpr::Kind::Const ||
                                                     (tail.scale.kind() == ScaleExpr::Kind::Linear && b == 0));
    model.has_tail_parameter = parametric;
    if (parametric) {
        model.tail_kind = tail.scale.kind() == ScaleExpr::Kind::Const ? DualFunctional::TailKind::Const
                                                                      : DualFunctional::TailKind::Inverse;
    }
    const std::size_t width = model.unknowns();

    auto row_of = [&](const FinVec& v) {
        std::vector<Rational> row(width);
        for (const auto& [i, value] : v.entries()) row[static_cast<std::size_t>(i - 1)] += value;
        return row;
    };
    using Role = ConstraintModel::Role;

    for (std::size_t i = 0; i < system.explicit_members.size(); ++i) {
        model.equations.push_back({row_of(system.explicit_members[i]), target, Role::Member,
                                   "member " + std::to_string(system.explicit_ids[i])});
    }

    if (tail.is_zero_rule()) {
        model.equations.push_back(
            {row_of(tail.offset), target, Role::TailIdentity, "tail members n >= " + std::to_string(n0) + " (constant)"});
        return model;
    }

    // Tail members whose canonical coordinate falls in phi's explicit range.
    for (Index n = n0; n + b < m0; ++n) {
        if (system.is_hole(n)) continue;
        auto row = row_of(tail.offset);
        row[static_cast<std::size_t>(n + b - 1)] += tail.scale(n);
        model.equations.push_back({std::move(row), target, Role::Member, "member " + std::to_string(n)});
    }

    const std::string identity_label = "tail identity for members n >= " + std::to_string(std::max(n0, m0 - b));
    auto offset_row = row_of(tail.offset);
    if (parametric) {
        offset_row[model.coord_unknowns] = tail.scale.k();
        model.equations.push_back({std::move(offset_row), target, Role::TailIdentity, identity_label});
        if (space == SpaceId::C0) {
            std::vector<Rational> row(width);
            row[model.coord_unknowns] = Rational(1);
            model.equations.push_back({std::move(row), Rational(0), Role::DualMembership,
                                       "c0 dual membership (a non-zero constant or c/n tail is not summable)"});
        }
        return model;
    }

    // Any phi in E* must reproduce the tail with coordinates
    // (target - phi(offset)) / scale(i - b). Inverse scales make that grow
    // linearly (never bounded); linear scales with b != 0 give a bounded but
    // non-summable sequence outside the representable tail class.
    const bool outside_class_only =
        space == SpaceId::L1 && tail.scale.kind() == ScaleExpr::Kind::Linear && b != 0;
    model.equations.push_back({std::move(offset_row), target,
                               outside_class_only ? Role::ClassRestriction : Role::TailIdentity,
                               identity_label + " (forces a zero tail)"});
    return model;
}

}  // namespace framekit::detail
