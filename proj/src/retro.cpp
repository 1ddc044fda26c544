#include "framekit/retro.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "framekit/detail/member_system.hpp"
#include "framekit/errors.hpp"
#include "framekit/linear_system.hpp"
#include "framekit/random.hpp"

namespace framekit {

namespace detail {

TotalityResult totality(const MemberSystem& system, SpaceId space) {
    using Role = ConstraintModel::Role;
    const auto model = build_model(system, space, Rational(0), true);

    IncrementalSystem relaxed(model.unknowns());
    std::optional<ConstraintModel::Equation> restriction;
    for (const auto& eq : model.equations) {
        if (eq.role == Role::ClassRestriction) {
            restriction = eq;
            continue;
        }
        relaxed.add(eq.coeffs, eq.rhs);  // homogeneous: always consistent
    }
    IncrementalSystem in_class = relaxed;
    if (restriction) in_class.add(restriction->coeffs, restriction->rhs);

    const auto kernel = in_class.nullspace();
    if (!kernel.empty()) {
        DualFunctional phi = model.functional(kernel.front()).primitive();
        if (auto v = first_pairing_violation(system, phi, Rational(0))) {
            throw std::logic_error("annihilator fails at member " + std::to_string(v->member));
        }
        return {totality_outcome::Annihilator{std::move(phi)}};
    }
    if (!relaxed.nullspace().empty()) {
        throw UnsupportedTail("an annihilator exists only with a dual tail proportional to 1/(n - b), b = " +
                              std::to_string(system.tail.index_offset) + ", outside the {0, c, c/n} class");
    }
    return {totality_outcome::Total{}};
}

}  // namespace detail

TotalityResult totality(const VectorFamily& family, SpaceId space) {
    return detail::totality(detail::MemberSystem::of(family), space);
}

std::string_view to_string(CoefficientNorm norm) {
    return norm == CoefficientNorm::Transported ? "canonical" : "sup";
}

Index default_retro_horizon(const VectorFamily& family, Index truncation) {
    Index reach = std::max({family.tail_start(), family.max_fixed_index(), truncation});
    if (!family.tail().is_zero_rule()) reach = std::max(reach, truncation - family.tail().index_offset);
    return 4 * reach + 16;
}

namespace {

FinVec sample_functional(Sampler& sampler, const RetroBoundsOptions& options) {
    for (;;) {
        std::vector<FinVec::Entry> terms;
        for (Index i = 1; i <= options.truncation; ++i) {
            Rational v = sampler.small_rational(options.max_numerator, options.max_denominator);
            if (!v.is_zero()) terms.emplace_back(i, std::move(v));
        }
        if (!terms.empty()) return FinVec(std::move(terms));
    }
}

}  // namespace

BoundsEstimate estimate_retro_bounds(const VectorFamily& family, SpaceId space, const RetroBoundsOptions& options) {
    if (options.sample_count < 1) throw std::invalid_argument("sample_count must be >= 1");
    if (options.truncation < 1) throw std::invalid_argument("truncation must be >= 1");
    const TotalityResult t = totality(family, space);
    if (!t.total()) throw NotTotal("family is not total: a non-zero functional annihilates every member");

    BoundsEstimate out;
    out.samples = options.sample_count;
    out.seed = options.seed;
    out.horizon = options.horizon.value_or(default_retro_horizon(family, options.truncation));

    std::vector<FinVec> members;
    members.reserve(static_cast<std::size_t>(out.horizon));
    for (Index n = 1; n <= out.horizon; ++n) members.push_back(family.member(n));

    Sampler sampler(options.seed);
    std::map<std::vector<Rational>, FinVec> seen;
    bool first = true;
    for (Index s = 0; s < options.sample_count; ++s) {
        const FinVec f = sample_functional(sampler, options);
        std::vector<Rational> coeffs;
        coeffs.reserve(members.size());
        Rational sup;
        for (const auto& x : members) {
            coeffs.push_back(dot(f, x));
            sup = max(sup, coeffs.back().abs());
        }
        if (options.coeff_norm == CoefficientNorm::Transported) {
            auto [it, inserted] = seen.emplace(std::move(coeffs), f);
            if (!inserted && it->second != f) out.well_defined = false;
            continue;
        }
        const Rational ratio = sup / dual_norm(f, space);
        if (first || ratio < out.lower) out.lower = ratio;
        if (first || out.upper < ratio) out.upper = ratio;
        first = false;
    }

    if (options.coeff_norm == CoefficientNorm::Transported) {
        out.lower = Rational(1);
        out.upper = Rational(1);
        out.exact = true;
    }
    return out;
}

ExactResult is_exact(const VectorFamily& family, SpaceId space, Index max_member) {
    if (max_member < 1) throw std::invalid_argument("max_member must be >= 1");
    const auto system = detail::MemberSystem::of(family);
    ExactResult out;
    out.total = detail::totality(system, space).total();
    if (!out.total) return out;

    std::vector<Index> candidates;
    for (Index m = 1; m <= max_member; ++m) candidates.push_back(m);
    if (family.tail_start() > max_member) candidates.push_back(family.tail_start());

    for (Index m : candidates) {
        out.checked.push_back(m);
        if (detail::totality(system.without(m), space).total()) {
            out.removable = m;
            return out;
        }
    }
    out.exact = true;
    return out;
}

TypePReport classify_type_p(const VectorFamily& family, SpaceId space, Index max_member) {
    TypePReport report{is_exact(family, space, max_member), find_phi(family, space), false};
    report.is_type_p = report.exactness.exact && report.psi.certified();
    return report;
}

}  // namespace framekit
