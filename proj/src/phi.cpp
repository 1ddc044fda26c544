#include "framekit/phi.hpp"

#include <stdexcept>

#include "framekit/detail/member_system.hpp"
#include "framekit/errors.hpp"
#include "framekit/linear_system.hpp"

namespace framekit {

InfNormResult inf_functional_norm(const FunctionalFamily& functionals, SpaceId space) {
    std::optional<Rational> best;
    std::optional<Index> best_at;
    const auto& prefix = functionals.prefix();
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        Rational v = dual_norm(prefix[i], space);
        if (!best || v < *best) {
            best = std::move(v);
            best_at = static_cast<Index>(i) + 1;
        }
    }

    const Index n0 = functionals.tail_start();
    const TailRule& tail = functionals.tail();
    Rational tail_inf;
    bool tail_attained = true;
    if (!tail.is_zero_rule()) {
        // ||k_n e*_{n+b}|| = |k_n| in both dual regimes.
        const Rational k = tail.scale.k().abs();
        switch (tail.scale.kind()) {
            case ScaleExpr::Kind::Const: tail_inf = k; break;
            case ScaleExpr::Kind::Linear: tail_inf = k * Rational(n0); break;
            case ScaleExpr::Kind::Inverse: tail_attained = false; break;
        }
    }

    InfNormResult out;
    if (!best || tail_inf < *best) {
        out.value = tail_inf;
        out.attained = tail_attained;
        if (tail_attained) out.attained_at = n0;
    } else {
        out.value = *best;
        out.attained = true;
        out.attained_at = best_at;
    }
    return out;
}

std::string PhiCertificate::describe() const {
    using namespace phi_outcome;
    if (std::holds_alternative<Certified>(outcome)) return "certified";
    if (const auto* c = std::get_if<Counterexample>(&outcome)) {
        return "counterexample at n = " + std::to_string(c->member) + ": Phi(x_n) = " + c->value.to_short_string();
    }
    if (std::holds_alternative<NotInDualSpace>(outcome)) return "functional is not in the dual space";
    return "no Phi exists: " + std::get<NoPhiExists>(outcome).reason;
}

PhiCertificate certify_phi(const VectorFamily& vectors, SpaceId space, const DualFunctional& phi) {
    if (!in_dual(phi, space)) return {phi_outcome::NotInDualSpace{}};
    const auto system = detail::MemberSystem::of(vectors);
    if (auto v = detail::first_pairing_violation(system, phi, Rational(1))) {
        return {phi_outcome::Counterexample{v->member, std::move(v->value)}};
    }
    return {phi_outcome::Certified{phi.normalized()}};
}

PhiCertificate find_phi(const VectorFamily& vectors, SpaceId space) {
    using Role = detail::ConstraintModel::Role;
    const auto system = detail::MemberSystem::of(vectors);
    const auto model = detail::build_model(system, space, Rational(1), false);

    IncrementalSystem equations(model.unknowns());
    for (const auto& eq : model.equations) {
        if (equations.add(eq.coeffs, eq.rhs)) continue;
        if (eq.role == Role::ClassRestriction) {
            throw UnsupportedTail("Phi(x_n) = 1 requires a dual tail proportional to 1/(n - b) with b = " +
                                  std::to_string(vectors.tail().index_offset) + ", outside the {0, c, c/n} class");
        }
        return {phi_outcome::NoPhiExists{"constraint '" + eq.label + "' contradicts the preceding constraints"}};
    }

    DualFunctional phi = model.functional(equations.basic_solution());
    PhiCertificate check = certify_phi(vectors, space, phi);
    if (!check.certified()) {
        throw std::logic_error("find_phi produced a functional that fails certification: " + check.describe());
    }
    return check;
}

PhiSchauderReport is_phi_schauder(const FramePair& frame, Index basis_count) {
    PhiSchauderReport report{verify_schauder(frame, basis_count), inf_functional_norm(frame), find_phi(frame), false, {}};
    if (!verified(report.schauder)) {
        report.reason = "not a Schauder frame: reconstruction of e_" +
                        std::to_string(std::get<SchauderFailure>(report.schauder).basis_index) + " does not terminate";
    } else if (report.inf_norm.value.is_zero()) {
        report.reason = "inf ||f_n|| = 0";
    } else if (!report.phi.certified()) {
        report.reason = report.phi.describe();
    } else {
        report.verdict = true;
        report.reason = "Schauder frame with inf ||f_n|| > 0 and certified Phi";
    }
    return report;
}

}  // namespace framekit
