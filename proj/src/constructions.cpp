#include "framekit/constructions.hpp"

#include <stdexcept>

#include "framekit/detail/member_system.hpp"
#include "framekit/errors.hpp"

namespace framekit {

VectorFamily shift_family(const VectorFamily& family, const FinVec& z0) {
    std::vector<FinVec> prefix;
    prefix.reserve(family.prefix().size());
    for (const auto& v : family.prefix()) prefix.push_back(v + z0);
    TailRule tail = family.tail();
    tail.offset = tail.offset + z0;
    return VectorFamily(std::move(prefix), std::move(tail));
}

std::string_view to_string(ConverseCheck check) {
    switch (check) {
        case ConverseCheck::NotApplicable: return "not-applicable";
        case ConverseCheck::Confirmed: return "confirmed";
        case ConverseCheck::Refuted: return "refuted";
    }
    return "?";
}

ShiftReport analyze_shift(const FramePair& frame, const FinVec& z0, const std::optional<DualFunctional>& supplied_phi,
                          Index schauder_horizon) {
    if (z0.is_zero()) throw ZeroShift();

    ShiftReport report;
    report.z0 = z0;
    report.schauder_verified = verified(verify_schauder(frame, schauder_horizon));

    const VectorFamily shifted = shift_family(frame.vectors, z0);
    report.totality = totality(shifted, frame.space);

    if (!report.totality.total()) {
        const DualFunctional& phi = report.totality.annihilator();
        const Rational at_z0 = pair(phi, z0);
        report.annihilator_at_z0 = at_z0;
        if (!at_z0.is_zero()) {
            report.derived_phi = certify_phi(frame, (-at_z0.reciprocal()) * phi);
            if (!report.derived_phi->certified() && report.schauder_verified) {
                report.anomaly = "derived Phi = -phi/phi(z0) failed certification: " + report.derived_phi->describe();
            }
        } else {
            report.anomaly = "annihilator of the shifted family vanishes at z0, so it annihilates every x_n";
        }
    }

    std::optional<DualFunctional> candidate = supplied_phi;
    if (!candidate && report.derived_phi && report.derived_phi->certified()) candidate = report.derived_phi->phi();
    if (!candidate) {
        try {
            if (auto found = find_phi(frame); found.certified()) candidate = found.phi();
        } catch (const UnsupportedTail&) {
        }
    }
    if (candidate) {
        report.phi_used = candidate->normalized();
        if (certify_phi(frame, *candidate).certified() && pair(*candidate, z0) == Rational(-1)) {
            const auto system = detail::MemberSystem::of(shifted);
            report.converse = detail::first_pairing_violation(system, *candidate, Rational(0))
                                   ? ConverseCheck::Refuted
                                   : ConverseCheck::Confirmed;
            if (report.converse == ConverseCheck::Confirmed && report.totality.total()) {
                report.anomaly = "Phi annihilates the shifted family but the totality search reported Total";
            }
        }
    }
    return report;
}

PairVec ProductFrame::vector(Index n) const {
    if (n < 1) throw std::out_of_range("product members are indexed from 1");
    const Index k = (n + 1) / 2;
    if (n % 2 == 1) return {left_.vectors.member(k), {}};
    return {{}, right_.vectors.member(k)};
}

ProductFunctional ProductFrame::functional(Index n) const {
    if (n < 1) throw std::out_of_range("product members are indexed from 1");
    const Index k = (n + 1) / 2;
    if (n % 2 == 1) return {Side::Left, left_.functionals.member(k)};
    return {Side::Right, right_.functionals.member(k)};
}

Rational ProductFrame::norm(const PairVec& v) const {
    return framekit::norm(v.x, left_.space) + framekit::norm(v.y, right_.space);
}

ProductFrame interleave(FramePair left, FramePair right) { return ProductFrame(std::move(left), std::move(right)); }

Rational verify_product(const ProductFrame& frame, const FinVec& x, const FinVec& y, Index n_terms) {
    if (n_terms < 1) throw std::invalid_argument("number of terms must be >= 1");
    const PairVec target{x, y};
    PairVec sum;
    for (Index n = 1; n <= n_terms; ++n) {
        const Rational a = frame.functional(n)(target);
        if (a.is_zero()) continue;
        const PairVec z = frame.vector(n);
        sum.x = sum.x + a * z.x;
        sum.y = sum.y + a * z.y;
    }
    return frame.norm({x - sum.x, y - sum.y});
}

ProductDual product_phi(DualFunctional phi_left, DualFunctional phi_right) {
    return {std::move(phi_left), std::move(phi_right)};
}

std::optional<Rational> dual_norm(const ProductDual& phi, SpaceId left, SpaceId right) {
    auto l = dual_norm(phi.left, left);
    auto r = dual_norm(phi.right, right);
    if (!l || !r) return std::nullopt;
    return max(*l, *r);
}

ProductPhiCertificate certify_product_phi(const ProductFrame& frame, const ProductDual& phi) {
    ProductPhiCertificate out{certify_phi(frame.left(), phi.left), certify_phi(frame.right(), phi.right), false, {}};
    out.certified = out.left.certified() && out.right.certified();

    auto consider = [&](const PhiCertificate& cert, Index (*to_interleaved)(Index)) {
        const auto* c = std::get_if<phi_outcome::Counterexample>(&cert.outcome);
        if (c == nullptr) return;
        const Index n = to_interleaved(c->member);
        if (!out.counterexample || n < out.counterexample->member) out.counterexample = {n, c->value};
    };
    consider(out.left, [](Index n) { return 2 * n - 1; });
    consider(out.right, [](Index n) { return 2 * n; });
    return out;
}

InfNormResult inf_functional_norm(const ProductFrame& frame) {
    const InfNormResult l = inf_functional_norm(frame.left());
    const InfNormResult r = inf_functional_norm(frame.right());
    InfNormResult out;
    out.certified = l.certified && r.certified;
    out.value = min(l.value, r.value);
    out.attained = (l.attained && l.value == out.value) || (r.attained && r.value == out.value);
    // Interleaved index of the first attaining member.
    std::optional<Index> at;
    if (l.attained && l.value == out.value) at = 2 * *l.attained_at - 1;
    if (r.attained && r.value == out.value && (!at || 2 * *r.attained_at < *at)) at = 2 * *r.attained_at;
    out.attained_at = at;
    return out;
}

}  // namespace framekit
