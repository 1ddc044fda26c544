#include "framekit/checks.hpp"

#include <sstream>

#include "framekit/errors.hpp"

namespace framekit {

using nlohmann::ordered_json;

std::string_view to_string(Check check) {
    switch (check) {
        case Check::Schauder: return "schauder";
        case Check::Phi: return "phi";
        case Check::Retro: return "retro";
        case Check::TypeP: return "typep";
        case Check::Shift: return "shift";
        case Check::Product: return "product";
    }
    return "?";
}

std::optional<Check> parse_check(std::string_view name) {
    for (Check c : {Check::Schauder, Check::Phi, Check::Retro, Check::TypeP, Check::Shift, Check::Product}) {
        if (to_string(c) == name) return c;
    }
    return std::nullopt;
}

namespace {

ProductReport run_product(const FrameSpec& left, const FrameSpec& right, const CheckOptions& options) {
    ProductReport out;
    out.right_name = right.name;
    const ProductFrame frame = interleave(left.frame, right.frame);

    std::vector<std::pair<FinVec, FinVec>> inputs;
    if (options.product_verify) {
        inputs.push_back(*options.product_verify);
    } else {
        for (Index i = 1; i <= options.product_basis; ++i) {
            for (Index j = 1; j <= options.product_basis; ++j) inputs.emplace_back(FinVec::unit(i), FinVec::unit(j));
        }
    }

    out.reconstruction_verified = true;
    for (const auto& [x, y] : inputs) {
        bool ok = true;
        try {
            const Index nl = reconstruct(left.frame, x, Rational(0)).terms;
            const Index nr = reconstruct(right.frame, y, Rational(0)).terms;
            const Index n = 2 * std::max(nl, nr);
            out.terms_used = std::max(out.terms_used, n);
            ok = verify_product(frame, x, y, n).is_zero();
        } catch (const HorizonExceeded&) {
            ok = false;
        }
        if (!ok) {
            out.reconstruction_verified = false;
            out.failing_input = std::make_pair(x, y);
            break;
        }
    }

    out.inf_norm = inf_functional_norm(frame);
    const PhiCertificate left_phi = find_phi(left.frame);
    const PhiCertificate right_phi = find_phi(right.frame);
    if (left_phi.certified() && right_phi.certified()) {
        out.phi0 = certify_product_phi(frame, product_phi(left_phi.phi(), right_phi.phi()));
    }
    out.verdict = out.reconstruction_verified && !out.inf_norm.value.is_zero() && out.phi0 && out.phi0->certified;
    return out;
}

}  // namespace

CheckReport run_checks(const FrameSpec& spec, const CheckOptions& options) {
    CheckReport report;
    report.frame_name = spec.name;
    report.space = spec.frame.space;
    report.options = options;
    const FramePair& frame = spec.frame;

    for (Check check : options.checks) {
        const std::string key(to_string(check));
        switch (check) {
            case Check::Schauder:
                report.schauder = verify_schauder(frame, options.horizon);
                report.verdicts[key] = verified(*report.schauder);
                break;
            case Check::Phi:
                report.phi = is_phi_schauder(frame, options.horizon);
                report.verdicts[key] = report.phi->verdict;
                break;
            case Check::Retro: {
                RetroReport retro{totality(frame.vectors, frame.space), {}, {}};
                if (retro.totality.total()) {
                    RetroBoundsOptions bounds;
                    bounds.seed = options.seed;
                    bounds.sample_count = options.samples;
                    bounds.truncation = options.truncation;
                    bounds.coeff_norm = CoefficientNorm::Transported;
                    retro.canonical = estimate_retro_bounds(frame.vectors, frame.space, bounds);
                    bounds.coeff_norm = CoefficientNorm::SupNorm;
                    retro.sup = estimate_retro_bounds(frame.vectors, frame.space, bounds);
                }
                report.verdicts[key] = retro.totality.total();
                report.retro = std::move(retro);
                break;
            }
            case Check::TypeP:
                report.typep = classify_type_p(frame.vectors, frame.space, options.horizon);
                report.verdicts[key] = report.typep->is_type_p;
                break;
            case Check::Shift:
                if (!options.z0) throw ValidationError("--z0", "the shift check needs a shift vector");
                report.shift = analyze_shift(frame, *options.z0, options.shift_phi, options.horizon);
                report.verdicts[key] = report.shift->totality.total();
                break;
            case Check::Product:
                if (!options.product_with) throw ValidationError("product", "the product check needs a second frame");
                report.product = run_product(spec, *options.product_with, options);
                report.verdicts[key] = report.product->verdict;
                break;
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Rendering

std::string describe(const DualFunctional& phi) {
    const DualFunctional n = phi.normalized();
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < n.prefix().size(); ++i) os << (i ? ", " : "") << n.prefix()[i];
    const std::string sep = n.prefix().empty() ? "" : "; ";
    switch (n.tail_kind()) {
        case DualFunctional::TailKind::Zero: os << sep << "0, 0, ..."; break;
        case DualFunctional::TailKind::Const: os << sep << n.c() << ", " << n.c() << ", ..."; break;
        case DualFunctional::TailKind::Inverse: os << sep << n.c() << "/n for n >= " << n.tail_start(); break;
    }
    os << ")";
    return os.str();
}

ordered_json to_json(const DualFunctional& phi) {
    const DualFunctional n = phi.normalized();
    ordered_json prefix = ordered_json::array();
    for (const auto& v : n.prefix()) prefix.push_back(v.to_string());
    ordered_json out;
    out["prefix"] = std::move(prefix);
    out["tail"] = {{"kind", std::string(to_string(n.tail_kind()))}, {"c", n.c().to_string()}};
    return out;
}

ordered_json to_json(const PhiCertificate& cert) {
    ordered_json out;
    std::visit(
        [&](const auto& o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, phi_outcome::Certified>) {
                out["outcome"] = "certified";
                out["phi"] = to_json(o.phi);
            } else if constexpr (std::is_same_v<T, phi_outcome::Counterexample>) {
                out["outcome"] = "counterexample";
                out["n"] = o.member;
                out["value"] = o.value.to_string();
            } else if constexpr (std::is_same_v<T, phi_outcome::NotInDualSpace>) {
                out["outcome"] = "not_in_dual_space";
            } else {
                out["outcome"] = "no_phi_exists";
                out["reason"] = o.reason;
            }
        },
        cert.outcome);
    return out;
}

ordered_json to_json(const TotalityResult& result) {
    ordered_json out;
    if (result.total()) {
        out["outcome"] = "total";
    } else {
        out["outcome"] = "annihilator";
        out["phi"] = to_json(result.annihilator());
    }
    return out;
}

namespace {

ordered_json finvec_json(const FinVec& v) {
    ordered_json out = ordered_json::array();
    for (const auto& [i, value] : v.entries()) out.push_back(ordered_json::array({i, value.to_string()}));
    return out;
}

ordered_json to_json(const SchauderResult& r) {
    ordered_json out;
    if (verified(r)) {
        out["outcome"] = "verified";
    } else {
        const auto& f = std::get<SchauderFailure>(r);
        out["outcome"] = "fails_at";
        out["m"] = f.basis_index;
        out["best_residual"] = f.best_residual.to_string();
    }
    return out;
}

ordered_json to_json(const InfNormResult& r) {
    ordered_json out;
    out["value"] = r.value.to_string();
    out["attained"] = r.attained;
    out["certified"] = r.certified;
    out["attained_at"] = r.attained_at ? ordered_json(*r.attained_at) : ordered_json(nullptr);
    return out;
}

ordered_json to_json(const BoundsEstimate& b, CoefficientNorm norm) {
    ordered_json out;
    out["coefficient_norm"] = std::string(to_string(norm));
    out["A"] = b.lower.to_string();
    out["B"] = b.upper.to_string();
    out["exact"] = b.exact;
    out["samples"] = b.samples;
    out["horizon"] = b.horizon;
    out["seed"] = b.seed;
    out["well_defined"] = b.well_defined;
    return out;
}

ordered_json to_json(const ExactResult& e) {
    ordered_json out;
    out["definition"] = std::string(kExactnessDefinition);
    out["total"] = e.total;
    out["exact"] = e.exact;
    out["removable_member"] = e.removable ? ordered_json(*e.removable) : ordered_json(nullptr);
    out["members_checked"] = e.checked.size();
    return out;
}

}  // namespace

ordered_json to_json(const CheckReport& report) {
    ordered_json out;
    out["frame"] = report.frame_name;
    out["space"] = std::string(to_string(report.space));

    const CheckOptions& o = report.options;
    ordered_json provenance;
    ordered_json checks = ordered_json::array();
    for (Check c : o.checks) checks.push_back(std::string(to_string(c)));
    provenance["checks"] = std::move(checks);
    provenance["horizon"] = o.horizon;
    provenance["seed"] = o.seed;
    provenance["samples"] = o.samples;
    provenance["truncation"] = o.truncation;
    provenance["product_norm"] = "sum";
    out["provenance"] = std::move(provenance);

    if (report.schauder) out["schauder"] = to_json(*report.schauder);
    if (report.phi) {
        ordered_json p;
        p["verdict"] = report.phi->verdict;
        p["reason"] = report.phi->reason;
        p["schauder"] = to_json(report.phi->schauder);
        p["inf_functional_norm"] = to_json(report.phi->inf_norm);
        p["phi"] = to_json(report.phi->phi);
        out["phi"] = std::move(p);
    }
    if (report.retro) {
        ordered_json r;
        r["totality"] = to_json(report.retro->totality);
        if (report.retro->canonical) r["canonical_bounds"] = to_json(*report.retro->canonical, CoefficientNorm::Transported);
        if (report.retro->sup) r["sup_norm_bounds"] = to_json(*report.retro->sup, CoefficientNorm::SupNorm);
        out["retro"] = std::move(r);
    }
    if (report.typep) {
        ordered_json t;
        t["is_type_p"] = report.typep->is_type_p;
        t["exactness"] = to_json(report.typep->exactness);
        t["psi"] = to_json(report.typep->psi);
        out["typep"] = std::move(t);
    }
    if (report.shift) {
        const ShiftReport& s = *report.shift;
        ordered_json j;
        j["z0"] = finvec_json(s.z0);
        j["schauder_verified"] = s.schauder_verified;
        j["totality"] = to_json(s.totality);
        j["annihilator_at_z0"] = s.annihilator_at_z0 ? ordered_json(s.annihilator_at_z0->to_string()) : ordered_json(nullptr);
        j["derived_phi"] = s.derived_phi ? to_json(*s.derived_phi) : ordered_json(nullptr);
        j["phi_used"] = s.phi_used ? to_json(*s.phi_used) : ordered_json(nullptr);
        j["converse"] = std::string(to_string(s.converse));
        j["anomaly"] = s.anomaly;
        out["shift"] = std::move(j);
    }
    if (report.product) {
        const ProductReport& p = *report.product;
        ordered_json j;
        j["right"] = p.right_name;
        j["reconstruction_verified"] = p.reconstruction_verified;
        j["terms_used"] = p.terms_used;
        if (p.failing_input) {
            j["failing_input"] = {{"x", finvec_json(p.failing_input->first)}, {"y", finvec_json(p.failing_input->second)}};
        }
        j["inf_functional_norm"] = to_json(p.inf_norm);
        if (p.phi0) {
            ordered_json phi0;
            phi0["certified"] = p.phi0->certified;
            phi0["left"] = to_json(p.phi0->left);
            phi0["right"] = to_json(p.phi0->right);
            j["phi0"] = std::move(phi0);
        } else {
            j["phi0"] = nullptr;
        }
        j["verdict"] = p.verdict;
        out["product"] = std::move(j);
    }
    ordered_json verdicts;
    for (const auto& [k, v] : report.verdicts) verdicts[k] = v;
    out["verdicts"] = std::move(verdicts);
    return out;
}

std::string to_text(const CheckReport& report) {
    std::ostringstream os;
    os << "frame " << report.frame_name << " over " << to_string(report.space) << "\n";
    if (report.schauder) {
        os << "  schauder (M=" << report.options.horizon << "): ";
        if (verified(*report.schauder)) {
            os << "verified\n";
        } else {
            const auto& f = std::get<SchauderFailure>(*report.schauder);
            os << "fails at e_" << f.basis_index << " (best residual " << f.best_residual << ")\n";
        }
    }
    if (report.phi) {
        const auto& p = *report.phi;
        os << "  phi-schauder: " << (p.verdict ? "yes" : "no") << " (" << p.reason << ")\n";
        os << "    inf ||f_n|| = " << p.inf_norm.value << (p.inf_norm.attained ? " attained" : " not attained");
        if (p.inf_norm.attained_at) os << " at n=" << *p.inf_norm.attained_at;
        os << "\n    Phi: " << p.phi.describe();
        if (p.phi.certified()) os << " " << describe(p.phi.phi());
        os << "\n";
    }
    if (report.retro) {
        const auto& r = *report.retro;
        os << "  retro: ";
        if (r.totality.total()) {
            os << "total\n";
            if (r.canonical) os << "    canonical bounds A=" << r.canonical->lower << " B=" << r.canonical->upper << " (exact)\n";
            if (r.sup) {
                os << "    sup-norm witnesses A=" << r.sup->lower << " B=" << r.sup->upper << " (" << r.sup->samples
                   << " samples, seed " << r.sup->seed << ")\n";
            }
        } else {
            os << "annihilator " << describe(r.totality.annihilator()) << "\n";
        }
    }
    if (report.typep) {
        const auto& t = *report.typep;
        os << "  type-P: " << (t.is_type_p ? "yes" : "no") << "\n";
        os << "    " << kExactnessDefinition << "\n";
        os << "    exact: " << (t.exactness.exact ? "yes" : "no");
        if (!t.exactness.total) os << " (family not total)";
        if (t.exactness.removable) os << " (member " << *t.exactness.removable << " is removable)";
        os << "\n    Psi: " << t.psi.describe();
        if (t.psi.certified()) os << " " << describe(t.psi.phi());
        os << "\n";
    }
    if (report.shift) {
        const auto& s = *report.shift;
        os << "  shift by z0 = " << format_finvec_literal(s.z0) << ": ";
        if (s.totality.total()) {
            os << "shifted family total\n";
        } else {
            os << "annihilator " << describe(s.totality.annihilator());
            if (s.annihilator_at_z0) os << ", phi(z0) = " << *s.annihilator_at_z0;
            os << "\n";
        }
        if (s.derived_phi) {
            os << "    derived Phi = -phi/phi(z0): " << s.derived_phi->describe();
            if (s.derived_phi->certified()) os << " " << describe(s.derived_phi->phi());
            os << "\n";
        }
        os << "    Phi(z0) = -1 converse: " << to_string(s.converse) << "\n";
        if (!s.anomaly.empty()) os << "    anomaly: " << s.anomaly << "\n";
    }
    if (report.product) {
        const auto& p = *report.product;
        os << "  product with " << p.right_name << " (sum norm): " << (p.verdict ? "phi-schauder" : "not phi-schauder") << "\n";
        os << "    reconstruction: " << (p.reconstruction_verified ? "exact" : "fails");
        if (p.failing_input) {
            os << " at x=" << format_finvec_literal(p.failing_input->first)
               << " y=" << format_finvec_literal(p.failing_input->second);
        }
        os << "\n    inf ||h_n|| = " << p.inf_norm.value << "\n";
        if (p.phi0) os << "    Phi_0: " << (p.phi0->certified ? "certified" : "fails") << "\n";
    }
    return os.str();
}

}  // namespace framekit
