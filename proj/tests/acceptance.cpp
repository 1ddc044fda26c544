// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "framekit/checks.hpp"
#include "framekit/constructions.hpp"
#include "framekit/phi.hpp"
#include "framekit/retro.hpp"
#include "framekit/spec_io.hpp"
#include "properties.hpp"

using namespace framekit;
using fixtures::e;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (!pass) detail << "; ";
            else detail.str("");
            pass = false;
            detail << what;
        }
    }
};

using Criterion = std::function<void(Verdict&)>;

void example_a(Verdict& v) {
    CheckOptions o;
    o.checks = {Check::Schauder, Check::Phi};
    o.horizon = 50;
    const auto r = run_checks(builtin_spec("example-2.1a"), o);
    v.require(r.schauder && verified(*r.schauder), "Schauder not verified at M=50");
    v.require(r.phi && r.phi->inf_norm.value == Rational(1) && r.phi->inf_norm.certified, "inf ||f_n|| != 1");
    const auto cert = certify_phi(builtin_spec("example-2.1a").frame, fixtures::phi_a());
    v.require(cert.certified(), "certify_phi((2,1,1,...)) = " + cert.describe());
    if (v.pass) v.detail << "Schauder verified (M=50), inf ||f_n|| = 1, Phi = (2,1,1,...) certified";
}

void example_b(Verdict& v) {
    const auto frame = builtin_spec("example-2.1b").frame;
    const auto r = is_phi_schauder(frame, 50);
    v.require(verified(r.schauder), "Schauder not verified");
    v.require(r.inf_norm.value == Rational(0), "inf ||f_n|| != 0");
    v.require(r.inf_norm.attained && r.inf_norm.attained_at == Index{1}, "infimum not attained at n=1");
    v.require(!r.verdict, "Phi-Schauder verdict true");
    if (v.pass) v.detail << "Schauder verified, inf ||f_n|| = 0 at n=1, not Phi-Schauder";
}

void no_phi_over_c0(Verdict& v) {
    const auto cert = find_phi(fixtures::ex_a(SpaceId::C0));
    v.require(std::holds_alternative<phi_outcome::NoPhiExists>(cert.outcome), "find_phi over c0 = " + cert.describe());
    v.require(find_phi(fixtures::ex_a(SpaceId::L1)).certified(), "find_phi over l1 not certified");
    if (v.pass) v.detail << "c0: " << cert.describe();
}

void shift_total(Verdict& v) {
    const auto frame = fixtures::ex_a();
    const auto r = analyze_shift(frame, e(1, Rational(-1)));
    v.require(r.totality.total(), "shifted family not total");
    RetroBoundsOptions o;
    o.coeff_norm = CoefficientNorm::Transported;
    const auto b = estimate_retro_bounds(shift_family(frame.vectors, e(1, Rational(-1))), SpaceId::L1, o);
    v.require(b.exact && b.lower == Rational(1) && b.upper == Rational(1), "bounds not A=B=1 exact");
    v.require(b.well_defined, "coefficient map not injective on samples");
    if (v.pass) v.detail << "z0=-e1: Total, A=B=1 exact";
}

void shift_annihilator(Verdict& v) {
    const auto r = analyze_shift(fixtures::ex_a(), e(1, Rational(-1, 2)));
    v.require(!r.totality.total(), "no annihilator found");
    if (!r.totality.total()) v.require(r.totality.annihilator() == fixtures::phi_a(), "annihilator is not (2,1,1,...)");
    v.require(r.derived_phi && r.derived_phi->certified(), "derived Phi not certified");
    if (r.derived_phi && r.derived_phi->certified())
        v.require(r.derived_phi->phi() == fixtures::phi_a(), "derived Phi differs from (2,1,1,...)");
    v.require(r.converse == ConverseCheck::Confirmed, "converse not confirmed");
    if (v.pass) v.detail << "annihilator (2,1,1,...), derived Phi certified and equal, converse confirmed";
}

void type_p(Verdict& v) {
    const auto a = classify_type_p(fixtures::ex_a().vectors, SpaceId::L1, 20);
    v.require(!a.is_type_p, "example-2.1a classified type P");
    v.require(!a.exactness.exact && a.exactness.removable == Index{1}, "example-2.1a witness is not m=1");
    const auto c = classify_type_p(fixtures::ex_c().vectors, SpaceId::L1, 20);
    v.require(c.is_type_p, "remark-3.2 frame not type P");
    v.require(c.psi.certified() && c.psi.phi() == fixtures::psi_c(), "Psi is not (1/n)");
    if (v.pass) v.detail << "example-2.1a: not exact, m=1 removable; x_n = n e_n: type P with Psi = (1/n)";
}

void product(Verdict& v) {
    const auto p = interleave(fixtures::ex_a(), fixtures::ex_a());
    int pairs = 0;
    for (Index i = 1; i <= 25; ++i) {
        for (Index j = 1; j <= 25; ++j) {
            const Index bound = 2 * (std::max(i, j) + 1);
            Index hit = 0;
            for (Index n = 1; n <= bound && hit == 0; ++n)
                if (verify_product(p, e(i), e(j), n).is_zero()) hit = n;
            v.require(hit != 0, "(e_" + std::to_string(i) + ", e_" + std::to_string(j) + ") not exact by N=" +
                                    std::to_string(bound));
            ++pairs;
        }
    }
    const auto cert = certify_product_phi(p, product_phi(fixtures::phi_a(), fixtures::phi_a()));
    v.require(cert.certified, "Phi_0 not certified");
    const auto inf = inf_functional_norm(p);
    v.require(inf.value == Rational(1), "inf ||h_n|| != 1");
    if (v.pass) v.detail << pairs << " basis pairs exact, Phi_0 certified, inf ||h_n|| = 1";
}

void properties(Verdict& v) {
    const auto start = std::chrono::steady_clock::now();
    int total = 0;
    auto take = [&](const char* name, const props::Outcome& r) {
        total += r.cases;
        v.require(r.cases >= 1000, std::string(name) + ": only " + std::to_string(r.cases) + " cases");
        v.require(r.ok(), std::string(name) + ": " + r.first_failure);
    };
    for (Index m : {4, 8, 16})
        take(("totality M=" + std::to_string(m)).c_str(), props::totality_vs_kernel(m, 1000, 1000 + static_cast<std::uint64_t>(m)));
    take("certify_phi", props::certify_phi_soundness(1000, 2000));
    take("linearity", props::partial_sum_linearity(1000, 3000));
    take("duality", props::duality_bound(1000, 4000));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(secs < 60.0, "took " + std::to_string(secs) + " s");
    if (v.pass) v.detail << total << " cases, 0 failures, " << static_cast<int>(secs * 1000) << " ms";
}

}  // namespace

int main() {
    const std::pair<const char*, Criterion> criteria[] = {
        {"example-2.1a: Schauder, inf norm 1, Phi certified", example_a},
        {"example-2.1b: inf norm 0, not Phi-Schauder", example_b},
        {"example-2.1a over c0: no Phi", no_phi_over_c0},
        {"shift by -e1: total, A=B=1", shift_total},
        {"shift by -e1/2: annihilator and derived Phi", shift_annihilator},
        {"type P: example-2.1a no, remark-3.2 yes", type_p},
        {"interleaved product frame", product},
        {"randomized property suite", properties},
    };
    int failures = 0;
    int id = 0;
    for (const auto& [name, run] : criteria) {
        ++id;
        Verdict v;
        try {
            run(v);
        } catch (const std::exception& ex) {
            v.require(false, std::string("exception: ") + ex.what());
        }
        std::cout << (v.pass ? "PASS" : "FAIL") << " " << id << " " << name << ": " << v.detail.str() << "\n";
        failures += v.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
