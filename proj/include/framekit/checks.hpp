#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include <json.hpp>

#include "framekit/constructions.hpp"
#include "framekit/phi.hpp"
#include "framekit/retro.hpp"
#include "framekit/spec_io.hpp"

namespace framekit {

enum class Check { Schauder, Phi, Retro, TypeP, Shift, Product };

std::string_view to_string(Check check);
std::optional<Check> parse_check(std::string_view name);

struct CheckOptions {
    std::set<Check> checks{Check::Schauder, Check::Phi, Check::Retro, Check::TypeP};
    /// Basis horizon M for Schauder verification and the exactness scan.
    Index horizon = 50;
    std::uint64_t seed = 1;
    Index samples = 200;
    Index truncation = 16;
    std::optional<FinVec> z0;
    std::optional<DualFunctional> shift_phi;
    std::optional<FrameSpec> product_with;
    /// Explicit (x, y) for the product check; otherwise every (e_i, e_j) with i, j <= product_basis.
    std::optional<std::pair<FinVec, FinVec>> product_verify;
    Index product_basis = 10;
};

struct RetroReport {
    TotalityResult totality;
    std::optional<BoundsEstimate> canonical;
    std::optional<BoundsEstimate> sup;
};

struct ProductReport {
    std::string right_name;
    bool reconstruction_verified = false;
    /// Largest N used to reach an exact zero residual.
    Index terms_used = 0;
    std::optional<std::pair<FinVec, FinVec>> failing_input;
    InfNormResult inf_norm;
    std::optional<ProductPhiCertificate> phi0;
    bool verdict = false;
};

struct CheckReport {
    std::string frame_name;
    SpaceId space = SpaceId::L1;
    CheckOptions options;
    std::optional<SchauderResult> schauder;
    std::optional<PhiSchauderReport> phi;
    std::optional<RetroReport> retro;
    std::optional<TypePReport> typep;
    std::optional<ShiftReport> shift;
    std::optional<ProductReport> product;
    /// One boolean per selected check, keyed by the check name.
    std::map<std::string, bool> verdicts;
};

/// Runs the selected checks in a fixed order. Deterministic given options.seed.
CheckReport run_checks(const FrameSpec& spec, const CheckOptions& options);

/// Machine-readable report; every rational is a "p/q" string.
nlohmann::ordered_json to_json(const CheckReport& report);
std::string to_text(const CheckReport& report);

nlohmann::ordered_json to_json(const DualFunctional& phi);
nlohmann::ordered_json to_json(const PhiCertificate& cert);
nlohmann::ordered_json to_json(const TotalityResult& result);
std::string describe(const DualFunctional& phi);

}  // namespace framekit
