#pragma once

#include <optional>
#include <string>
#include <variant>

#include "framekit/frame.hpp"
#include "framekit/sequence.hpp"

namespace framekit {

/// inf_n ||f_n||_{E*}, computed in closed form from the family's rules.
struct InfNormResult {
    Rational value;
    bool attained = false;
    /// Always true here: the tail contributes through its closed form, so
    /// the value holds for every n, not just a scanned prefix.
    bool certified = true;
    /// Smallest member index realizing the infimum, when attained.
    std::optional<Index> attained_at;
};

InfNormResult inf_functional_norm(const FunctionalFamily& functionals, SpaceId space);
inline InfNormResult inf_functional_norm(const FramePair& frame) {
    return inf_functional_norm(frame.functionals, frame.space);
}

namespace phi_outcome {

struct Certified {
    DualFunctional phi;
};

struct Counterexample {
    Index member;
    Rational value;
};

struct NotInDualSpace {};

struct NoPhiExists {
    std::string reason;
};

}  // namespace phi_outcome

/// Outcome of checking or searching for Phi with Phi(x_n) = 1 for all n.
struct PhiCertificate {
    std::variant<phi_outcome::Certified, phi_outcome::Counterexample, phi_outcome::NotInDualSpace,
                 phi_outcome::NoPhiExists>
        outcome;

    bool certified() const { return std::holds_alternative<phi_outcome::Certified>(outcome); }
    /// The certified functional; throws std::bad_variant_access otherwise.
    const DualFunctional& phi() const { return std::get<phi_outcome::Certified>(outcome).phi; }
    std::string describe() const;
};

/// Checks phi in E* and pair(phi, x_n) = 1 for every member: prefix members
/// exhaustively, tail members through the closed-form identity. A failure
/// reports the smallest violating index.
PhiCertificate certify_phi(const VectorFamily& vectors, SpaceId space, const DualFunctional& phi);
inline PhiCertificate certify_phi(const FramePair& frame, const DualFunctional& phi) {
    return certify_phi(frame.vectors, frame.space, phi);
}

/// Searches the {0, c, c/n}-tailed functionals for Phi with Phi(x_n) = 1.
/// Coordinates left free by the constraints are set to 0. Throws
/// UnsupportedTail when the constraints can only be met by a tail outside
/// that class.
PhiCertificate find_phi(const VectorFamily& vectors, SpaceId space);
inline PhiCertificate find_phi(const FramePair& frame) { return find_phi(frame.vectors, frame.space); }

struct PhiSchauderReport {
    SchauderResult schauder;
    InfNormResult inf_norm;
    PhiCertificate phi;
    bool verdict = false;
    std::string reason;
};

PhiSchauderReport is_phi_schauder(const FramePair& frame, Index basis_count);

}  // namespace framekit
