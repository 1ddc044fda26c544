#pragma once

#include <optional>
#include <string>

#include "framekit/frame.hpp"
#include "framekit/phi.hpp"
#include "framekit/retro.hpp"

namespace framekit {

/// {x_n + z0}: prefix members shifted entrywise, z0 added to the tail offset.
VectorFamily shift_family(const VectorFamily& family, const FinVec& z0);

enum class ConverseCheck { NotApplicable, Confirmed, Refuted };

std::string_view to_string(ConverseCheck check);

struct ShiftReport {
    FinVec z0;
    bool schauder_verified = false;
    TotalityResult totality;
    /// phi(z0) for the annihilator phi, when one was found.
    std::optional<Rational> annihilator_at_z0;
    /// certify_phi(frame, -phi / phi(z0)) when phi(z0) != 0.
    std::optional<PhiCertificate> derived_phi;
    /// The Phi (supplied, derived, or found) used for the Phi(z0) = -1 check.
    std::optional<DualFunctional> phi_used;
    ConverseCheck converse = ConverseCheck::NotApplicable;
    /// Set when the outcome contradicts what a genuine Schauder frame allows.
    std::string anomaly;
};

/// Annihilator analysis of {x_n + z0}, the derived Phi = -phi/phi(z0), and
/// the converse check: a certified Phi with Phi(z0) = -1 annihilates the
/// shifted family. Throws ZeroShift for z0 = 0.
ShiftReport analyze_shift(const FramePair& frame, const FinVec& z0,
                          const std::optional<DualFunctional>& supplied_phi = std::nullopt,
                          Index schauder_horizon = 50);

/// Element (x, y) of E x F.
struct PairVec {
    FinVec x;
    FinVec y;
    friend bool operator==(const PairVec&, const PairVec&) = default;
};

enum class Side { Left, Right };

/// h_n acts on exactly one component.
struct ProductFunctional {
    Side side;
    FinVec functional;
    Rational operator()(const PairVec& v) const { return dot(functional, side == Side::Left ? v.x : v.y); }
    friend bool operator==(const ProductFunctional&, const ProductFunctional&) = default;
};

/// Interleaved frame on E x F with the sum norm ||x|| + ||y||:
/// z_{2n-1} = (x_n, 0), z_{2n} = (0, y_n), h_{2n-1} = f_n, h_{2n} = g_n.
class ProductFrame {
public:
    ProductFrame(FramePair left, FramePair right) : left_(std::move(left)), right_(std::move(right)) {}

    const FramePair& left() const { return left_; }
    const FramePair& right() const { return right_; }

    PairVec vector(Index n) const;
    ProductFunctional functional(Index n) const;

    Rational norm(const PairVec& v) const;

private:
    FramePair left_;
    FramePair right_;
};

ProductFrame interleave(FramePair left, FramePair right);

/// ||(x, y) - sum_{n <= N} h_n(x, y) z_n||.
Rational verify_product(const ProductFrame& frame, const FinVec& x, const FinVec& y, Index n_terms);

/// Phi_0(x, y) = phi_left(x) + phi_right(y).
struct ProductDual {
    DualFunctional left;
    DualFunctional right;

    Rational operator()(const PairVec& v) const { return pair(left, v.x) + pair(right, v.y); }
};

ProductDual product_phi(DualFunctional phi_left, DualFunctional phi_right);

/// Dual norm under the sum norm on E x F: max of the component dual norms.
std::optional<Rational> dual_norm(const ProductDual& phi, SpaceId left, SpaceId right);

struct ProductPhiCertificate {
    PhiCertificate left;
    PhiCertificate right;
    bool certified = false;
    /// Smallest failing index of the interleaved sequence z_n, if any.
    std::optional<phi_outcome::Counterexample> counterexample;
};

/// Phi_0(z_n) = 1 for all n, by parity reduction: Phi_0(z_{2n-1}) = phi_left(x_n)
/// and Phi_0(z_{2n}) = phi_right(y_n).
ProductPhiCertificate certify_product_phi(const ProductFrame& frame, const ProductDual& phi);

/// inf ||h_n|| = min of the component infima.
InfNormResult inf_functional_norm(const ProductFrame& frame);

}  // namespace framekit
