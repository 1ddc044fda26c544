#pragma once

// Frames from the worked examples, built directly (not through the JSON
// reader) so spec-file tests can compare against them.

#include "framekit/frame.hpp"
#include "framekit/sequence.hpp"

namespace fixtures {

using framekit::DualFunctional;
using framekit::FinVec;
using framekit::FramePair;
using framekit::FunctionalFamily;
using framekit::Index;
using framekit::Rational;
using framekit::ScaleExpr;
using framekit::SpaceId;
using framekit::TailRule;
using framekit::VectorFamily;

inline FinVec e(Index i, Rational k = Rational(1)) { return FinVec::unit(i, k); }

/// x_1 = x_2 = e_1/2, x_n = e_{n-1}; f_1 = f_2 = xi_1, f_n = xi_{n-1}.
inline FramePair ex_a(SpaceId space = SpaceId::L1) {
    const auto tail = TailRule::shifted_canonical(-1, ScaleExpr::constant(Rational(1)));
    return {VectorFamily({e(1, Rational(1, 2)), e(1, Rational(1, 2))}, tail), FunctionalFamily({e(1), e(1)}, tail), space};
}

/// x_1 = e_1, f_1 = 0; x_n = e_{n-1}, f_n = xi_{n-1} for n >= 2.
inline FramePair ex_b() {
    const auto tail = TailRule::shifted_canonical(-1, ScaleExpr::constant(Rational(1)));
    return {VectorFamily({e(1)}, tail), FunctionalFamily({FinVec{}}, tail), SpaceId::L1};
}

/// x_n = n e_n, f_n = xi_n / n.
inline FramePair ex_c() {
    return {VectorFamily({}, TailRule::shifted_canonical(0, ScaleExpr::linear(Rational(1)))),
            FunctionalFamily({}, TailRule::shifted_canonical(0, ScaleExpr::inverse(Rational(1)))), SpaceId::L1};
}

inline FramePair canonical(SpaceId space = SpaceId::L1) {
    return {framekit::canonical_vectors(), framekit::canonical_functionals(), space};
}

/// (2, 1, 1, 1, ...)
inline DualFunctional phi_a() { return DualFunctional({Rational(2)}, DualFunctional::TailKind::Const, Rational(1)); }

/// (1, 1/2, 1/3, ...)
inline DualFunctional psi_c() { return DualFunctional({}, DualFunctional::TailKind::Inverse, Rational(1)); }

}  // namespace fixtures
