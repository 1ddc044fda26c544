#include "framekit/sequence.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "framekit/errors.hpp"

namespace framekit {

std::string_view to_string(SpaceId space) { return space == SpaceId::L1 ? "l1" : "c0"; }

std::optional<SpaceId> parse_space(std::string_view text) {
    if (text == "l1" || text == "L1") return SpaceId::L1;
    if (text == "c0" || text == "C0") return SpaceId::C0;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// FinVec

FinVec::FinVec(std::vector<Entry> entries) : entries_(std::move(entries)) {
    Index previous = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& [index, value] = entries_[i];
        if (index < 1) {
            throw ValidationError("entries[" + std::to_string(i) + "]", "index must be >= 1, got " + std::to_string(index));
        }
        if (index <= previous) {
            throw ValidationError("entries[" + std::to_string(i) + "]", "indices must be strictly increasing");
        }
        if (value.is_zero()) {
            throw ValidationError("entries[" + std::to_string(i) + "]", "zero values are not stored");
        }
        previous = index;
    }
}

FinVec FinVec::from_terms(std::vector<Entry> terms) {
    std::map<Index, Rational> acc;
    for (auto& [index, value] : terms) {
        if (index < 1) throw ValidationError("entries", "index must be >= 1, got " + std::to_string(index));
        acc[index] += value;
    }
    FinVec out;
    for (auto& [index, value] : acc) {
        if (!value.is_zero()) out.entries_.emplace_back(index, std::move(value));
    }
    return out;
}

FinVec FinVec::unit(Index index, const Rational& scale) {
    if (scale.is_zero()) return {};
    return FinVec({{index, scale}});
}

Rational FinVec::at(Index index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, Index i) { return e.first < i; });
    if (it != entries_.end() && it->first == index) return it->second;
    return Rational(0);
}

FinVec FinVec::operator-() const {
    FinVec out = *this;
    for (auto& e : out.entries_) e.second = -e.second;
    return out;
}

namespace {

// Merge of two sorted supports with a sign on the right operand.
FinVec merge(const FinVec& a, const FinVec& b, bool subtract) {
    std::vector<FinVec::Entry> out;
    out.reserve(a.size() + b.size());
    auto ia = a.entries().begin();
    auto ib = b.entries().begin();
    while (ia != a.entries().end() || ib != b.entries().end()) {
        if (ib == b.entries().end() || (ia != a.entries().end() && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == a.entries().end() || ib->first < ia->first) {
            out.emplace_back(ib->first, subtract ? -ib->second : ib->second);
            ++ib;
        } else {
            Rational v = subtract ? ia->second - ib->second : ia->second + ib->second;
            if (!v.is_zero()) out.emplace_back(ia->first, std::move(v));
            ++ia;
            ++ib;
        }
    }
    return FinVec(std::move(out));
}

}  // namespace

FinVec operator+(const FinVec& a, const FinVec& b) { return merge(a, b, false); }
FinVec operator-(const FinVec& a, const FinVec& b) { return merge(a, b, true); }

FinVec operator*(const Rational& k, const FinVec& v) {
    if (k.is_zero()) return {};
    FinVec out = v;
    for (auto& e : out.entries_) e.second *= k;
    return out;
}

Rational dot(const FinVec& a, const FinVec& b) {
    Rational sum;
    auto ia = a.entries_.begin();
    auto ib = b.entries_.begin();
    while (ia != a.entries_.end() && ib != b.entries_.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            sum += ia->second * ib->second;
            ++ia;
            ++ib;
        }
    }
    return sum;
}

// ---------------------------------------------------------------------------
// ScaleExpr / TailRule

ScaleExpr::ScaleExpr(Kind kind, Rational k) : kind_(kind), k_(std::move(k)) {
    if (k_.is_zero()) {
        throw ValidationError("scale/k", "scale must be non-zero (use the zero tail rule instead)");
    }
}

Rational ScaleExpr::operator()(Index n) const {
    switch (kind_) {
        case Kind::Const: return k_;
        case Kind::Linear: return k_ * Rational(n);
        case Kind::Inverse: return k_ / Rational(n);
    }
    return k_;
}

std::string_view to_string(ScaleExpr::Kind kind) {
    switch (kind) {
        case ScaleExpr::Kind::Const: return "const";
        case ScaleExpr::Kind::Linear: return "linear";
        case ScaleExpr::Kind::Inverse: return "inverse";
    }
    return "?";
}

FinVec TailRule::member(Index n) const {
    if (kind == Kind::Zero) return offset;
    return FinVec::unit(n + index_offset, scale(n)) + offset;
}

bool operator==(const TailRule& a, const TailRule& b) {
    if (a.kind != b.kind || a.offset != b.offset) return false;
    if (a.kind == TailRule::Kind::Zero) return true;
    return a.index_offset == b.index_offset && a.scale == b.scale;
}

// ---------------------------------------------------------------------------
// Families

RuleFamily::RuleFamily(std::vector<FinVec> prefix, TailRule tail) : prefix_(std::move(prefix)), tail_(std::move(tail)) {
    if (tail_.kind == TailRule::Kind::ShiftedCanonical && tail_start() + tail_.index_offset < 1) {
        throw ValidationError("tail/offset_index", "tail start " + std::to_string(tail_start()) + " + offset " +
                                                       std::to_string(tail_.index_offset) + " addresses a coordinate < 1");
    }
}

FinVec RuleFamily::member(Index n) const {
    if (n < 1) throw std::out_of_range("family members are indexed from 1");
    if (n <= static_cast<Index>(prefix_.size())) return prefix_[static_cast<std::size_t>(n - 1)];
    return tail_.member(n);
}

Index RuleFamily::max_fixed_index() const {
    Index m = tail_.offset.max_index();
    for (const auto& v : prefix_) m = std::max(m, v.max_index());
    return m;
}

FunctionalFamily::FunctionalFamily(std::vector<FinVec> prefix, TailRule tail)
    : RuleFamily(std::move(prefix), std::move(tail)) {
    if (!this->tail().offset.is_zero()) {
        throw ValidationError("tail/offset_vector", "functional families take no tail offset");
    }
}

VectorFamily canonical_vectors() {
    return VectorFamily({}, TailRule::shifted_canonical(0, ScaleExpr::constant(Rational(1))));
}

FunctionalFamily canonical_functionals() {
    return FunctionalFamily({}, TailRule::shifted_canonical(0, ScaleExpr::constant(Rational(1))));
}

FinVec family_member(const RuleFamily& family, Index n) { return family.member(n); }

// ---------------------------------------------------------------------------
// DualFunctional

DualFunctional::DualFunctional(std::vector<Rational> prefix, TailKind tail_kind, Rational c)
    : prefix_(std::move(prefix)), tail_kind_(tail_kind), c_(std::move(c)) {
    if (tail_kind_ == TailKind::Zero) c_ = Rational(0);
}

DualFunctional DualFunctional::from_finvec(const FinVec& coords) {
    std::vector<Rational> prefix(static_cast<std::size_t>(coords.max_index()));
    for (const auto& [i, v] : coords.entries()) prefix[static_cast<std::size_t>(i - 1)] = v;
    return DualFunctional(std::move(prefix), TailKind::Zero);
}

Rational DualFunctional::coord(Index i) const {
    if (i < 1) throw std::out_of_range("dual coordinates are indexed from 1");
    if (i <= static_cast<Index>(prefix_.size())) return prefix_[static_cast<std::size_t>(i - 1)];
    switch (tail_kind_) {
        case TailKind::Zero: return Rational(0);
        case TailKind::Const: return c_;
        case TailKind::Inverse: return c_ / Rational(i);
    }
    return Rational(0);
}

bool DualFunctional::is_zero() const {
    const DualFunctional n = normalized();
    return n.prefix_.empty() && n.tail_kind_ == TailKind::Zero;
}

DualFunctional DualFunctional::normalized() const {
    DualFunctional out = *this;
    if (out.c_.is_zero()) out.tail_kind_ = TailKind::Zero;
    while (!out.prefix_.empty()) {
        const Index i = static_cast<Index>(out.prefix_.size());
        Rational tail_value;
        switch (out.tail_kind_) {
            case TailKind::Zero: break;
            case TailKind::Const: tail_value = out.c_; break;
            case TailKind::Inverse: tail_value = out.c_ / Rational(i); break;
        }
        if (out.prefix_.back() != tail_value) break;
        out.prefix_.pop_back();
    }
    return out;
}

DualFunctional DualFunctional::primitive() const {
    DualFunctional out = normalized();
    if (out.is_zero()) return out;
    mpz_class lcm_den = 1;
    mpz_class gcd_num = 0;
    auto absorb = [&](const Rational& v) {
        if (v.is_zero()) return;
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.denominator().get_mpz_t());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), v.numerator().get_mpz_t());
    };
    for (const auto& v : out.prefix_) absorb(v);
    absorb(out.c_);
    Rational scale(mpq_class(lcm_den, gcd_num));
    // Sign convention: first non-zero parameter (prefix first, then c) is positive.
    const Rational* lead = nullptr;
    for (const auto& v : out.prefix_) {
        if (!v.is_zero()) {
            lead = &v;
            break;
        }
    }
    if (lead == nullptr) lead = &out.c_;
    if (lead->sign() < 0) scale = -scale;
    return scale * out;
}

DualFunctional DualFunctional::operator-() const { return Rational(-1) * *this; }

DualFunctional operator*(const Rational& k, const DualFunctional& phi) {
    DualFunctional out = phi;
    for (auto& v : out.prefix_) v *= k;
    out.c_ *= k;
    return out.normalized();
}

bool operator==(const DualFunctional& a, const DualFunctional& b) {
    const DualFunctional na = a.normalized();
    const DualFunctional nb = b.normalized();
    return na.prefix_ == nb.prefix_ && na.tail_kind_ == nb.tail_kind_ && na.c_ == nb.c_;
}

std::string_view to_string(DualFunctional::TailKind kind) {
    switch (kind) {
        case DualFunctional::TailKind::Zero: return "zero";
        case DualFunctional::TailKind::Const: return "const";
        case DualFunctional::TailKind::Inverse: return "inverse";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Norms and pairing

Rational norm(const FinVec& x, SpaceId space) {
    Rational out;
    for (const auto& e : x.entries()) {
        out = space == SpaceId::L1 ? out + e.second.abs() : max(out, e.second.abs());
    }
    return out;
}

Rational dual_norm(const FinVec& f, SpaceId space) {
    return norm(f, space == SpaceId::L1 ? SpaceId::C0 : SpaceId::L1);
}

std::optional<Rational> dual_norm(const DualFunctional& phi, SpaceId space) {
    const DualFunctional n = phi.normalized();
    Rational out;
    if (space == SpaceId::L1) {
        for (const auto& v : n.prefix()) out = max(out, v.abs());
        switch (n.tail_kind()) {
            case DualFunctional::TailKind::Zero: break;
            case DualFunctional::TailKind::Const: out = max(out, n.c().abs()); break;
            // |c|/i is decreasing, so the tail sup sits at its first coordinate.
            case DualFunctional::TailKind::Inverse: out = max(out, n.c().abs() / Rational(n.tail_start())); break;
        }
        return out;
    }
    if (n.tail_kind() != DualFunctional::TailKind::Zero) return std::nullopt;
    for (const auto& v : n.prefix()) out += v.abs();
    return out;
}

bool in_dual(const DualFunctional& phi, SpaceId space) { return dual_norm(phi, space).has_value(); }

Rational pair(const DualFunctional& phi, const FinVec& x) {
    Rational sum;
    for (const auto& [i, v] : x.entries()) sum += v * phi.coord(i);
    return sum;
}

}  // namespace framekit
