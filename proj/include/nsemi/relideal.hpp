// Relative ideals of a numerical semigroup: subsets E of Z with E + H inside
// E and bounded below. These are the monomial fractional ideals of k[[H]].
//
// Representation: (offset, window) where offset = min(E) and window is a bit
// vector of length conductor(H) (clamped to 1) giving membership of
// [offset, offset + len). Every integer >= offset + len is implicitly a
// member. This is sound: offset is in E and E + H is inside E, so E contains
// offset + H, which contains everything >= offset + conductor. Two ideals
// over the same H are set-equal iff offset and window coincide.
#ifndef NSEMI_RELIDEAL_HPP
#define NSEMI_RELIDEAL_HPP

#include <cstdint>
#include <vector>

#include "nsemi/semigroup.hpp"

namespace nsemi {

class RelativeIdeal {
public:
    /// gens + H in canonical form. Throws errc::empty_generators.
    static RelativeIdeal from_elements(SgPtr parent, const std::vector<i64>& gens);

    /// H as an ideal over itself ({0} + H).
    static RelativeIdeal unit(SgPtr parent);

    /// The maximal ideal H \ {0} ( = generators + H; {1} + H when H = Z>=0).
    static RelativeIdeal maximal_ideal(SgPtr parent);

    /// Canonical form from explicit membership of [start, start + bits.size());
    /// everything >= start + bits.size() is treated as a member. The described
    /// set must be closed under adding H (all operations here preserve that).
    static RelativeIdeal from_bits(SgPtr parent, i64 start, const BitVec& bits);

    const SgPtr& parent() const { return parent_; }
    i64 min() const { return offset_; }
    std::size_t window_len() const { return window_.size(); }

    bool contains(i64 z) const {
        if (z < offset_) return false;
        const i64 i = z - offset_;
        if (i >= static_cast<i64>(window_.size())) return true;
        return window_.get(static_cast<std::size_t>(i));
    }

    /// Absolute values of the members inside the window (min first).
    std::vector<i64> window_members() const;

    // Minkowski sum E + F; this is the product of the monomial ideals.
    RelativeIdeal add(const RelativeIdeal& other) const;

    // Colon E - F = { z : z + F inside E }.
    RelativeIdeal colon(const RelativeIdeal& other) const;

    // n-fold sum; pow(0) = H.
    RelativeIdeal pow(i64 n) const;

    RelativeIdeal shift(i64 s) const;
    RelativeIdeal normalized() const { return shift(-offset_); }

    RelativeIdeal intersect(const RelativeIdeal& other) const;
    RelativeIdeal unite(const RelativeIdeal& other) const;

    bool subset_of(const RelativeIdeal& other) const;

    /// True iff other is a translate of this (same module up to isomorphism).
    bool isomorphic_to(const RelativeIdeal& other) const;

    /// E \ (E + M): a minimal generating system of E over H.
    std::vector<i64> minimal_generators() const;

    /// |this \ sub| for sub a subset of this. Throws errc::not_a_subset.
    i64 colength_in(const RelativeIdeal& sub) const;

    friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) {
        a.require_same_parent(b);
        return a.offset_ == b.offset_ && a.window_ == b.window_;
    }

    std::string to_string() const;

private:
    RelativeIdeal(SgPtr parent, i64 offset, BitVec window)
        : parent_(std::move(parent)), offset_(offset), window_(std::move(window)) {}

    void require_same_parent(const RelativeIdeal& other) const;
    std::size_t wlen() const { return window_.size(); }

    SgPtr parent_;
    i64 offset_ = 0;
    BitVec window_;
};

}  // namespace nsemi

#endif
