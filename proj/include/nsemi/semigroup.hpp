// Numerical semigroups H = <a_1, ..., a_l>: cofinite additive submonoids of
// the nonnegative integers. H stands for the one-dimensional local ring
// k[[t^a : a in H]]; every invariant below is computed exactly over the
// integers.
#ifndef NSEMI_SEMIGROUP_HPP
#define NSEMI_SEMIGROUP_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "nsemi/bitvec.hpp"
#include "nsemi/errors.hpp"

namespace nsemi {

using i64 = std::int64_t;

class NumericalSemigroup {
public:
    /// Builds H from any generating set of positive integers with gcd 1.
    /// The stored generator list is minimalized (no generator is a sum of
    /// two nonzero elements). Throws errc::empty_input, errc::gcd_not_one,
    /// errc::generator_too_large.
    static NumericalSemigroup from_generators(std::vector<i64> raw);

    /// Builds H from an explicit membership window: bit z of `members` says
    /// whether z is in H, every integer >= members.size() is a member.
    /// Validates 0 in H and closure under addition.
    static NumericalSemigroup from_members(const BitVec& members);

    bool contains(i64 z) const {
        if (z < 0) return false;
        if (z >= conductor_) return true;
        return window_.get(static_cast<std::size_t>(z));
    }

    const std::vector<i64>& generators() const { return generators_; }
    i64 multiplicity() const { return multiplicity_; }
    i64 frobenius() const { return frobenius_; }       // -1 when H is all of Z>=0
    i64 conductor() const { return conductor_; }       // frobenius + 1
    i64 genus() const { return genus_; }
    const std::vector<i64>& apery() const { return apery_; }  // indexed by residue mod multiplicity
    const std::vector<i64>& pseudo_frobenius() const { return pf_; }  // {-1} when trivial
    i64 type() const { return static_cast<i64>(pf_.size()); }
    bool is_symmetric() const { return symmetric_; }
    bool is_trivial() const { return multiplicity_ == 1; }

    /// Membership window over [0, conductor).
    const BitVec& membership() const { return window_; }

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.generators_ == b.generators_;
    }

private:
    NumericalSemigroup() = default;
    void derive_from_window();  // fills everything except generators_

    std::vector<i64> generators_;
    i64 multiplicity_ = 1;
    i64 frobenius_ = -1;
    i64 conductor_ = 0;
    i64 genus_ = 0;
    bool symmetric_ = true;
    BitVec window_;            // membership of [0, conductor)
    std::vector<i64> apery_;
    std::vector<i64> pf_;
};

using SgPtr = std::shared_ptr<const NumericalSemigroup>;

inline SgPtr make_semigroup(std::vector<i64> gens) {
    return std::make_shared<const NumericalSemigroup>(
        NumericalSemigroup::from_generators(std::move(gens)));
}

}  // namespace nsemi

#endif
