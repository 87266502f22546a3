#include "nsemi/relideal.hpp"

#include <algorithm>
#include <sstream>

namespace nsemi {

namespace {

std::size_t ideal_window_len(const NumericalSemigroup& H) {
    return static_cast<std::size_t>(std::max<i64>(H.conductor(), 1));
}

}  // namespace

void RelativeIdeal::require_same_parent(const RelativeIdeal& other) const {
    if (parent_ == other.parent_) return;
    if (parent_ && other.parent_ && *parent_ == *other.parent_) return;
    raise(errc::parent_mismatch, "ideals live over different semigroups");
}

RelativeIdeal RelativeIdeal::from_bits(SgPtr parent, i64 start, const BitVec& bits) {
    const std::size_t len = ideal_window_len(*parent);
    const std::size_t first = bits.first_set();
    const i64 offset = start + static_cast<i64>(first);  // start+bits.size() if none set
    BitVec w(len);
    for (std::size_t i = 0; i < len; ++i) {
        const std::size_t j = first + i;
        w.set(i, j >= bits.size() ? true : bits.get(j));
    }
    return RelativeIdeal(std::move(parent), offset, std::move(w));
}

RelativeIdeal RelativeIdeal::from_elements(SgPtr parent, const std::vector<i64>& gens) {
    if (gens.empty()) raise(errc::empty_generators, "relative ideal needs a generator");
    const NumericalSemigroup& H = *parent;
    const i64 lo = *std::min_element(gens.begin(), gens.end());
    const std::size_t len = ideal_window_len(H);
    BitVec w(len);
    for (std::size_t i = 0; i < len; ++i) {
        const i64 z = lo + static_cast<i64>(i);
        for (i64 g : gens)
            if (H.contains(z - g)) {
                w.set(i);
                break;
            }
    }
    return RelativeIdeal(std::move(parent), lo, std::move(w));
}

RelativeIdeal RelativeIdeal::unit(SgPtr parent) {
    const NumericalSemigroup& H = *parent;
    const std::size_t len = ideal_window_len(H);
    BitVec w(len);
    for (std::size_t i = 0; i < len; ++i) w.set(i, H.contains(static_cast<i64>(i)));
    return RelativeIdeal(std::move(parent), 0, std::move(w));
}

RelativeIdeal RelativeIdeal::maximal_ideal(SgPtr parent) {
    if (parent->is_trivial()) return from_elements(std::move(parent), {1});
    auto gens = parent->generators();
    return from_elements(std::move(parent), gens);
}

std::vector<i64> RelativeIdeal::window_members() const {
    std::vector<i64> out;
    window_.for_each_set([&](std::size_t i) { out.push_back(offset_ + static_cast<i64>(i)); });
    return out;
}

RelativeIdeal RelativeIdeal::add(const RelativeIdeal& other) const {
    require_same_parent(other);
    BitVec w(wlen());
    // Only window x window sums can land inside the result window: a sum
    // with one term in a tail is already past offset+conductor.
    window_.for_each_set([&](std::size_t i) {
        if (i < w.size()) w.or_shifted(other.window_, i);
    });
    return RelativeIdeal(parent_, checked_add(offset_, other.offset_), std::move(w));
}

RelativeIdeal RelativeIdeal::colon(const RelativeIdeal& other) const {
    require_same_parent(other);
    const std::size_t len = wlen();
    // Candidates z = offset - other.offset + t for t in [0, len); everything
    // above that range takes other entirely into this ideal's tail. Bit t
    // survives iff this ideal contains z + f for every window member f of
    // other (tail members land in this ideal's tail automatically).
    BitVec bits(len);
    bits.fill(true);
    other.window_.for_each_set([&](std::size_t j) { bits.and_shifted_down(window_, j); });
    return from_bits(parent_, offset_ - other.offset_, bits);
}

RelativeIdeal RelativeIdeal::pow(i64 n) const {
    RelativeIdeal r = unit(parent_);
    for (i64 k = 0; k < n; ++k) r = r.add(*this);
    return r;
}

RelativeIdeal RelativeIdeal::shift(i64 s) const {
    return RelativeIdeal(parent_, checked_add(offset_, s), window_);
}

RelativeIdeal RelativeIdeal::intersect(const RelativeIdeal& other) const {
    require_same_parent(other);
    const i64 lo = std::max(offset_, other.offset_);
    const i64 hi = std::max(offset_ + static_cast<i64>(wlen()),
                            other.offset_ + static_cast<i64>(other.wlen()));
    BitVec bits(static_cast<std::size_t>(hi - lo));
    for (i64 z = lo; z < hi; ++z)
        bits.set(static_cast<std::size_t>(z - lo), contains(z) && other.contains(z));
    return from_bits(parent_, lo, bits);
}

RelativeIdeal RelativeIdeal::unite(const RelativeIdeal& other) const {
    require_same_parent(other);
    const i64 lo = std::min(offset_, other.offset_);
    const i64 hi = std::max(offset_ + static_cast<i64>(wlen()),
                            other.offset_ + static_cast<i64>(other.wlen()));
    BitVec bits(static_cast<std::size_t>(hi - lo));
    for (i64 z = lo; z < hi; ++z)
        bits.set(static_cast<std::size_t>(z - lo), contains(z) || other.contains(z));
    return from_bits(parent_, lo, bits);
}

bool RelativeIdeal::subset_of(const RelativeIdeal& other) const {
    require_same_parent(other);
    if (offset_ < other.offset_) return false;
    const i64 hi = std::max(offset_ + static_cast<i64>(wlen()),
                            other.offset_ + static_cast<i64>(other.wlen()));
    for (i64 z = offset_; z < hi; ++z)
        if (contains(z) && !other.contains(z)) return false;
    return true;
}

bool RelativeIdeal::isomorphic_to(const RelativeIdeal& other) const {
    require_same_parent(other);
    return shift(other.offset_ - offset_) == other;
}

std::vector<i64> RelativeIdeal::minimal_generators() const {
    const RelativeIdeal em = add(maximal_ideal(parent_));
    std::vector<i64> out;
    const i64 hi = em.offset_ + static_cast<i64>(em.wlen());
    for (i64 z = offset_; z < hi; ++z)
        if (contains(z) && !em.contains(z)) out.push_back(z);
    return out;
}

i64 RelativeIdeal::colength_in(const RelativeIdeal& sub) const {
    require_same_parent(sub);
    if (!sub.subset_of(*this)) raise(errc::not_a_subset, "colength of a non-contained ideal");
    i64 count = 0;
    const i64 hi = sub.offset_ + static_cast<i64>(sub.wlen());
    for (i64 z = offset_; z < hi; ++z)
        if (contains(z) && !sub.contains(z)) ++count;
    return count;
}

std::string RelativeIdeal::to_string() const {
    // Sporadic members, then the point from which every integer is a member.
    std::size_t tail = window_.size();
    while (tail > 0 && window_.get(tail - 1)) --tail;
    std::ostringstream os;
    os << '{';
    bool first = true;
    window_.for_each_set([&](std::size_t i) {
        if (i >= tail) return;
        if (!first) os << ',';
        os << offset_ + static_cast<i64>(i);
        first = false;
    });
    if (!first) os << ',';
    os << ">=" << offset_ + static_cast<i64>(tail) << '}';
    return os.str();
}

}  // namespace nsemi
