// Naive reference implementations used as test oracles. Everything here
// works on explicit element sets (std::set) over finite windows and is kept
// independent of the packed-window representation in the library.
#ifndef NSEMI_TESTS_ORACLE_HPP
#define NSEMI_TESTS_ORACLE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

// Members of the monoid generated by gens within [0, limit): plain
// coin-problem reachability.
inline std::set<i64> monoid_members(const std::vector<i64>& gens, i64 limit) {
    std::vector<char> reach(static_cast<std::size_t>(limit), 0);
    if (limit > 0) reach[0] = 1;
    for (i64 z = 0; z < limit; ++z) {
        if (!reach[static_cast<std::size_t>(z)]) continue;
        for (i64 g : gens)
            if (z + g < limit) reach[static_cast<std::size_t>(z + g)] = 1;
    }
    std::set<i64> out;
    for (i64 z = 0; z < limit; ++z)
        if (reach[static_cast<std::size_t>(z)]) out.insert(z);
    return out;
}

// An ideal materialized on [lo, hi). full_from records the point from which
// the window was observed to be gapless; membership queries beyond hi are
// answered by that tail.
struct Ideal {
    std::set<i64> elems;
    i64 lo = 0, hi = 0;
    i64 full_from = 0;

    bool member(i64 z) const {
        if (z < lo) return false;
        if (z < hi) return elems.count(z) != 0;
        if (z < full_from) throw std::logic_error("oracle window too small");
        return true;
    }
};

inline void compute_full_from(Ideal& I) {
    I.full_from = I.hi;
    for (i64 z = I.hi - 1; z >= I.lo; --z) {
        if (!I.elems.count(z)) break;
        I.full_from = z;
    }
}

// gens + H on [min(gens), min(gens) + width).
inline Ideal ideal_from_gens(const std::vector<i64>& sg_gens, const std::vector<i64>& gens,
                             i64 width) {
    Ideal I;
    I.lo = *std::min_element(gens.begin(), gens.end());
    I.hi = I.lo + width;
    const std::set<i64> H = monoid_members(sg_gens, width + 1);
    for (i64 z = I.lo; z < I.hi; ++z)
        for (i64 g : gens)
            if (z - g >= 0 && z - g <= width && H.count(z - g)) {
                I.elems.insert(z);
                break;
            }
    compute_full_from(I);
    return I;
}

// Pairwise sums clipped to [E.lo + F.lo, E.lo + F.lo + width).
inline Ideal sum(const Ideal& E, const Ideal& F, i64 width) {
    Ideal S;
    S.lo = E.lo + F.lo;
    S.hi = S.lo + width;
    for (i64 e : E.elems)
        for (i64 f : F.elems)
            if (e + f < S.hi) S.elems.insert(e + f);
    compute_full_from(S);
    return S;
}

// { z : z + F in E } on [E.lo - F.lo - 1, E.lo - F.lo - 1 + width). The
// quantifier runs over the explicit part of F; larger members land in the
// observed full tail of E.
inline Ideal colon(const Ideal& E, const Ideal& F, i64 width) {
    Ideal C;
    C.lo = E.lo - F.lo - 1;
    C.hi = C.lo + width;
    for (i64 z = C.lo; z < C.hi; ++z) {
        bool ok = true;
        for (i64 f : F.elems)
            if (!E.member(z + f)) {
                ok = false;
                break;
            }
        if (ok) C.elems.insert(z);
    }
    // Trim the leading non-members so lo = min element (colon may be empty
    // below; keep window semantics by leaving lo as the scan start).
    compute_full_from(C);
    return C;
}

inline Ideal power(const Ideal& E, i64 n, i64 width) {
    Ideal P;  // the unit ideal is the parent monoid; callers pass it in via E^0 themselves
    P = E;
    for (i64 k = 1; k < n; ++k) P = sum(P, E, width);
    return P;
}

// Socle elements of R/C: members h of H, not in C, with h + g in C for all
// generators.
inline std::vector<i64> socle(const std::set<i64>& H, i64 h_limit,
                              const std::vector<i64>& sg_gens, const Ideal& C) {
    std::vector<i64> out;
    for (i64 h = 0; h < h_limit; ++h) {
        if (!H.count(h) || C.member(h)) continue;
        bool killed = true;
        for (i64 g : sg_gens)
            if (!C.member(h + g)) {
                killed = false;
                break;
            }
        if (killed) out.push_back(h);
    }
    return out;
}

// Gap-subset census: the number of numerical semigroups of each genus up to
// gmax, enumerated as complements of gap sets inside [1, 2*gmax - 1].
inline std::vector<i64> census_by_genus(int gmax) {
    std::vector<i64> counts(static_cast<std::size_t>(gmax) + 1, 0);
    counts[0] = 1;  // the full monoid
    if (gmax == 0) return counts;
    const int span = 2 * gmax - 1;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << span); ++mask) {
        const int genus = std::popcount(mask);
        if (genus > gmax) continue;
        auto member = [&](i64 z) {
            if (z <= 0) return z == 0;
            if (z > span) return true;
            return (mask >> (z - 1) & 1) == 0;
        };
        bool closed = true;
        for (i64 a = 1; a <= span && closed; ++a) {
            if (!member(a)) continue;
            for (i64 b = a; b <= span; ++b)
                if (member(b) && !member(a + b)) {
                    closed = false;
                    break;
                }
        }
        if (closed) counts[static_cast<std::size_t>(genus)] += 1;
    }
    return counts;
}

}  // namespace oracle

#endif
