#include "nsemi/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace nsemi {

const char* errc_name(errc c) {
    switch (c) {
        case errc::empty_input: return "EmptyInput";
        case errc::generator_too_large: return "GeneratorTooLarge";
        case errc::gcd_not_one: return "GcdNotOne";
        case errc::bad_input: return "BadInput";
        case errc::parent_mismatch: return "ParentMismatch";
        case errc::empty_generators: return "EmptyGenerators";
        case errc::not_a_subset: return "NotASubset";
        case errc::bound_exceeded: return "BoundExceeded";
        case errc::not_integral: return "NotIntegral";
        case errc::n_max_too_small: return "NMaxTooSmall";
        case errc::zero_quotient: return "ZeroQuotient";
        case errc::not_symmetric: return "NotSymmetric";
        case errc::not_trace_iso: return "NotTraceIso";
        case errc::gorenstein_idealization: return "GorensteinIdealization";
        case errc::too_many_gaps: return "TooManyGaps";
        case errc::guard_exceeded: return "GuardExceeded";
        case errc::arithmetic_overflow: return "ArithmeticOverflow";
    }
    return "UnknownError";
}

namespace {

std::string join(const std::vector<i64>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

}  // namespace

violation_error::violation_error(std::string check, std::vector<i64> generators,
                                 std::string lhs, std::string rhs)
    : std::runtime_error("TheoremViolation[" + check + "] at <" + join(generators) +
                         ">: " + lhs + " vs " + rhs),
      check_(std::move(check)),
      generators_(std::move(generators)),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {}

i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) raise(errc::arithmetic_overflow, "add");
    return r;
}

i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) raise(errc::arithmetic_overflow, "mul");
    return r;
}

namespace {

constexpr i64 kGeneratorCap = i64{1} << 31;

// Apery set by round-robin shortest path over residues mod m: apery[r] is the
// least element of H congruent to r mod m. At most m relaxation sweeps.
std::vector<i64> compute_apery(const std::vector<i64>& gens, i64 m) {
    const i64 inf = std::numeric_limits<i64>::max();
    std::vector<i64> ap(static_cast<std::size_t>(m), inf);
    ap[0] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (i64 r = 0; r < m; ++r) {
            if (ap[static_cast<std::size_t>(r)] == inf) continue;
            for (i64 g : gens) {
                const i64 cand = checked_add(ap[static_cast<std::size_t>(r)], g);
                const i64 r2 = cand % m;
                if (cand < ap[static_cast<std::size_t>(r2)]) {
                    ap[static_cast<std::size_t>(r2)] = cand;
                    changed = true;
                }
            }
        }
    }
    return ap;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<i64> raw) {
    if (raw.empty()) raise(errc::empty_input, "need at least one generator");
    for (i64 g : raw) {
        if (g <= 0) raise(errc::empty_input, "generators must be positive, got " + std::to_string(g));
        if (g > kGeneratorCap) raise(errc::generator_too_large, std::to_string(g));
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    i64 g = 0;
    for (i64 v : raw) g = std::gcd(g, v);
    if (g != 1) raise(errc::gcd_not_one, "gcd of generators is " + std::to_string(g));

    NumericalSemigroup H;
    const i64 m = raw[0];
    if (m == 1) {
        H.generators_ = {1};
        H.multiplicity_ = 1;
        H.frobenius_ = -1;
        H.conductor_ = 0;
        H.window_ = BitVec(1);
        H.window_.set(0);
        H.genus_ = 0;
        H.symmetric_ = true;
        H.apery_ = {0};
        H.pf_ = {-1};
        return H;
    }

    H.apery_ = compute_apery(raw, m);
    H.multiplicity_ = m;
    H.frobenius_ = *std::max_element(H.apery_.begin(), H.apery_.end()) - m;
    H.conductor_ = H.frobenius_ + 1;
    H.window_ = BitVec(static_cast<std::size_t>(H.conductor_));
    for (i64 z = 0; z < H.conductor_; ++z)
        if (H.apery_[static_cast<std::size_t>(z % m)] <= z)
            H.window_.set(static_cast<std::size_t>(z));

    // Minimalize: a generator is redundant iff it is a sum of two nonzero
    // elements. Anything >= conductor + m is m plus a tail element.
    for (i64 v : raw) {
        bool redundant = v >= H.conductor_ + m;
        for (i64 h = m; !redundant && 2 * h <= v; ++h)
            if (H.contains(h) && H.contains(v - h)) redundant = true;
        if (!redundant) H.generators_.push_back(v);
    }

    H.derive_from_window();
    return H;
}

NumericalSemigroup NumericalSemigroup::from_members(const BitVec& members) {
    if (members.size() == 0 || !members.get(0))
        raise(errc::bad_input, "membership window must contain 0");

    NumericalSemigroup H;
    // Trim to the true conductor (one past the largest gap).
    i64 cond = 0;
    for (i64 z = static_cast<i64>(members.size()) - 1; z >= 0; --z)
        if (!members.get(static_cast<std::size_t>(z))) {
            cond = z + 1;
            break;
        }
    H.conductor_ = cond;
    H.frobenius_ = cond - 1;

    if (cond == 0) {
        H.generators_ = {1};
        H.multiplicity_ = 1;
        H.window_ = BitVec(1);
        H.window_.set(0);
        H.genus_ = 0;
        H.symmetric_ = true;
        H.apery_ = {0};
        H.pf_ = {-1};
        return H;
    }

    H.window_ = BitVec(static_cast<std::size_t>(cond));
    for (i64 z = 0; z < cond; ++z)
        H.window_.set(static_cast<std::size_t>(z), members.get(static_cast<std::size_t>(z)));

    // Closure: for window members z, h the sum must be a member (sums landing
    // at or beyond the conductor always are). This pairwise scan is complete
    // because any closure failure has both summands below the conductor.
    for (i64 z = 1; z < cond; ++z) {
        if (!H.contains(z)) continue;
        for (i64 h = z; h < cond; ++h)
            if (H.contains(h) && !H.contains(z + h))
                raise(errc::bad_input, "membership window not additively closed at " +
                                           std::to_string(z) + "+" + std::to_string(h));
    }

    i64 m = cond;  // first nonzero member, or the conductor if the window has none
    for (i64 z = 1; z < cond; ++z)
        if (H.contains(z)) {
            m = z;
            break;
        }
    H.multiplicity_ = m;

    for (i64 v = m; v < cond + m; ++v) {
        if (!H.contains(v)) continue;
        bool redundant = false;
        for (i64 h = m; !redundant && 2 * h <= v; ++h)
            if (H.contains(h) && H.contains(v - h)) redundant = true;
        if (!redundant) H.generators_.push_back(v);
    }

    H.apery_.assign(static_cast<std::size_t>(m), -1);
    i64 found = 0;
    for (i64 z = 0; found < m; ++z)
        if (H.contains(z) && H.apery_[static_cast<std::size_t>(z % m)] < 0) {
            H.apery_[static_cast<std::size_t>(z % m)] = z;
            ++found;
        }

    H.derive_from_window();
    return H;
}

void NumericalSemigroup::derive_from_window() {
    genus_ = 0;
    for (i64 z = 0; z < conductor_; ++z)
        if (!window_.get(static_cast<std::size_t>(z))) ++genus_;

    // Symmetry by the defining property: for 0 <= z <= f, exactly one of
    // z and f - z is a member.
    symmetric_ = true;
    for (i64 z = 0; z <= frobenius_; ++z)
        if (contains(z) == contains(frobenius_ - z)) {
            symmetric_ = false;
            break;
        }

    // PF two ways: direct scan of [-1, f] against the generators, and
    // maximal Apery elements. The two must agree.
    pf_.clear();
    for (i64 n = -1; n <= frobenius_; ++n) {
        if (contains(n)) continue;
        bool is_pf = true;
        for (i64 g : generators_)
            if (!contains(n + g)) {
                is_pf = false;
                break;
            }
        if (is_pf) pf_.push_back(n);
    }

    std::vector<i64> pf_apery;
    for (i64 w : apery_) {
        bool maximal = true;
        for (i64 w2 : apery_) {
            if (w2 == w) continue;
            if (contains(w2 - w)) {
                maximal = false;
                break;
            }
        }
        if (maximal) pf_apery.push_back(w - multiplicity_);
    }
    std::sort(pf_apery.begin(), pf_apery.end());
    if (pf_apery != pf_)
        throw violation_error("pseudo-frobenius-routes", generators_, join(pf_), join(pf_apery));
}

}  // namespace nsemi
