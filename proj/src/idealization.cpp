#include "nsemi/idealization.hpp"

#include <algorithm>

namespace nsemi {

bool is_trace_ideal(const SgPtr& H, const RelativeIdeal& E) {
    const RelativeIdeal one = RelativeIdeal::unit(H);
    if (!E.subset_of(one)) raise(errc::not_integral, "trace-ideal test needs an ideal inside H");
    return E.colon(E) == one.colon(E);
}

std::optional<RelativeIdeal> trace_iso_witness(const SgPtr& H, const RelativeIdeal& E) {
    if (!H->is_symmetric())
        raise(errc::not_symmetric, "idealization theory needs a symmetric semigroup");
    const RelativeIdeal one = RelativeIdeal::unit(H);
    const RelativeIdeal endo = E.colon(E);   // E - E
    const RelativeIdeal dual = one.colon(E); // H - E
    if (!dual.isomorphic_to(endo)) return std::nullopt;
    // I = s + E is a trace ideal iff H - I = E - E; the shift is forced by
    // aligning the minima. 0 lies in E - E, so I lands inside H.
    const i64 s = dual.min() - endo.min();
    return E.shift(s);
}

IdealizationReport idealization_type(const SgPtr& H, const RelativeIdeal& E) {
    auto witness = trace_iso_witness(H, E);
    if (!witness) raise(errc::not_trace_iso, "module is not isomorphic to a trace ideal");
    const RelativeIdeal one = RelativeIdeal::unit(H);
    if (*witness == one)
        raise(errc::gorenstein_idealization,
              "module is the canonical class; the idealization is Gorenstein of type 1");

    const i64 via_socle = type_of_quotient(H, *witness) + 2;
    const i64 via_mu = static_cast<i64>(one.colon(*witness).minimal_generators().size()) + 1;
    if (via_socle != via_mu)
        throw violation_error("idealization-type", H->generators(),
                              "type(R/I)+2=" + std::to_string(via_socle),
                              "mu(H-I)+1=" + std::to_string(via_mu));

    IdealizationReport r{H, E};
    r.trace_iso = true;
    r.canred_le2 = true;
    r.witness = std::move(*witness);
    r.type_via_socle = via_socle;
    r.type_via_mu = via_mu;
    return r;
}

IdealizationReport analyze_idealization(const SgPtr& H, const RelativeIdeal& E) {
    auto witness = trace_iso_witness(H, E);  // throws NotSymmetric
    IdealizationReport r{H, E};
    if (!witness) return r;
    if (*witness == RelativeIdeal::unit(H)) {
        r.trace_iso = true;
        r.canred_le2 = true;
        r.witness = std::move(*witness);
        r.gorenstein_idealization = true;
        return r;
    }
    return idealization_type(H, E);
}

std::vector<RelativeIdeal> over_semigroups(const SgPtr& H) {
    if (H->genus() > 24)
        raise(errc::too_many_gaps, "over-semigroup enumeration guarded at genus 24, got " +
                                       std::to_string(H->genus()));
    const i64 cond = H->conductor();
    std::vector<i64> gaps;
    for (i64 z = 1; z < cond; ++z)
        if (!H->contains(z)) gaps.push_back(z);

    const std::size_t g = gaps.size();
    std::vector<std::pair<std::vector<i64>, RelativeIdeal>> closed_sets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
        BitVec bits(static_cast<std::size_t>(std::max<i64>(cond, 1)));
        for (i64 z = 0; z < cond; ++z)
            bits.set(static_cast<std::size_t>(z), H->contains(z));
        if (cond == 0) bits.set(0);
        std::vector<i64> adjoined;
        for (std::size_t i = 0; i < g; ++i)
            if (mask >> i & 1) {
                bits.set(static_cast<std::size_t>(gaps[i]));
                adjoined.push_back(gaps[i]);
            }

        // Closed iff gap+gap and gap+generator sums stay inside; sums between
        // old members are already closed, and sums reaching the conductor are
        // always in.
        auto member = [&](i64 z) {
            return z >= cond || bits.get(static_cast<std::size_t>(z));
        };
        bool closed = true;
        for (std::size_t i = 0; i < adjoined.size() && closed; ++i) {
            for (std::size_t j = i; j < adjoined.size() && closed; ++j)
                if (!member(adjoined[i] + adjoined[j])) closed = false;
            for (i64 a : H->generators())
                if (!member(adjoined[i] + a)) {
                    closed = false;
                    break;
                }
        }
        if (closed) closed_sets.emplace_back(adjoined, RelativeIdeal::from_bits(H, 0, bits));
    }
    // Deterministic order: lexicographic in the adjoined gap subset.
    std::sort(closed_sets.begin(), closed_sets.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<RelativeIdeal> out;
    out.reserve(closed_sets.size());
    for (auto& [gaps_added, B] : closed_sets) out.push_back(std::move(B));
    return out;
}

bool verify_trace_extension_bijection(const SgPtr& H) {
    if (!H->is_symmetric())
        raise(errc::not_symmetric, "the correspondence needs a symmetric semigroup");
    const RelativeIdeal one = RelativeIdeal::unit(H);
    std::vector<std::string> images;
    for (const RelativeIdeal& B : over_semigroups(H)) {
        const RelativeIdeal I = one.colon(B);
        if (!is_trace_ideal(H, I)) return false;
        if (!(I.colon(I) == B)) return false;
        const std::string key = std::to_string(I.min()) + I.to_string();
        if (std::find(images.begin(), images.end(), key) != images.end()) return false;
        images.push_back(key);
    }
    return true;
}

}  // namespace nsemi
