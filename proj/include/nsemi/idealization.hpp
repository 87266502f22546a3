// Idealizations A = R x M over a Gorenstein (symmetric) semigroup ring, with
// M a monomial rank-one maximal Cohen-Macaulay module given as a relative
// ideal E. A itself is never materialized; all conclusions are drawn from
// ideal arithmetic: A has small canonical reduction exactly when M is
// isomorphic to a trace ideal, and then r(A) = r(R/I) + 2 for the trace ideal
// I isomorphic to M.
#ifndef NSEMI_IDEALIZATION_HPP
#define NSEMI_IDEALIZATION_HPP

#include <optional>
#include <vector>

#include "nsemi/invariants.hpp"

namespace nsemi {

/// Trace-ideal test for an integral ideal E <= H: E - E = H - E.
bool is_trace_ideal(const SgPtr& H, const RelativeIdeal& E);

/// Is E isomorphic to a trace ideal of H? Requires H symmetric. Colons are
/// translation-covariant, so the only viable translate is the one aligning
/// the minima of H - E and E - E; a single equality decides. Returns the
/// witness trace ideal (automatically inside H) on success.
std::optional<RelativeIdeal> trace_iso_witness(const SgPtr& H, const RelativeIdeal& E);

struct IdealizationReport {
    IdealizationReport(SgPtr H, RelativeIdeal M)
        : semigroup(std::move(H)), module(std::move(M)) {}

    SgPtr semigroup;
    RelativeIdeal module;
    bool trace_iso = false;
    bool canred_le2 = false;                 // equals trace_iso
    std::optional<RelativeIdeal> witness;    // trace ideal isomorphic to module
    bool gorenstein_idealization = false;    // witness = H, i.e. M is the canonical class
    std::optional<i64> type_via_socle;       // type(R/I) + 2
    std::optional<i64> type_via_mu;          // mu(H - I) + 1
};

/// Type of A = R x M computed two independent ways, asserted equal.
/// Requires H symmetric and M isomorphic to a *proper* trace ideal; the
/// degenerate case M = canonical class throws errc::gorenstein_idealization
/// (A is then Gorenstein with type 1).
IdealizationReport idealization_type(const SgPtr& H, const RelativeIdeal& E);

/// All three cases in one call (not trace-iso / Gorenstein / proper);
/// only errc::not_symmetric escapes.
IdealizationReport analyze_idealization(const SgPtr& H, const RelativeIdeal& E);

/// Every numerical semigroup B with H <= B <= Z>=0, as relative ideals over
/// H. Enumerated by adjoined gap subset in ascending bitmask order (bit i =
/// i-th gap, gaps ascending), keeping the additively closed ones. Guarded:
/// genus > 24 throws errc::too_many_gaps.
std::vector<RelativeIdeal> over_semigroups(const SgPtr& H);

/// Checks that B -> H - B maps the over-semigroups of H injectively into
/// trace ideals and that I -> I - I maps them back: (H-B) - (H-B) = B for
/// every over-semigroup B. Requires H symmetric.
bool verify_trace_extension_bijection(const SgPtr& H);

}  // namespace nsemi

#endif
