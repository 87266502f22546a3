// The invariant pipeline of R = k[[H]]: canonical ideal, canonical reduction
// number, blow-up, Ratliff-Rush closure, Hilbert function of the canonical
// ideal, trace ideal, and the Gorenstein / almost Gorenstein / nearly
// Gorenstein classification with its cross-checks.
#ifndef NSEMI_INVARIANTS_HPP
#define NSEMI_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "nsemi/relideal.hpp"

namespace nsemi {

/// The fractional canonical ideal K = { f - c : c in PF(H) } + H. Computed a
/// second way (K = { z : f - z not in H }) and the two must agree; a mismatch
/// throws violation_error. Always H <= K <= Z>=0, with K = H iff H symmetric.
RelativeIdeal canonical_ideal(const SgPtr& H);

/// Least n >= 0 with K^n = K^(n+1) (K^0 = H). Zero iff H is symmetric, never
/// one, and at most multiplicity - 1; overrunning that bound throws
/// errc::bound_exceeded.
i64 can_red(const SgPtr& H);

/// Least n >= 0 with normalized E^n = normalized E^(n+1). From that index on,
/// E^(n+1) = min(E) + E^n: the monomial of degree min(E) is a reduction.
i64 reduction_number(const SgPtr& H, const RelativeIdeal& E);

/// Stable value of the normalized powers of E, an over-semigroup of H.
/// Also computed as E^n - E^n at the stable index; the two routes must agree.
RelativeIdeal blow_up(const SgPtr& H, const RelativeIdeal& E);

/// Ratliff-Rush closure of an integral ideal E <= H: the union over l of
/// (E^(l+1) - E^l) intersected with H. Satisfies E <= result <= H.
RelativeIdeal ratliff_rush(const SgPtr& H, const RelativeIdeal& E);

struct HilbertTable {
    i64 e0 = 0;                 // multiplicity of the embedded canonical ideal
    i64 e1 = 0;                 // |blow_up \ H|
    std::vector<i64> values;    // values[n] = |H \ omega^n|, n = 0..n_max
    i64 stabilization = 0;      // least m with values[n] = e0*n - e1 for n >= m
};

/// Hilbert function of omega = e + K where e is the smallest nonzero element
/// of H - K (so omega <= H). Requires n_max >= multiplicity, else
/// errc::n_max_too_small.
HilbertTable hilbert_table(const SgPtr& H, i64 n_max);

/// tr(omega) = K + (H - K), always an ideal inside H; equals H iff H is
/// symmetric.
RelativeIdeal trace_of_canonical(const SgPtr& H);

/// Socle dimension of the artinian quotient R/C for an integral ideal C < H:
/// |{ h in H \ C : h + g in C for every generator g }|. This is 1 exactly
/// when R/C is Gorenstein. Throws errc::zero_quotient when C = H,
/// errc::not_integral when C is not inside H.
i64 type_of_quotient(const SgPtr& H, const RelativeIdeal& C);

/// Everything classify() derives, with no cross-checking. The survey harness
/// uses this directly so each named check can be evaluated independently.
struct InvariantBundle {
    InvariantBundle(SgPtr H, RelativeIdeal K, RelativeIdeal tr, RelativeIdeal B,
                    RelativeIdeal d)
        : semigroup(std::move(H)), canonical(std::move(K)), trace(std::move(tr)),
          blowup(std::move(B)), dual(std::move(d)) {}

    SgPtr semigroup;
    RelativeIdeal canonical;      // K
    RelativeIdeal trace;          // tr(omega)
    RelativeIdeal blowup;         // B = stable normalized power of K
    RelativeIdeal dual;           // H - K  (the ideal-dual of omega)
    i64 can_red = 0;
    i64 e0 = 0;                   // reduction degree of the embedded omega
    i64 e1 = 0;                   // |B \ H|
    i64 cm_type = 1;              // |PF(H)|
    bool gorenstein = false;      // can_red == 0
    bool almost_gorenstein = false;        // e1 <= cm_type
    bool almost_gorenstein_mk = false;     // M + K inside H
    bool nearly_gorenstein = false;        // M inside trace
    bool canred_le2 = false;
    bool trace_iso_dual = false;  // trace isomorphic to H - K
    bool conductor_quotient_gorenstein = false;  // type of R/(H - B) is 1 (true when B = H)
    std::optional<HilbertTable> hilbert;
};

InvariantBundle compute_invariants(const SgPtr& H, bool with_hilbert);

struct Violation {
    std::string check;
    std::vector<i64> generators;
    std::string lhs, rhs;
};

/// Names of the identity checks run over every semigroup, in evaluation
/// order:
///   canred-gorenstein   can_red = 0 iff H symmetric iff trace = H; can_red != 1
///   canred-bound        can_red <= multiplicity - 1
///   ag-routes           (e1 <= type) iff (M + K inside H)
///   trace-dual          (can_red <= 2) iff trace isomorphic to H - K
///   ag-ng-bridge        AG iff (NG and can_red <= 2) iff (NG and Gorenstein
///                       conductor quotient)
///   hilbert-stabilization   Hilbert stabilization index = can_red
///   idealization-type   over symmetric H: trace-ideal/extension round trip
///                       and the two type formulas agree (see idealization.hpp)
const std::vector<std::string>& check_names();

/// Evaluates one named check on a computed bundle; empty result = pass.
/// "hilbert-stabilization" requires bundle.hilbert to be present.
std::vector<Violation> run_check(const std::string& name, const InvariantBundle& b);

struct ClassificationReport {
    ClassificationReport(SgPtr H, RelativeIdeal K, RelativeIdeal B, RelativeIdeal tr)
        : semigroup(std::move(H)), canonical(std::move(K)), blowup(std::move(B)),
          trace(std::move(tr)) {}

    SgPtr semigroup;
    RelativeIdeal canonical;
    RelativeIdeal blowup;
    RelativeIdeal trace;
    i64 can_red = 0;
    i64 e0 = 0;
    i64 e1 = 0;
    i64 cm_type = 1;
    bool gorenstein = false;
    bool almost_gorenstein = false;
    bool nearly_gorenstein = false;
    bool canred_le2 = false;
    HilbertTable hilbert;
    std::vector<std::string> checks_passed;
};

/// Full report with every cross-check evaluated; the first failed identity
/// throws violation_error carrying the counterexample.
ClassificationReport classify(const SgPtr& H);

}  // namespace nsemi

#endif
