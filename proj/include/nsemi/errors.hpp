// Error codes and exception types shared by the whole library.
#ifndef NSEMI_ERRORS_HPP
#define NSEMI_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsemi {

enum class errc {
    empty_input,              // no generators, or a non-positive generator
    generator_too_large,      // generator above the 2^31 input cap
    gcd_not_one,              // generators do not generate a cofinite monoid
    bad_input,                // malformed textual/JSON input
    parent_mismatch,          // ideal operation across different semigroups
    empty_generators,         // relative ideal needs at least one generator
    not_a_subset,             // colength of a non-contained ideal
    bound_exceeded,           // a stabilization loop overran its proven bound
    not_integral,             // operation requires an ideal inside H
    n_max_too_small,          // Hilbert table range cannot certify stabilization
    zero_quotient,            // quotient by the whole semigroup
    not_symmetric,            // operation requires a symmetric (Gorenstein) H
    not_trace_iso,            // module is not isomorphic to a trace ideal
    gorenstein_idealization,  // module is the canonical class; type formula n/a
    too_many_gaps,            // over-semigroup enumeration guard (2^genus)
    guard_exceeded,           // genus_max outside the supported range
    arithmetic_overflow,      // checked 64-bit arithmetic overflowed
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& msg) { throw error(code, msg); }

/// A mathematical identity the library cross-checks did not hold.
/// Carries the semigroup and both sides of the failed equality so the
/// counterexample can be re-verified by hand.
class violation_error : public std::runtime_error {
public:
    violation_error(std::string check, std::vector<std::int64_t> generators,
                    std::string lhs, std::string rhs);

    const std::string& check() const { return check_; }
    const std::vector<std::int64_t>& generators() const { return generators_; }
    const std::string& lhs() const { return lhs_; }
    const std::string& rhs() const { return rhs_; }

private:
    std::string check_;
    std::vector<std::int64_t> generators_;
    std::string lhs_, rhs_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace nsemi

#endif
