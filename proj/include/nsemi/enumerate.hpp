// Exhaustive generation of numerical semigroups by genus and the survey
// harness that runs the identity checks over the whole population.
#ifndef NSEMI_ENUMERATE_HPP
#define NSEMI_ENUMERATE_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nsemi/invariants.hpp"

namespace nsemi {

constexpr int kGenusGuard = 30;

/// Depth-first walk of the semigroup tree rooted at Z>=0: the children of H
/// are H minus one minimal generator exceeding the Frobenius number, visited
/// in ascending order of the removed generator. Every semigroup of genus <=
/// genus_max is visited exactly once. Throws errc::guard_exceeded outside
/// [0, kGenusGuard].
void genus_tree(int genus_max, const std::function<void(const SgPtr&)>& visit);

/// Convenience: the full population, in tree order.
std::vector<SgPtr> all_semigroups(int genus_max);

struct SurveyOptions {
    int genus_max = 0;
    std::vector<std::string> checks;  // empty = all (see check_names())
    int jobs = 1;
    bool want_csv = false;
};

struct CheckStat {
    std::string name;
    i64 visited = 0;
};

struct SurveyReport {
    int genus_max = 0;
    i64 total = 0;
    std::map<int, i64> per_genus;
    i64 count_gorenstein = 0;
    i64 count_ag_not_gorenstein = 0;
    i64 count_ng_not_ag = 0;
    i64 count_neither = 0;
    std::map<i64, i64> can_red_histogram;
    std::vector<CheckStat> checks;
    std::vector<Violation> violations;   // expected empty
    std::string csv;                     // filled when want_csv
};

/// Runs the selected checks on every semigroup of genus <= genus_max.
/// Work is split by subtree across `jobs` workers; tallies are merged by
/// commutative reduction and rows/violations reassembled in tree order, so
/// the report is byte-identical for any worker count.
SurveyReport survey(const SurveyOptions& opt);

extern const char* const kCsvHeader;  // generators;genus;multiplicity;type;can_red;e0;e1;gor;ag;ng
std::string csv_row(const InvariantBundle& b);

}  // namespace nsemi

#endif
