#include "nsemi/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace nsemi {

namespace {

SgPtr remove_generator(const NumericalSemigroup& H, i64 g) {
    // H minus one minimal generator beyond the Frobenius number; the removed
    // element becomes the new Frobenius number.
    BitVec members(static_cast<std::size_t>(g + 1));
    for (i64 z = 0; z <= g; ++z)
        members.set(static_cast<std::size_t>(z), H.contains(z) && z != g);
    return std::make_shared<const NumericalSemigroup>(NumericalSemigroup::from_members(members));
}

void walk(const SgPtr& H, int genus_max, const std::function<void(const SgPtr&)>& visit) {
    visit(H);
    if (H->genus() >= genus_max) return;
    for (i64 g : H->generators())
        if (g > H->frobenius()) walk(remove_generator(*H, g), genus_max, visit);
}

}  // namespace

void genus_tree(int genus_max, const std::function<void(const SgPtr&)>& visit) {
    if (genus_max < 0 || genus_max > kGenusGuard)
        raise(errc::guard_exceeded,
              "genus_max must lie in [0, " + std::to_string(kGenusGuard) + "]");
    walk(make_semigroup({1}), genus_max, visit);
}

std::vector<SgPtr> all_semigroups(int genus_max) {
    std::vector<SgPtr> out;
    genus_tree(genus_max, [&](const SgPtr& H) { out.push_back(H); });
    return out;
}

const char* const kCsvHeader = "generators;genus;multiplicity;type;can_red;e0;e1;gor;ag;ng";

std::string csv_row(const InvariantBundle& b) {
    const NumericalSemigroup& H = *b.semigroup;
    std::ostringstream os;
    for (std::size_t i = 0; i < H.generators().size(); ++i) {
        if (i) os << ',';
        os << H.generators()[i];
    }
    os << ';' << H.genus() << ';' << H.multiplicity() << ';' << H.type() << ';' << b.can_red
       << ';' << b.e0 << ';' << b.e1 << ';' << (b.gorenstein ? 1 : 0) << ';'
       << (b.almost_gorenstein ? 1 : 0) << ';' << (b.nearly_gorenstein ? 1 : 0);
    return os.str();
}

namespace {

struct Partial {
    i64 total = 0;
    std::map<int, i64> per_genus;
    i64 gor = 0, ag_not_g = 0, ng_not_ag = 0, neither = 0;
    std::map<i64, i64> hist;
    std::map<std::string, i64> visited;
    std::vector<Violation> violations;
    std::string csv;
};

void process_one(const SgPtr& H, const std::vector<std::string>& checks, bool with_hilbert,
                 bool want_csv, Partial& p) {
    p.total += 1;
    p.per_genus[static_cast<int>(H->genus())] += 1;
    try {
        const InvariantBundle b = compute_invariants(H, with_hilbert);
        p.hist[b.can_red] += 1;
        if (b.gorenstein)
            p.gor += 1;
        else if (b.almost_gorenstein)
            p.ag_not_g += 1;
        else if (b.nearly_gorenstein)
            p.ng_not_ag += 1;
        else
            p.neither += 1;
        if (want_csv) {
            p.csv += csv_row(b);
            p.csv += '\n';
        }
        for (const std::string& name : checks) {
            p.visited[name] += 1;
            auto v = run_check(name, b);
            p.violations.insert(p.violations.end(), v.begin(), v.end());
        }
    } catch (const violation_error& e) {
        // The pipeline itself found an identity failure; record it with full
        // witnesses and keep surveying.
        p.violations.push_back({e.check(), e.generators(), e.lhs(), e.rhs()});
        for (const std::string& name : checks) p.visited[name] += 1;
    }
}

void merge(Partial& into, Partial&& from) {
    into.total += from.total;
    for (auto& [g, n] : from.per_genus) into.per_genus[g] += n;
    into.gor += from.gor;
    into.ag_not_g += from.ag_not_g;
    into.ng_not_ag += from.ng_not_ag;
    into.neither += from.neither;
    for (auto& [k, n] : from.hist) into.hist[k] += n;
    for (auto& [k, n] : from.visited) into.visited[k] += n;
    into.violations.insert(into.violations.end(), from.violations.begin(), from.violations.end());
    into.csv += from.csv;
}

}  // namespace

SurveyReport survey(const SurveyOptions& opt) {
    std::vector<std::string> checks = opt.checks.empty() ? check_names() : opt.checks;
    for (const std::string& c : checks)
        if (std::find(check_names().begin(), check_names().end(), c) == check_names().end())
            raise(errc::bad_input, "unknown check name: " + c);
    const bool with_hilbert =
        std::find(checks.begin(), checks.end(), "hilbert-stabilization") != checks.end();

    // Subtrees are independent units of work. Nodes above the split depth
    // form task 0; every node at the split depth roots one task. Tasks are
    // listed in tree order, so stitching results by task index reproduces the
    // single-threaded output exactly.
    const int split = std::min(opt.genus_max, 5);
    std::vector<SgPtr> roots;
    std::vector<SgPtr> prefix;
    genus_tree(split, [&](const SgPtr& H) {
        if (static_cast<int>(H->genus()) == split)
            roots.push_back(H);
        else
            prefix.push_back(H);
    });

    const bool want_csv = opt.want_csv;
    std::vector<Partial> results(roots.size() + 1);
    {
        Partial& p = results[0];
        for (const SgPtr& H : prefix) process_one(H, checks, with_hilbert, want_csv, p);
    }

    const int jobs = std::max(1, opt.jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= roots.size()) return;
            Partial& p = results[k + 1];
            // Walk the k-th subtree down to genus_max.
            std::function<void(const SgPtr&)> rec = [&](const SgPtr& H) {
                process_one(H, checks, with_hilbert, want_csv, p);
                if (static_cast<int>(H->genus()) >= opt.genus_max) return;
                for (i64 g : H->generators())
                    if (g > H->frobenius()) rec(remove_generator(*H, g));
            };
            rec(roots[k]);
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    Partial all;
    for (auto& p : results) merge(all, std::move(p));

    SurveyReport r;
    r.genus_max = opt.genus_max;
    r.total = all.total;
    r.per_genus = std::move(all.per_genus);
    r.count_gorenstein = all.gor;
    r.count_ag_not_gorenstein = all.ag_not_g;
    r.count_ng_not_ag = all.ng_not_ag;
    r.count_neither = all.neither;
    r.can_red_histogram = std::move(all.hist);
    for (const std::string& name : check_names())
        if (std::find(checks.begin(), checks.end(), name) != checks.end())
            r.checks.push_back({name, all.visited[name]});
    r.violations = std::move(all.violations);
    if (want_csv) r.csv = std::string(kCsvHeader) + "\n" + all.csv;
    return r;
}

}  // namespace nsemi
