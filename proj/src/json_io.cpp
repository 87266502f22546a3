#include "nsemi/json_io.hpp"

namespace nsemi {

using nlohmann::json;

json to_json(const NumericalSemigroup& H) {
    return json{{"generators", H.generators()}, {"frobenius", H.frobenius()},
                {"genus", H.genus()},           {"multiplicity", H.multiplicity()},
                {"type", H.type()},             {"pf", H.pseudo_frobenius()}};
}

json to_json(const RelativeIdeal& E) {
    return json{{"offset", E.min()}, {"members", E.window_members()}};
}

json to_json(const HilbertTable& t) {
    return json{{"e0", t.e0},
                {"e1", t.e1},
                {"stabilization", t.stabilization},
                {"values", t.values}};
}

json to_json(const ClassificationReport& r) {
    return json{{"semigroup", to_json(*r.semigroup)},
                {"can_red", r.can_red},
                {"e0", r.e0},
                {"e1", r.e1},
                {"type", r.cm_type},
                {"genus", r.semigroup->genus()},
                {"gorenstein", r.gorenstein},
                {"almost_gorenstein", r.almost_gorenstein},
                {"nearly_gorenstein", r.nearly_gorenstein},
                {"trace", to_json(r.trace)},
                {"blow_up", to_json(r.blowup)},
                {"hilbert", to_json(r.hilbert)},
                {"checks_passed", r.checks_passed}};
}

json to_json(const IdealizationReport& r) {
    json j{{"semigroup", to_json(*r.semigroup)},
           {"module", to_json(r.module)},
           {"trace_iso", r.trace_iso},
           {"canred_le2", r.canred_le2},
           {"gorenstein_idealization", r.gorenstein_idealization}};
    j["witness_I"] = r.witness ? to_json(*r.witness) : json(nullptr);
    j["type_via_socle"] = r.type_via_socle ? json(*r.type_via_socle) : json(nullptr);
    j["type_via_mu"] = r.type_via_mu ? json(*r.type_via_mu) : json(nullptr);
    return j;
}

json to_json(const Violation& v) {
    return json{{"check", v.check}, {"generators", v.generators}, {"lhs", v.lhs}, {"rhs", v.rhs}};
}

json to_json(const SurveyReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"visited", c.visited}});
    json violations = json::array();
    for (const auto& v : r.violations) violations.push_back(to_json(v));
    json per_genus = json::object();
    for (const auto& [g, n] : r.per_genus) per_genus[std::to_string(g)] = n;
    json hist = json::object();
    for (const auto& [k, n] : r.can_red_histogram) hist[std::to_string(k)] = n;
    return json{{"genus_max", r.genus_max},
                {"total", r.total},
                {"per_genus", per_genus},
                {"counts",
                 {{"gorenstein", r.count_gorenstein},
                  {"almost_gorenstein_not_gorenstein", r.count_ag_not_gorenstein},
                  {"nearly_gorenstein_not_almost_gorenstein", r.count_ng_not_ag},
                  {"neither", r.count_neither}}},
                {"can_red_histogram", hist},
                {"checks", checks},
                {"violations", violations}};
}

SgPtr parse_semigroup(const json& j) {
    if (!j.contains("generators")) raise(errc::bad_input, "semigroup JSON needs generators");
    SgPtr H = make_semigroup(j.at("generators").get<std::vector<i64>>());
    auto expect = [&](const char* field, i64 have) {
        if (j.contains(field) && j.at(field).get<i64>() != have)
            raise(errc::bad_input, std::string("semigroup JSON field ") + field +
                                       " disagrees with the recomputed value");
    };
    expect("frobenius", H->frobenius());
    expect("genus", H->genus());
    expect("multiplicity", H->multiplicity());
    expect("type", H->type());
    if (j.contains("pf") && j.at("pf").get<std::vector<i64>>() != H->pseudo_frobenius())
        raise(errc::bad_input, "semigroup JSON field pf disagrees with the recomputed value");
    return H;
}

RelativeIdeal parse_relideal(const json& j, const SgPtr& parent) {
    const auto members = j.at("members").get<std::vector<i64>>();
    RelativeIdeal E = RelativeIdeal::from_elements(parent, members);
    if (j.contains("offset") && j.at("offset").get<i64>() != E.min())
        raise(errc::bad_input, "relative ideal JSON offset disagrees with min(members)");
    return E;
}

ClassificationReport parse_classification(const json& j) {
    SgPtr H = parse_semigroup(j.at("semigroup"));
    ClassificationReport r{H,
                           canonical_ideal(H),
                           parse_relideal(j.at("blow_up"), H),
                           parse_relideal(j.at("trace"), H)};
    r.can_red = j.at("can_red").get<i64>();
    r.e0 = j.at("e0").get<i64>();
    r.e1 = j.at("e1").get<i64>();
    r.cm_type = j.at("type").get<i64>();
    r.gorenstein = j.at("gorenstein").get<bool>();
    r.almost_gorenstein = j.at("almost_gorenstein").get<bool>();
    r.nearly_gorenstein = j.at("nearly_gorenstein").get<bool>();
    r.canred_le2 = r.can_red <= 2;
    const json& h = j.at("hilbert");
    r.hilbert.e0 = h.at("e0").get<i64>();
    r.hilbert.e1 = h.at("e1").get<i64>();
    r.hilbert.stabilization = h.at("stabilization").get<i64>();
    r.hilbert.values = h.at("values").get<std::vector<i64>>();
    if (j.contains("checks_passed"))
        r.checks_passed = j.at("checks_passed").get<std::vector<std::string>>();
    return r;
}

IdealizationReport parse_idealization(const json& j) {
    SgPtr H = parse_semigroup(j.at("semigroup"));
    IdealizationReport r{H, parse_relideal(j.at("module"), H)};
    r.trace_iso = j.at("trace_iso").get<bool>();
    r.canred_le2 = j.at("canred_le2").get<bool>();
    r.gorenstein_idealization = j.at("gorenstein_idealization").get<bool>();
    if (!j.at("witness_I").is_null()) r.witness = parse_relideal(j.at("witness_I"), H);
    if (!j.at("type_via_socle").is_null()) r.type_via_socle = j.at("type_via_socle").get<i64>();
    if (!j.at("type_via_mu").is_null()) r.type_via_mu = j.at("type_via_mu").get<i64>();
    return r;
}

SurveyReport parse_survey(const json& j) {
    SurveyReport r;
    r.genus_max = j.at("genus_max").get<int>();
    r.total = j.at("total").get<i64>();
    for (const auto& [k, v] : j.at("per_genus").items())
        r.per_genus[std::stoi(k)] = v.get<i64>();
    const json& c = j.at("counts");
    r.count_gorenstein = c.at("gorenstein").get<i64>();
    r.count_ag_not_gorenstein = c.at("almost_gorenstein_not_gorenstein").get<i64>();
    r.count_ng_not_ag = c.at("nearly_gorenstein_not_almost_gorenstein").get<i64>();
    r.count_neither = c.at("neither").get<i64>();
    for (const auto& [k, v] : j.at("can_red_histogram").items())
        r.can_red_histogram[std::stoll(k)] = v.get<i64>();
    for (const auto& e : j.at("checks"))
        r.checks.push_back({e.at("name").get<std::string>(), e.at("visited").get<i64>()});
    for (const auto& e : j.at("violations"))
        r.violations.push_back({e.at("check").get<std::string>(),
                                e.at("generators").get<std::vector<i64>>(),
                                e.at("lhs").get<std::string>(),
                                e.at("rhs").get<std::string>()});
    return r;
}

}  // namespace nsemi
