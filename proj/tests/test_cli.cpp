#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "nsemi/json_io.hpp"

using namespace nsemi;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("generator list parsing") {
    CHECK(cli::parse_generator_list("3,4,5") == std::vector<std::int64_t>{3, 4, 5});
    CHECK(cli::parse_generator_list("<3,4,5>") == std::vector<std::int64_t>{3, 4, 5});
    CHECK(cli::parse_generator_list("⟨3,4,5⟩") == std::vector<std::int64_t>{3, 4, 5});
    CHECK(cli::parse_generator_list(" 2, 3 ") == std::vector<std::int64_t>{2, 3});
    CHECK_THROWS_AS(cli::parse_generator_list("3,,5"), error);
    CHECK_THROWS_AS(cli::parse_generator_list("a,b"), error);
}

TEST_CASE("canred command") {
    auto r = run_cli({"canred", "3,4,5", "--format", "table"});
    CHECK(r.code == 0);
    CHECK(r.out.find("can_red = 2") != std::string::npos);

    auto r2 = run_cli({"canred", "4,5,11", "--format", "table"});
    CHECK(r2.out.find("can_red = 3") != std::string::npos);

    auto r3 = run_cli({"canred", "3,4,5", "--show-powers", "--format", "table"});
    CHECK(r3.out.find("K^0") != std::string::npos);
    CHECK(r3.out.find("K^3") != std::string::npos);
}

TEST_CASE("classify command and exit codes") {
    auto ok = run_cli({"classify", "2,3", "--format", "json"});
    CHECK(ok.code == 0);
    auto j = nlohmann::json::parse(ok.out);
    CHECK(j["gorenstein"] == true);
    CHECK(j["can_red"] == 0);

    auto bad = run_cli({"classify", "4,6", "--format", "json"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("GcdNotOne") != std::string::npos);

    auto usage = run_cli({"classify"});
    CHECK(usage.code == 1);

    auto help = run_cli({"--help"});
    CHECK(help.code == 0);
}

TEST_CASE("info json matches the library values") {
    auto r = run_cli({"info", "4,5,11", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["frobenius"] == 7);
    CHECK(j["genus"] == 5);
    CHECK(j["pf"] == nlohmann::json::array({6, 7}));
    auto H = parse_semigroup(j);
    CHECK(H->multiplicity() == 4);
}

TEST_CASE("hilbert command") {
    auto r = run_cli({"hilbert", "3,4,5", "--n", "6", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["hilbert"]["e0"] == 3);
    CHECK(j["hilbert"]["e1"] == 2);
    CHECK(j["hilbert"]["stabilization"] == 2);
    CHECK(j["hilbert"]["values"] == nlohmann::json::array({0, 2, 4, 7, 10, 13, 16}));

    CHECK(run_cli({"hilbert", "3,4,5", "--n", "1"}).code == 1);  // below multiplicity
}

TEST_CASE("idealize command") {
    auto r = run_cli({"idealize", "2,3", "--module", "2,3", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["trace_iso"] == true);
    CHECK(j["type_via_socle"] == 3);
    CHECK(j["type_via_mu"] == 3);

    auto gor = run_cli({"idealize", "2,3", "--module", "0", "--format", "json"});
    auto jg = nlohmann::json::parse(gor.out);
    CHECK(jg["gorenstein_idealization"] == true);

    CHECK(run_cli({"idealize", "3,4,5", "--module", "0,1"}).code == 1);  // not symmetric
}

TEST_CASE("overrings command") {
    auto r = run_cli({"overrings", "2,3", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["count"] == 2);
    CHECK(j["trace_bijection"] == true);

    auto r2 = run_cli({"overrings", "3,4,5", "--format", "json"});
    auto j2 = nlohmann::json::parse(r2.out);
    CHECK(j2["count"] == 3);
    CHECK(j2["trace_bijection"].is_null());
}

TEST_CASE("survey command") {
    auto r = run_cli({"survey", "--genus", "6", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["total"] == 50);  // 1+1+2+4+7+12+23
    CHECK(j["violations"].empty());
    CHECK(j["can_red_histogram"].contains("0"));
    CHECK_FALSE(j["can_red_histogram"].contains("1"));

    auto guard = run_cli({"survey", "--genus", "99"});
    CHECK(guard.code == 1);
}

TEST_CASE("classification json round-trips") {
    for (auto gens : {std::string("3,4,5"), std::string("2,3"), std::string("4,5,11"),
                      std::string("5,6,7,8,9")}) {
        auto r = run_cli({"classify", gens, "--format", "json"});
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        auto report = parse_classification(j);
        CHECK(to_json(report).dump() == j.dump());
    }
}

TEST_CASE("idealization and survey json round-trip") {
    for (auto mod : {std::string("2,3"), std::string("0"), std::string("0,4")}) {
        auto r = run_cli({"idealize", "3,5", "--module", mod, "--format", "json"});
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(to_json(parse_idealization(j)).dump() == j.dump());
    }
    auto s = run_cli({"survey", "--genus", "5", "--format", "json"});
    REQUIRE(s.code == 0);
    auto js = nlohmann::json::parse(s.out);
    CHECK(to_json(parse_survey(js)).dump() == js.dump());
}

TEST_CASE("csv format is limited to flat reports") {
    CHECK(run_cli({"info", "3,4,5", "--format", "csv"}).code == 0);
    CHECK(run_cli({"classify", "3,4,5", "--format", "csv"}).code == 0);
    CHECK(run_cli({"survey", "--genus", "3", "--format", "csv"}).code == 0);
    CHECK(run_cli({"canred", "3,4,5", "--format", "csv"}).code == 1);
    CHECK(run_cli({"hilbert", "3,4,5", "--n", "5", "--format", "csv"}).code == 1);
    CHECK(run_cli({"overrings", "2,3", "--format", "csv"}).code == 1);
}
