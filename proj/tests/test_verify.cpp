#include <doctest.h>

#include "tk/catalog.hpp"
#include "tk/search.hpp"
#include "tk/verify.hpp"

using namespace tk;

namespace {

VerifyOptions opts(int max_order, int jobs) {
    VerifyOptions o;
    o.max_order = max_order;
    o.jobs = jobs;
    o.samples = 10;
    return o;
}

}  // namespace

TEST_CASE("report serialisation") {
    VerificationReport r;
    r.check = "x";
    r.violations = {{"t 3 101", "(2,1)", "b"}, {"t 3 101", "(2,1)", "a"}, {"t 3 101", "(2,1)", "a"}};
    r.found_not_listed = {"z", "y"};
    r.finalize();
    CHECK(r.violations.size() == 2);
    CHECK(r.violations[0].detail == "a");
    const auto j = r.to_json();
    CHECK(j["status"] == "fail");
    CHECK(j["version"] == kVersion);
    CHECK(j["diffs"]["found_not_listed"] == nlohmann::json::array({"y", "z"}));
    CHECK_FALSE(j.contains("wall_time_ms"));
    r.violations.clear();
    CHECK(r.pass());
    CHECK(r.to_json()["status"] == "pass");
    r.wall_time_ms = 3.5;
    CHECK(r.to_json().contains("wall_time_ms"));
}

TEST_CASE("reports do not depend on job count") {
    for (const std::string check : {"thm2.1", "reversal", "corollary", "building:2.10", "small-lemmas"}) {
        CAPTURE(check);
        const auto a = run_check(check, opts(6, 1)).dump();
        const auto b = run_check(check, opts(6, 3)).dump();
        CHECK(a == b);
    }
}

TEST_CASE("reversal passes") {
    const auto r = verify_reversal_counts(opts(6, 2));
    CHECK(r.pass());
    CHECK(r.instances > 0);
}

TEST_CASE("small corollary sweeps") {
    const auto r = verify_main_corollary(opts(5, 2));
    const auto& per = r.summary["failing_by_order"];
    CHECK(per["n=3,m=3"] == nlohmann::json::array({"A1"}));
    CHECK(per["n=5,m=5"] == nlohmann::json::array({"A2", "A9"}));
    CHECK(r.pass());
}

TEST_CASE("violations re-validate") {
    const auto r = verify_theorem_2_1(opts(6, 2));
    for (const auto& v : r.violations) {
        const Tournament t = parse_tournament(v.tournament);
        const PathType p = parse_path_type(v.pattern);
        CHECK_FALSE(match_exception(t, p));
        CHECK(popcount(t.vertices() & ~origins(t, p)) >= 2);
        CHECK(is_exception_pair(t, p));
    }
    const auto c = verify_main_corollary(opts(6, 2));
    for (const auto& v : c.violations) {
        const Tournament t = parse_tournament(v.tournament);
        CHECK_FALSE(find_cycle_embedding(t, parse_cycle_type(v.pattern)));
    }
}

TEST_CASE("unknown checks") {
    CHECK_THROWS_AS(run_check("nope", opts(5, 1)), std::invalid_argument);
    CHECK_THROWS_AS(run_check("building:2.99", opts(5, 1)), std::invalid_argument);
}

TEST_CASE("parallel_for covers every index once") {
    std::vector<int> hits(1000, 0);
    detail::parallel_for(hits.size(), 7, [&](std::size_t i) { ++hits[i]; });
    for (int h : hits) CHECK(h == 1);
}
