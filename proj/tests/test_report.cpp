#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qtrace/report.hpp>

#include <stdexcept>

using namespace qtrace;

TEST_CASE("run_check records success, failure, and thrown exceptions") {
    CheckRecord ok = run_check("t.pass", "always passes", false, [](CheckRecord& rec) {
        rec.passed = true;
        rec.witness = Json{{"cases", 3}};
    });
    CHECK(ok.passed);
    CHECK(ok.witness["cases"] == 3);
    CHECK(!ok.exploratory);

    CheckRecord fail = run_check("t.fail", "always fails", false,
                                 [](CheckRecord& rec) { rec.passed = false; });
    CHECK(!fail.passed);

    CheckRecord thrown = run_check("t.throw", "throws", false, [](CheckRecord&) {
        throw std::runtime_error("boom");
    });
    CHECK(!thrown.passed);
    CHECK(thrown.witness["error"] == "boom");
}

TEST_CASE("reports tally hard checks only") {
    Report rep("unit", 3, 42);
    rep.add(run_check("a.one", "s", false, [](CheckRecord& r) { r.passed = true; }));
    rep.add(run_check("a.two", "s", true, [](CheckRecord& r) { r.passed = false; }));
    CHECK(rep.hard_total() == 1);
    CHECK(rep.hard_failures() == 0);
    CHECK(rep.hard_pass());
    CHECK(rep.exit_code() == 0);

    rep.add(run_check("a.three", "s", false, [](CheckRecord& r) { r.passed = false; }));
    CHECK(rep.hard_total() == 2);
    CHECK(rep.hard_failures() == 1);
    CHECK(rep.exit_code() == 1);
}

TEST_CASE("duplicate check names are programming errors") {
    Report rep("unit", 3, 42);
    rep.add(run_check("dup", "s", false, [](CheckRecord& r) { r.passed = true; }));
    CHECK_THROWS_AS(rep.add(run_check("dup", "s", false, [](CheckRecord& r) { r.passed = true; })),
                    std::logic_error);
}

TEST_CASE("serialization is sorted by name and carries the summary") {
    Report rep("unit", 5, 7);
    rep.add(run_check("b.second", "claim b", false, [](CheckRecord& r) { r.passed = true; }));
    rep.add(run_check("a.first", "claim a", true, [](CheckRecord& r) { r.passed = true; }));
    Json j = rep.to_json(false);
    CHECK(j["suite"] == "unit");
    CHECK(j["n"] == 5);
    CHECK(j["seed"] == 7);
    CHECK(j["summary"]["hard_total"] == 1);
    CHECK(j["summary"]["hard_failed"] == 0);
    CHECK(j["summary"]["exploratory_total"] == 1);
    CHECK(j["summary"]["status"] == "pass");
    REQUIRE(j["checks"].size() == 2);
    CHECK(j["checks"][0]["name"] == "a.first");
    CHECK(j["checks"][0]["mode"] == "exploratory");
    CHECK(j["checks"][1]["name"] == "b.second");
    CHECK(j["checks"][1]["mode"] == "hard");
    CHECK(!j["checks"][0].contains("elapsed_ms"));
    CHECK(rep.to_json(true)["checks"][0].contains("elapsed_ms"));
}

TEST_CASE("reports without timing are reproducible") {
    auto build = [] {
        Report rep("unit", 3, 99);
        rep.add(run_check("z.last", "claim", false, [](CheckRecord& r) {
            r.passed = true;
            r.witness = Json{{"count", 12}};
        }));
        rep.add(run_check("m.middle", "claim", false, [](CheckRecord& r) { r.passed = true; }));
        return rep.to_string(false);
    };
    CHECK(build() == build());
}

TEST_CASE("exploratory failures do not fail the report") {
    Report rep("unit", 3, 1);
    rep.add(run_check("x.soft", "informational", true, [](CheckRecord& r) { r.passed = false; }));
    CHECK(rep.exit_code() == 0);
    CHECK(rep.to_json(false)["summary"]["status"] == "pass");
    CHECK(rep.to_json(false)["checks"][0]["status"] == "fail");
}
