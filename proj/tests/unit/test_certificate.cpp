#include <doctest.h>

#include <json.hpp>
#include <limits>

#include "radwave/certificate.hpp"

using namespace radwave;

TEST_CASE("margins within tolerance certify") {
    Certificate c("demo", "here", 1e-10);
    c.record(0.5, "a");
    c.record(-1e-12, "a");
    CHECK(c.certified());
    CHECK(c.samples == 2);
    CHECK(c.worst_margin == -1e-12);
}

TEST_CASE("violations are recorded with lazily built coordinates") {
    Certificate c("demo", "here");
    int built = 0;
    auto at = [&built] {
        ++built;
        return Coords{{"r", 3.0}};
    };
    c.record(1.0, "a", at);
    CHECK(built == 0);
    c.record(-1.0, "a", at);
    CHECK(built == 1);
    CHECK_FALSE(c.certified());
    REQUIRE(c.violations.size() == 1);
    CHECK(c.violations[0].at[0].first == "r");
}

TEST_CASE("strict conditions fail at zero and NaN counts as a violation") {
    Certificate c;
    c.record_strict(0.0, "positive");
    CHECK(c.violation_count == 1);
    Certificate d;
    d.record(std::numeric_limits<double>::quiet_NaN(), "nan");
    CHECK_FALSE(d.certified());
}

TEST_CASE("stored violations are capped but all are counted") {
    Certificate c;
    for (int i = 0; i < 1000; ++i) c.record(-1.0, "x");
    CHECK(c.violation_count == 1000);
    CHECK(c.violations.size() == Certificate::kMaxStoredViolations);
}

TEST_CASE("merge takes the worst margin and sums counts") {
    Certificate a("x", "r"), b("x", "r");
    a.record(0.3, "c");
    b.record(-0.2, "c");
    b.record(0.1, "c");
    const Certificate m = merge_all({a, b});
    CHECK(m.samples == 3);
    CHECK(m.worst_margin == -0.2);
    CHECK(m.violation_count == 1);
}

TEST_CASE("serialization") {
    Certificate c("id", "region");
    c.constants["C"] = 1.5;
    c.record(-1.0, "chk", Coords{{"r", 2.0}, {"t", 1.0}});
    const auto j = nlohmann::json::parse(c.to_json());
    CHECK(j["inequality_id"] == "id");
    CHECK(j["status"] == "violated");
    const std::string csv = c.violations_csv();
    CHECK(csv.rfind("check,coordinates,margin\n", 0) == 0);
    CHECK(csv.find("chk,r=2;t=1,-1") != std::string::npos);
}
