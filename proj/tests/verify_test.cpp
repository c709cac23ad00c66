#include <gtest/gtest.h>

#include <set>

#include "gcdpairs/serialize.hpp"
#include "gcdpairs/verify.hpp"

using namespace gcdpairs;
using verify::Status;

namespace {

// One shared run keeps the suite fast; every test reads from it.
const verify::Report& full_report() {
    static const verify::Report report = verify::run({});
    return report;
}

}  // namespace

TEST(Verify, IdsAreUniqueAndOrdered) {
    const auto ids = verify::claim_ids();
    EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), ids.size());
    const auto& report = full_report();
    ASSERT_EQ(report.entries.size(), ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) EXPECT_EQ(report.entries[i].id, ids[i]);
}

TEST(Verify, NoFailures) {
    for (const auto& e : full_report().entries)
        EXPECT_NE(e.status, Status::Fail) << e.id << ": " << e.details;
    EXPECT_FALSE(full_report().has_failures());
}

TEST(Verify, SemiprimeCliqueIsADiscrepancy) {
    const auto* e = full_report().find("clique.semiprime");
    ASSERT_NE(e, nullptr);
    EXPECT_EQ(e->status, Status::Discrepancy);
    ASSERT_TRUE(e->claimed && e->observed);
    EXPECT_NE(e->claimed->find("n=22: 12"), std::string::npos);
    EXPECT_NE(e->observed->find("n=22: omega 10"), std::string::npos);
}

TEST(Verify, ErrataAreNoted) {
    for (const char* id : {"erratum.units-z9", "erratum.zero-divisors-z8"}) {
        const auto* e = full_report().find(id);
        ASSERT_NE(e, nullptr) << id;
        EXPECT_EQ(e->status, Status::Noted);
        EXPECT_TRUE(e->claimed && e->observed);
    }
    EXPECT_EQ(full_report().find("erratum.zero-divisors-z8")->observed, "Z(Z_8) = {2,4,6}");
}

TEST(Verify, DiscrepanciesCarryBothValues) {
    for (const auto& e : full_report().entries)
        if (e.status == Status::Discrepancy) EXPECT_TRUE(e.claimed && e.observed) << e.id;
}

TEST(Verify, SerialAndParallelAgree) {
    verify::Options serial;
    serial.parallel = false;
    serial.max_n = 40;
    verify::Options parallel = serial;
    parallel.parallel = true;
    EXPECT_EQ(verify::run(serial), verify::run(parallel));
}

TEST(Verify, FilterAndRange) {
    verify::Options options;
    options.filter = "clique.k5";
    options.max_n = 20;
    auto report = verify::run(options);
    ASSERT_EQ(report.entries.size(), 1u);
    EXPECT_EQ(report.entries[0].range, "1 <= n <= 20");
    EXPECT_EQ(report.entries[0].status, Status::Pass);

    options.filter = "coloring.exact";
    options.max_n = 100;  // capped by the exhaustive oracle
    EXPECT_EQ(verify::run(options).entries.at(0).range, "1 <= n <= 12");

    options.filter = "no-such-claim";
    EXPECT_TRUE(verify::run(options).entries.empty());
}

TEST(Verify, StatusNames) {
    for (auto s : {Status::Pass, Status::Fail, Status::Discrepancy, Status::Noted})
        EXPECT_EQ(verify::parse_status(verify::to_string(s)), s);
    EXPECT_FALSE(verify::parse_status("pass"));
}

TEST(Verify, ReportRoundTrips) {
    const auto& report = full_report();
    auto doc = serialize::to_json(report);
    EXPECT_EQ(doc.at("schema_version"), serialize::kSchemaVersion);
    EXPECT_EQ(serialize::report_from_json(serialize::parse(serialize::print(doc))), report);
}
