#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "farrell/verify.hpp"

using namespace farrell;

namespace {

const verify::Check* find_check(const verify::Report& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

} // namespace

TEST(VerifyRun, CleanBuildPasses) {
    const auto report = verify::run();
    EXPECT_TRUE(report.ok);
    EXPECT_EQ(verify::exit_code(report), 0);
    for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    EXPECT_EQ(report.flags_raised,
              (std::vector<std::string>{verify::kFlagLiteral45, verify::kFlagPublishedDivergence}));
    EXPECT_EQ(report.flags_raised, report.allowlist);
}

TEST(VerifyRun, DocumentedFlagsAttachToTheirChecks) {
    const auto report = verify::run();
    const auto* literal = find_check(report, "literal-45-diverges");
    ASSERT_NE(literal, nullptr);
    EXPECT_TRUE(literal->passed);
    EXPECT_EQ(literal->flag, verify::kFlagLiteral45);
    const auto* totals = find_check(report, "published-totals");
    ASSERT_NE(totals, nullptr);
    EXPECT_TRUE(totals->passed);
    EXPECT_EQ(totals->flag, verify::kFlagPublishedDivergence);
}

TEST(VerifyRun, MutationBreakingOrderIsDetected) {
    verify::Options o;
    o.mutations.push_back(verify::parse_mutation("k4-34:0:0:+1"));
    const auto report = verify::run(o);
    EXPECT_FALSE(report.ok);
    EXPECT_EQ(verify::exit_code(report), 3);
    const auto* tables = find_check(report, "tables-intact");
    ASSERT_NE(tables, nullptr);
    EXPECT_FALSE(tables->passed);
}

TEST(VerifyRun, MutationPreservingOrderIsStillDetected) {
    // [[-1,2],[0,1]] is again an involution, so only the golden vectors see it.
    verify::Options o;
    o.mutations.push_back(verify::parse_mutation("k4-34:0:1:+1"));
    const auto report = verify::run(o);
    EXPECT_FALSE(report.ok);
    const auto* tables = find_check(report, "tables-intact");
    ASSERT_NE(tables, nullptr);
    EXPECT_TRUE(tables->passed);
    const auto* golden = find_check(report, "linalg-golden");
    ASSERT_NE(golden, nullptr);
    EXPECT_FALSE(golden->passed);
}

TEST(VerifyRun, LiteralSwapFailsVerification) {
    verify::Options o;
    o.use_literal_45 = true;
    const auto report = verify::run(o);
    EXPECT_FALSE(report.ok);
    EXPECT_EQ(verify::exit_code(report), 3);
}

TEST(VerifyRun, DroppedTablesFailVerification) {
    verify::Options o;
    o.drop_tables = true;
    const auto report = verify::run(o);
    EXPECT_FALSE(report.ok);
    const auto* tables = find_check(report, "tables-intact");
    ASSERT_NE(tables, nullptr);
    EXPECT_FALSE(tables->passed);
}

TEST(ParseMutation, AcceptsSignedDeltas) {
    const auto m = verify::parse_mutation("k5-345:4:2:-1");
    EXPECT_EQ(m.table, "k5-345");
    EXPECT_EQ(m.row, 4u);
    EXPECT_EQ(m.col, 2u);
    EXPECT_EQ(m.delta, -1);
    EXPECT_THROW(verify::parse_mutation("k4-34:0:0"), std::invalid_argument);
    EXPECT_THROW(verify::parse_mutation("k4-34:a:0:+1"), std::invalid_argument);
    cohen::Tables tables;
    EXPECT_THROW(verify::apply_mutation(tables, {"k9-99", 0, 0, 1}), std::invalid_argument);
    EXPECT_THROW(verify::apply_mutation(tables, {"k4-34", 5, 0, 1}), std::invalid_argument);
}

TEST(Allowlist, StrictSetEqualityAgainstFile) {
    const std::string full = ::testing::TempDir() + "allow_full.json";
    {
        std::ofstream out(full);
        out << R"({"known_flags":[{"id":")" << verify::kFlagPublishedDivergence
            << R"(","reason":"r"},{"id":")" << verify::kFlagLiteral45 << R"(","reason":"r"}]})";
    }
    verify::Options with_file;
    with_file.allowlist_path = full;
    EXPECT_TRUE(verify::run(with_file).ok);

    const std::string partial = ::testing::TempDir() + "allow_partial.json";
    {
        std::ofstream out(partial);
        out << R"({"known_flags":[{"id":")" << verify::kFlagLiteral45 << R"(","reason":"r"}]})";
    }
    verify::Options missing_one;
    missing_one.allowlist_path = partial;
    const auto report = verify::run(missing_one);
    EXPECT_FALSE(report.ok); // a raised flag outside the allowlist fails the run
    for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << c.name;

    std::remove(full.c_str());
    std::remove(partial.c_str());
    EXPECT_THROW(verify::load_allowlist("/nonexistent/allowlist.json"), std::invalid_argument);
}

TEST(Allowlist, UnraisedAllowlistedFlagAlsoFails) {
    const std::string extra = ::testing::TempDir() + "allow_extra.json";
    {
        std::ofstream out(extra);
        out << R"({"known_flags":[{"id":")" << verify::kFlagPublishedDivergence
            << R"(","reason":"r"},{"id":")" << verify::kFlagLiteral45
            << R"(","reason":"r"},{"id":"ghost-flag","reason":"r"}]})";
    }
    verify::Options o;
    o.allowlist_path = extra;
    EXPECT_FALSE(verify::run(o).ok);
    std::remove(extra.c_str());
}

TEST(VerifyReport, JsonAndTextShapes) {
    const auto report = verify::run();
    const auto j = verify::report_to_json(report);
    EXPECT_TRUE(j.at("ok").get<bool>());
    EXPECT_EQ(j.at("checks").size(), report.checks.size());
    EXPECT_EQ(j.at("flags_raised").size(), 2u);
    const std::string text = verify::report_text(report);
    EXPECT_NE(text.find("result: OK"), std::string::npos);
    EXPECT_NE(text.find("[PASS] tables-intact"), std::string::npos);
}
