#include <gtest/gtest.h>

#include "qrr/qrr.hpp"

using namespace qrr;

namespace {

std::vector<VerificationReport> andrews_grid()
{
    ParamGrid g{{{"n", 0, 2}}, 12};
    return verify_grid(find_identity("ANDREWS1"), g);
}

} // namespace

TEST(Report, RationalStrings)
{
    EXPECT_EQ(rat_string(make_rat(3, 1)), "3/1");
    EXPECT_EQ(rat_string(make_rat(-4, 6)), "-2/3");
    EXPECT_EQ(rat_string(BigRat(0)), "0/1");
}

TEST(Report, DocumentShape)
{
    const auto rs = andrews_grid();
    Json cfg;
    cfg["id"] = "ANDREWS1";
    cfg["trunc"] = 12;
    const Json doc = document_json("verify", cfg, rs, false);
    EXPECT_EQ(doc["artifact_version"], artifact_version);
    EXPECT_EQ(doc["command"], "verify");
    EXPECT_EQ(doc["config"]["id"], "ANDREWS1");
    ASSERT_EQ(doc["reports"].size(), 3u);
    const Json &r0 = doc["reports"][0];
    EXPECT_EQ(r0["id"], "ANDREWS1");
    EXPECT_EQ(r0["params"]["n"], 0);
    EXPECT_EQ(r0["trunc"], 12);
    EXPECT_EQ(r0["verdict"], "equal");
    EXPECT_FALSE(r0.contains("mismatch_index"));
    EXPECT_FALSE(r0.contains("error"));
    EXPECT_EQ(r0["millis"], 0.0);
    EXPECT_EQ(doc["summary"]["total"], 3);
    EXPECT_EQ(doc["summary"]["passed"], 3);
    EXPECT_EQ(doc["summary"]["failed"], 0);
}

TEST(Report, DeterministicWithoutTiming)
{
    const Json cfg = Json::object();
    EXPECT_EQ(document_json("verify", cfg, andrews_grid(), false).dump(),
              document_json("verify", cfg, andrews_grid(), false).dump());
}

TEST(Report, MismatchFields)
{
    RecordMutation m{Side::rhs, false, Mutation{0, 2}};
    const auto r = verify(find_identity("ANDREWS1"), {{"n", 2}}, 20, &m);
    ASSERT_FALSE(r.passed());
    const Json j = report_json(r, false);
    EXPECT_EQ(j["verdict"], "mismatch");
    EXPECT_EQ(j["mismatch_index"], *r.mismatch_index);
    EXPECT_EQ(j["lhs_window"].size(), r.lhs_window.size());
    EXPECT_EQ(j["window_start"], r.window_start);
    for (const auto &c : j["lhs_window"]) {
        EXPECT_NE(c.get<std::string>().find('/'), std::string::npos);
    }
    const std::string line = report_line(r, false);
    EXPECT_NE(line.find("mismatch at q^"), std::string::npos);
}

TEST(Report, ErrorField)
{
    const auto r = verify(find_identity("LMNRS3"), {{"l", 0}, {"m", 0}, {"n", 0}, {"u", 0}, {"v", 1}}, 10);
    const Json j = report_json(r, false);
    EXPECT_EQ(j["verdict"], "error");
    EXPECT_TRUE(j.contains("error"));
}

TEST(Report, TextLine)
{
    const auto rs = andrews_grid();
    EXPECT_EQ(report_line(rs[1], false), "ANDREWS1 n=1 T=12 equal");
}

TEST(Report, Adapters)
{
    const auto b = as_report(bino5_check(3));
    EXPECT_EQ(b.id, "bino5");
    EXPECT_TRUE(b.passed());
    const auto t = as_report(verify_telescoping({1, 1, 1, 1, 1}, 20));
    EXPECT_EQ(t.id, "TELESCOPE");
    EXPECT_TRUE(t.passed());
    const auto f = as_report(verify_telescoping({1, 1, 1, 1, 1}, 20, Transcription::as_printed));
    EXPECT_FALSE(f.passed());
    EXPECT_FALSE(f.error.empty());
}
