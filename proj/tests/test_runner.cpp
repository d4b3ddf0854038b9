#include "fibcheb/runner.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace fibcheb;

namespace {

struct Output {
    int code;
    std::string out;
    std::string err;
};

Output run_config(const RunConfig& c) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(c, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Runner, TableCsv) {
    RunConfig c;
    c.subcommand = Subcommand::Table;
    c.direction = ConnectionDirection::FInU;
    c.jmax = 3;
    c.format = OutputFormat::Csv;
    const Output o = run_config(c);
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(o.out.rfind("j,m,target,coefficient\n", 0), 0U);
    EXPECT_NE(o.out.find("\n3,1,U_1,5/4\n"), std::string::npos);
    EXPECT_NE(o.out.find("\n2,0,U_2,1/4\n"), std::string::npos);
}

TEST(Runner, TableJsonKeepsRationalsAsStrings) {
    RunConfig c;
    c.subcommand = Subcommand::Table;
    c.direction = ConnectionDirection::TInF;
    c.jmax = 4;
    c.format = OutputFormat::Json;
    const Output o = run_config(c);
    ASSERT_EQ(o.code, 0);
    const Json j = Json::parse(o.out);
    EXPECT_EQ(j["direction"], "t-in-f");
    for (const auto& row : j["rows"]) EXPECT_TRUE(row["coefficient"].is_string());
    EXPECT_EQ(j["rows"][1]["target"], "F_3");
    EXPECT_EQ(j["rows"][1]["coefficient"], "2");
}

TEST(Runner, Eval) {
    RunConfig c;
    c.subcommand = Subcommand::Eval;
    c.eval_args = {"-1", "2", "3", "-4"};
    const Output o = run_config(c);
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(o.out, "11/3\n");

    c.eval_args = {"1/2", "2", "3", "-4"};
    EXPECT_EQ(run_config(c).code, 2);
    c.eval_args = {"-1", "2", "x", "-4"};
    EXPECT_EQ(run_config(c).code, 2);
}

TEST(Runner, ConfigErrorsExitTwo) {
    RunConfig c;
    c.jmax = 501;
    EXPECT_EQ(run_config(c).code, 2);
    c.jmax = -1;
    EXPECT_EQ(run_config(c).code, 2);
    c = RunConfig{};
    c.suites = {"bogus"};
    const Output o = run_config(c);
    EXPECT_EQ(o.code, 2);
    EXPECT_NE(o.err.find("bogus"), std::string::npos);
    c = RunConfig{};
    c.subcommand = Subcommand::Integrate;
    c.j = 1;
    c.k = 2;
    EXPECT_EQ(run_config(c).code, 2);
}

TEST(Runner, Integrate) {
    RunConfig c;
    c.subcommand = Subcommand::Integrate;
    c.integral_kind = "ft";
    c.j = 2;
    c.k = 0;
    Output o = run_config(c);
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("value: 3/2 * pi"), std::string::npos);
    EXPECT_NE(o.out.find("status: PaperErratum"), std::string::npos);

    c.integral_kind = "ff1";
    c.k = 2;
    o = run_config(c);
    EXPECT_NE(o.out.find("printed: unevaluable"), std::string::npos);
    c.dm = DmInterpretation::NormalizerK;
    o = run_config(c);
    EXPECT_NE(o.out.find("status: Pass"), std::string::npos);
}

TEST(Runner, VerifyJmax20ListsExpectedErrata) {
    RunConfig c;
    c.format = OutputFormat::Json;
    c.jmax = 20;
    c.workers = 4;
    const Output o = run_config(c);
    ASSERT_EQ(o.code, 0) << o.out.substr(0, 2000);
    const Json j = Json::parse(o.out);
    EXPECT_EQ(j["summary"]["Fail"], 0);
    EXPECT_GT(j["identities"]["sum-T"]["PaperErratum"].get<int>(), 0);
    bool ft_k0 = false;
    for (const auto& r : j["records"]) {
        if (r["id"] == "int-FT" && r["params"]["k"] == "0" && r["status"] == "PaperErratum") ft_k0 = true;
        EXPECT_NE(r["status"], "Fail");
    }
    EXPECT_TRUE(ft_k0);
}

TEST(Runner, DeterministicAcrossWorkerCounts) {
    RunConfig c;
    c.format = OutputFormat::Json;
    c.jmax = 12;
    c.qmax = 3;
    c.workers = 1;
    const Output a = run_config(c);
    c.workers = 7;
    const Output b = run_config(c);
    const Output again = run_config(c);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(b.out, again.out);
}

TEST(Runner, EscapingExceptionBecomesFail) {
    std::vector<WorkItem> items{[] { return std::vector<IdentityReport>{make_report("ok", {}, Rational(1), Rational(1))}; },
                                []() -> std::vector<IdentityReport> { throw ZeroDenominator("boom"); }};
    const auto reports = run_work(items, 2);
    ASSERT_EQ(reports.size(), 2U);
    EXPECT_EQ(reports[0].id, "error");
    EXPECT_EQ(reports[0].status, Status::Fail);
    EXPECT_EQ(reports[0].note, "boom");

    RunConfig c;
    std::ostringstream out;
    EXPECT_EQ(detail::emit_verification(c, reports, out), 1);
}

TEST(Runner, SuiteFilter) {
    RunConfig c;
    c.suites = {"chain"};
    c.jmax = 5;
    c.workers = 2;
    const auto reports = run_verification(c);
    ASSERT_EQ(reports.size(), 6U * 4U);
    for (const auto& r : reports) EXPECT_EQ(r.id.rfind("chain-", 0), 0U);
}
