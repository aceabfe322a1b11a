#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "compoq_cli.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = compoq::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, SeriesRrMatchesPrintedDenominator)
{
    const auto r = run({"series", "rr", "--order", "30"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    const std::vector<std::string> printed{"1",  "-1", "0",  "0", "-1", "1",  "-1", "1", "0", "-1", "2",
                                           "-2", "1",  "1",  "-2", "3", "-3", "2",  "0", "-3", "5", "-5",
                                           "3",  "1",  "-5", "7",  "-7", "4", "1",  "-7", "11"};
    EXPECT_EQ(j["denominator"].get<std::vector<std::string>>(), printed);
    EXPECT_EQ(j["coefficients"][4], "2");
}

TEST(Cli, OrderFromEnvironment)
{
    ::setenv("COMPOQ_ORDER", "12", 1);
    const auto r = run({"series", "partition"});
    ::unsetenv("COMPOQ_ORDER");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["coefficients"].size(), 13u);
    EXPECT_EQ(json::parse(run({"series", "partition"}).out)["coefficients"].size(), 201u);
}

TEST(Cli, VerifyEvenKPasses)
{
    const auto r = run({"verify", "even-k", "--k", "6", "--max-n", "40"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_EQ(j["reports"][0]["cells"].size(), 41u);
}

TEST(Cli, VerifyFailureExitsOne)
{
    const auto r = run({"verify", "general-ab", "--alpha", "2", "--beta", "4", "--max-n", "10"});
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(json::parse(r.out)["passed"].get<bool>());
}

TEST(Cli, MuColumnAllOk)
{
    const auto r = run({"mu", "--max-n", "100"});
    ASSERT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "n,mu_compositions,mu_factorization,agree");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        EXPECT_EQ(line.substr(line.rfind(',') + 1), "ok") << line;
    }
    EXPECT_EQ(rows, 100);
}

TEST(Cli, TableAndCompositions)
{
    const auto t = run({"table", "pod", "--max-n", "5"});
    ASSERT_EQ(t.code, 0);
    EXPECT_EQ(t.out, "n,value\n0,1\n1,1\n2,1\n3,2\n4,3\n5,4\n");
    const auto c = run({"compositions", "--set", "polygonal", "--k", "3", "--n", "4"});
    ASSERT_EQ(c.code, 0);
    EXPECT_EQ(json::parse(c.out)["compositions"], json::parse("[[1,1,1,1],[1,3],[3,1]]"));
    const auto w = run({"compositions", "--set", "polygonal", "--k", "3", "--n", "5", "--weight", "p3"});
    EXPECT_EQ(json::parse(w.out)["value"], "108");
}

TEST(Cli, ZetaAndAsymptotic)
{
    const auto z = run({"zeta", "--set", "naturals-from-two", "--z", "1", "--s", "3", "--bound", "10000"});
    ASSERT_EQ(z.code, 0) << z.err;
    EXPECT_TRUE(json::parse(z.out)["within_bound"].get<bool>());
    const auto a = run({"asymptotic", "p3", "--n", "500,1000"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "n,exact,asymptotic,ratio");
}

TEST(Cli, ErrorsAreJsonWithDistinctCodes)
{
    const auto usage = run({"series"});
    EXPECT_EQ(usage.code, compoq::cli::kExitUsage);
    EXPECT_EQ(json::parse(usage.err)["error"], "usage");
    EXPECT_EQ(run({}).code, compoq::cli::kExitUsage);
    EXPECT_EQ(run({"verify", "even-k", "--k", "7"}).code, compoq::cli::kExitUsage);
    EXPECT_EQ(run({"verify", "pod", "--oracle", "fast"}).code, compoq::cli::kExitUsage);
    const auto big = run({"series", "partition", "--order", "1000000"});
    EXPECT_EQ(big.code, compoq::cli::kExitInfeasible);
    EXPECT_EQ(json::parse(big.err)["error"], "infeasible");
    EXPECT_EQ(run({"asymptotic", "p3", "--n", "200000"}).code, compoq::cli::kExitInfeasible);
    EXPECT_EQ(run({"compositions", "--set", "naturals", "--n", "40"}).code, compoq::cli::kExitInfeasible);
    EXPECT_EQ(run({"zeta", "--set", "naturals", "--s", "2", "--bound", "10"}).code, compoq::cli::kExitUsage);
}

TEST(Cli, OutputIsDeterministic)
{
    const std::vector<std::string> args{"verify", "rr", "--max-n", "30"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, SeedCorpusWritesGoldenFiles)
{
    const auto dir = std::filesystem::temp_directory_path() / "compoq_corpus_test";
    std::filesystem::remove_all(dir);
    const auto r = run({"--seed-corpus", dir.string(), "--order", "40"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(std::filesystem::exists(dir / "series_rr.json"));
    EXPECT_TRUE(std::filesystem::exists(dir / "series_psi.json"));
    EXPECT_TRUE(std::filesystem::exists(dir / "verify_all.json"));
    std::filesystem::remove_all(dir);
}
