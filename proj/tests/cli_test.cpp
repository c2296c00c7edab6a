#include <factorcrit/graph6.hpp>

#include <json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <sys/wait.h>

namespace {
    struct Run {
        int code;
        std::string out;
    };

    auto run(const std::string & args, const std::string & env = "") -> Run
    {
        auto cmd = env + (env.empty() ? "" : " ") + std::string(FACTORCRIT_CLI_PATH) + " " + args + " 2>&1";
        FILE * pipe = popen(cmd.c_str(), "r");
        if (! pipe)
            return {-1, ""};
        std::string out;
        std::array<char, 4096> buf;
        while (auto got = std::fread(buf.data(), 1, buf.size(), pipe))
            out.append(buf.data(), got);
        int status = pclose(pipe);
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
    }

    auto contains(const std::string & hay, const std::string & needle) -> bool
    {
        return hay.find(needle) != std::string::npos;
    }

    auto lines(const std::string & text) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        std::istringstream in(text);
        for (std::string l ; std::getline(in, l) ; )
            if (! l.empty())
                out.push_back(l);
        return out;
    }
}

TEST(Cli, PerfectMatching)
{
    auto r = run("pm A_");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "perfect matching: yes"));
    EXPECT_EQ(run("pm Bw").code, 1);
}

TEST(Cli, CriticalityReportsFailingSet)
{
    auto r = run("kfc --k 2 EhEG");
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(contains(r.out, "{0,2}")) << r.out;
    EXPECT_EQ(run("kfc --k 1 Dhc").code, 0);
    EXPECT_EQ(run("kfc --k 1 --mode tutte Dhc").code, 0);
}

TEST(Cli, JsonOutputIsVersioned)
{
    auto r = run("kfc --k 2 EhEG --json");
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["graph6"], "EhEG");
    EXPECT_EQ(j["criticality"]["critical"], false);
    EXPECT_EQ(j["criticality"]["failing_set"], nlohmann::json::array({0, 2}));
}

TEST(Cli, SurveySummary)
{
    auto r = run("survey --gen 6 --k 4 --json");
    ASSERT_EQ(r.code, 0) << r.out;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["counts"]["minimal"], 1);
    EXPECT_EQ(j["counts"]["total"], 156);
}

TEST(Cli, SurveyJobCountFromEnvironment)
{
    auto a = run("survey --gen 7 --k 1 --json", "FACTORCRIT_JOBS=1");
    auto b = run("survey --gen 7 --k 1 --json", "FACTORCRIT_JOBS=3");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run("survey --gen 5 --k 1", "FACTORCRIT_JOBS=0").code, 2);
}

TEST(Cli, VerifyListsEachStatementOnce)
{
    auto r = run("verify --k 2 'G|eKMC'");
    EXPECT_EQ(r.code, 0) << r.out;
    auto ls = lines(r.out);
    std::set<std::string> unique(ls.begin(), ls.end());
    EXPECT_EQ(unique.size(), ls.size()) << r.out;
    EXPECT_TRUE(contains(r.out, "star-structure: pass"));
    EXPECT_TRUE(contains(r.out, "min-degree: pass"));
    // C6 is not minimally 2-critical: a failed property, not a usage error
    EXPECT_EQ(run("verify --k 2 EhEG").code, 1);
}

TEST(Cli, Generate)
{
    auto r = run("gen 4");
    EXPECT_EQ(r.code, 0);
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 11U);
    for (const auto & l : ls)
        EXPECT_EQ(factorcrit::parse_graph6(l).order(), 4);

    auto path = (std::filesystem::temp_directory_path() / "factorcrit_cli_gen.g6").string();
    EXPECT_EQ(run("gen 5 --out " + path).code, 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(lines(ss.str()).size(), 34U);
}

TEST(Cli, HuntPlantedSelfTest)
{
    auto r = run("hunt --from 6 --to 6 --k 2 --plant");
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(contains(r.out, "min-degree"));
    EXPECT_EQ(run("hunt --from 4 --to 7").code, 0);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("bogus").code, 2);
    EXPECT_EQ(run("kfc --k 3 EhEG").code, 2);
    EXPECT_EQ(run("pm B~~").code, 2);
    EXPECT_EQ(run("hunt --from 6").code, 2);
    EXPECT_EQ(run("gen 10").code, 2);
}

TEST(Cli, ReadsStandardInput)
{
    auto r = run("pm < /dev/null");
    EXPECT_EQ(r.code, 2);
    auto path = (std::filesystem::temp_directory_path() / "factorcrit_cli_in.g6").string();
    std::ofstream(path) << "A_\n";
    EXPECT_EQ(run("pm < " + path).code, 0);
    EXPECT_EQ(run("pm --file " + path).code, 0);
}
