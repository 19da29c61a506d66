#include "support/fixtures.hpp"

#include "simplicial/io.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct CliResult
{
    int code = -1;
    std::string out;
    std::string err;
};

class Cli : public ::testing::Test
{
protected:
    void SetUp() override
    {
        m_dir = fs::temp_directory_path() / ("simplicial_cli_" + std::to_string(::getpid()));
        fs::create_directories(m_dir);
        for (auto& [name, c] : fixtures::all()) {
            std::ofstream(m_dir / (name + ".txt"), std::ios::binary) << simplicial::io::emit_complex(c);
        }
    }
    void TearDown() override { fs::remove_all(m_dir); }

    std::string file(const std::string& name) const { return (m_dir / (name + ".txt")).string(); }

    CliResult run(const std::string& args) const
    {
        const fs::path err = m_dir / "stderr.txt";
        const std::string command = std::string(SIMPLICIAL_CLI_PATH) + " " + args + " 2>" + err.string();
        CliResult r;
        FILE* pipe = popen(command.c_str(), "r");
        if (!pipe) {
            return r;
        }
        char buffer[4096];
        std::size_t n = 0;
        while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
            r.out.append(buffer, n);
        }
        r.code = WEXITSTATUS(pclose(pipe));
        std::ifstream in(err);
        r.err.assign(std::istreambuf_iterator<char>(in), {});
        return r;
    }

    fs::path m_dir;
};

} // namespace

TEST_F(Cli, InfoReportsShape)
{
    const CliResult r = run("info " + file("K_two"));
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["f_vector"], nlohmann::json::parse("[4,5,2]"));
    EXPECT_EQ(doc["q_star"], nlohmann::json::parse("[3,6,2]"));
}

TEST_F(Cli, DegreesCsv)
{
    const CliResult r = run("--format csv degrees " + file("K_bow") + " --q 2 --p 0 --kind adjacency");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "simplex,value,exact,flags\n0-1-2,3,3,\n2-3-4,3,3,\n");
}

TEST_F(Cli, GlobalOptionsAfterSubcommand)
{
    const CliResult a = run("--format csv centrality " + file("K_clust4") + " --measure clustering --q 1");
    const CliResult b = run("centrality " + file("K_clust4") + " --measure clustering --q 1 --format csv");
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("1-2,0.6666666666666666,2/3,"), std::string::npos);
}

TEST_F(Cli, CentralityMeasures)
{
    const CliResult eig = run("centrality " + file("K_two") + " --measure eigenvector --q 2 --p 1");
    ASSERT_EQ(eig.code, 0) << eig.err;
    const auto doc = nlohmann::json::parse(eig.out);
    EXPECT_EQ(doc["values"][0]["value"], 0.5);
    const CliResult between = run("--format csv centrality " + file("T_chain") + " --measure betweenness --p 1 --q 2");
    EXPECT_EQ(between.out, "simplex,value,exact,flags\n0-1-2,0,0,\n1-2-3,1,1,\n2-3-4,0,0,\n");
    const CliResult avg = run("--format csv centrality " + file("K_two") + " --measure average --q 2");
    EXPECT_EQ(avg.out, "simplex,value,exact,flags\nq=2,0.2,1/5,\n");
}

TEST_F(Cli, LaplacianMatrix)
{
    const CliResult r = run("--format csv laplacian " + file("K_tri") + " --q 0 --h 1 --hp 1");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "simplex,0,1,2\n0,2,-1,-1\n1,-1,2,-1\n2,-1,-1,2\n");
}

TEST_F(Cli, ComponentsMetadata)
{
    const CliResult r = run("components " + file("K_two") + " --p 2");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["metadata"]["q_star"], "2");
}

TEST_F(Cli, OracleIsCleanOnFixtures)
{
    const CliResult r = run("oracle " + file("K_wind"));
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(nlohmann::json::parse(r.out)["clean"].get<bool>());
}

TEST_F(Cli, GenWritesParsableComplex)
{
    const std::string out = (m_dir / "gen.txt").string();
    const CliResult r = run("gen --model pure --dim 2 --n 6 --prob 0.4 --seed 5 -o " + out);
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(out);
    const std::string text((std::istreambuf_iterator<char>(in)), {});
    EXPECT_EQ(text.rfind("# generator: pure-bernoulli v1", 0), 0U);
    EXPECT_NO_THROW(simplicial::io::parse_complex(text));
}

TEST_F(Cli, ExitCodesAndErrorJson)
{
    std::ofstream(m_dir / "bad.txt") << "0 1\n0 0 1\n";
    const CliResult parse = run("info " + (m_dir / "bad.txt").string());
    EXPECT_EQ(parse.code, 3);
    const auto err = nlohmann::json::parse(parse.err);
    EXPECT_EQ(err["error"], "parse_error");
    EXPECT_EQ(parse.err.find('\n'), parse.err.size() - 1);

    EXPECT_EQ(run("degrees " + file("K_two") + " --q 1 --p 5 --kind lower").code, 2);
    EXPECT_EQ(run("degrees " + file("K_two")).code, 2);
    EXPECT_EQ(run("gen --model pure --dim 2 --n 5 --prob 0 --seed 1").code, 3);

    std::ofstream big(m_dir / "big.txt");
    for (int v = 1; v <= 15; ++v) {
        big << "hub " << v << "\n";
    }
    big.close();
    const CliResult guard = run("oracle " + (m_dir / "big.txt").string());
    EXPECT_EQ(guard.code, 4);
    EXPECT_EQ(nlohmann::json::parse(guard.err)["error"], "guard_refusal");
}

TEST_F(Cli, ByteIdenticalReruns)
{
    for (const std::string& args : {"info " + file("T_chain"), "centrality " + file("K_wind") + " --measure closeness --p 0",
                                    "oracle " + file("K_clust4")}) {
        EXPECT_EQ(run(args).out, run(args).out) << args;
    }
}
