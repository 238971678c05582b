#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(LRPC_SIM_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST(Cli, JsonRun) {
    const auto r = run("--m 41 --t 4 --trials 3 --seed 9");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("\"schema\": \"lrpc-experiment/1\""), std::string::npos);
}

TEST(Cli, CsvSweep) {
    const auto r = run("--t 4 --trials 2 --sweep m --values 40,41 --output csv");
    ASSERT_EQ(r.status, 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "q,m,n,k,r,d,c,t,algorithm,trials,successes,degenerate,success_rate,mean_rounds,seed,wall_ms");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, 2);
}

TEST(Cli, ConfigErrorsExitTwo) {
    EXPECT_EQ(run("--q 4 --trials 1").status, 2);
    EXPECT_EQ(run("--m 20 --trials 1").status, 2);
    EXPECT_EQ(run("--algorithm gauss").status, 2);
    EXPECT_EQ(run("--no-such-flag").status, 2);
    EXPECT_EQ(run("--n 30 --c 1 --trials 1").status, 2);
    EXPECT_EQ(run("--sweep q --values 3 --trials 1").status, 2);
}

TEST(Cli, ResourceErrorExitsThree) {
    EXPECT_EQ(run("--algorithm multiset --trials 1 --candidate-cap 100").status, 3);
}

TEST(Cli, UnwritableOutputExitsOne) {
    EXPECT_EQ(run("--trials 1 --t 4 --out /nonexistent-dir/x.json").status, 1);
}

TEST(Cli, WritesOutputFile) {
    const std::string path = testing::TempDir() + "lrpc_cli_out.csv";
    ASSERT_EQ(run("--trials 2 --t 4 --output csv --out " + path).status, 0);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header.substr(0, 4), "q,m,");
    std::remove(path.c_str());
}

TEST(Cli, Help) { EXPECT_EQ(run("--help").status, 0); }
