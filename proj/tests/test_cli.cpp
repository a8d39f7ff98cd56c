#include <gtest/gtest.h>

#include <cstdio>
#include <nlohmann/json.hpp>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(SATOTATE_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int rc = pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

// "n,M_n" rows of a CSV report, keyed by n.
std::map<int, std::string> moment_rows(const std::string& csv) {
    std::map<int, std::string> rows;
    bool in = false;
    for (const auto& line : lines(csv)) {
        if (line == "n,M_n") {
            in = true;
            continue;
        }
        if (line.empty()) in = false;
        if (!in) continue;
        const auto comma = line.find(',');
        rows[std::stoi(line.substr(0, comma))] = line.substr(comma + 1);
    }
    return rows;
}

}  // namespace

TEST(Cli, GroupMoments) {
    const auto r = run("group --name 'USp(4)' --nmax 10");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "1,0,1,0,3,0,14,0,84,0,594\n");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("group --name NOSUCH").status, 2);
    EXPECT_EQ(run("ec --curve 1,1 --bound 2000000").status, 3);
    EXPECT_EQ(run("genus2 --poly 1,-1,0,0,0,1 --bound 9000").status, 3);
    EXPECT_EQ(run("ec --curve 0,0 --bound 100").status, 2);
    EXPECT_EQ(run("ec --curve 1,1 --bound 100 --nmax 11").status, 2);
    EXPECT_EQ(run("ec --curve 1,1 --bound 100 --format xml").status, 2);
    EXPECT_EQ(run("nosuchcommand").status, 2);
    EXPECT_EQ(run("powers --t 5 --q 5 --rmax 10").status, 2);
    EXPECT_EQ(run("genus2 --poly 1,-1,0,0,0,1 --bound 100 --disc -3").status, 2);
}

TEST(Cli, ArtinPaperTableRow) {
    const auto r = run("artin --poly 1,-1,0,1 --bound 1000 --convention paper-table");
    ASSERT_EQ(r.status, 0);
    const auto ls = lines(r.out);
    const std::vector<std::string> expected{"0,54,0.323353", "1,87,0.520958", "2,1,0.005988", "3,25,0.149701"};
    for (const auto& row : expected) EXPECT_NE(std::find(ls.begin(), ls.end(), row), ls.end()) << row;
    EXPECT_NE(r.out.find("# warning: p=23"), std::string::npos);
}

TEST(Cli, BadPrimesAreWarningsNotErrors) {
    const auto r = run("ec --curve 1,1 --bound 100");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("# warning: p=31"), std::string::npos);
}

TEST(Cli, RerunsAreByteIdentical) {
    for (const char* args : {"ec --curve 1,1 --bound 20000 --bins 20 --workers 1",
                             "classify --name 'SU(2)' --samples 5000 --seed 4 --format json",
                             "artin --poly 1,-1,0,1 --bound 5000 --format json",
                             "genus2 --poly 1,-1,0,0,0,1 --bound 300 --lpoly --per-prime"}) {
        const auto a = run(args);
        const auto b = run(args);
        EXPECT_EQ(a.status, 0) << args;
        EXPECT_EQ(a.out, b.out) << args;
        EXPECT_FALSE(a.out.empty()) << args;
    }
}

TEST(Cli, JsonAndCsvCarryTheSameNumbers) {
    const std::string base = "ec --curve 0,1 --bound 20000 --workers 1 --precision full";
    const auto csv = run(base + " --format csv");
    const auto json = run(base + " --format json");
    ASSERT_EQ(csv.status, 0);
    ASSERT_EQ(json.status, 0);
    const auto doc = nlohmann::json::parse(json.out);
    const auto rows = moment_rows(csv.out);
    ASSERT_EQ(rows.size(), doc.at("moments").size());
    for (int n = 0; n < static_cast<int>(rows.size()); ++n) {
        EXPECT_EQ(std::stod(rows.at(n)), doc.at("moments").at(static_cast<std::size_t>(n)).get<double>()) << n;
    }
}

TEST(Cli, PowersSubcommand) {
    const auto r = run("powers --t -3 --q 5 --rmax 100000 --nmax 4");
    ASSERT_EQ(r.status, 0);
    const auto rows = moment_rows(r.out);
    EXPECT_NEAR(std::stod(rows.at(2)), 2.0, 0.05);
    EXPECT_NEAR(std::stod(rows.at(4)), 6.0, 0.2);
}

TEST(Cli, ClassifyNamedGroup) {
    const auto r = run("classify --name 'N(U(1))' --samples 20000 --seed 2 --format json");
    ASSERT_EQ(r.status, 0);
    const auto doc = nlohmann::json::parse(r.out);
    ASSERT_TRUE(doc.is_array());
    EXPECT_EQ(doc.at(0).at("name"), "N(U(1))");
}
