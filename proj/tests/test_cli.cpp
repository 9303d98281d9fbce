#include "cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using rsumset::cli::run;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return (fs::temp_directory_path() / ("rsumset-test-" + name)).string(); }

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

} // namespace

TEST(Cli, SumsetHuman) {
    const auto r = invoke({"sumset", "-p", "11", "-A", "0,1,2,3,5", "-B", "0,1,2,3,5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("|A restricted+ B| = 8"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("eh_plus_one"), std::string::npos);
}

TEST(Cli, SumsetRecords) {
    const auto r = invoke({"--format", "records", "sumset", "-p", "7", "-A", "0", "-B", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["sumset"], nlohmann::json::array({3}));
    EXPECT_EQ(j["restricted"], nlohmann::json::array({3}));
}

TEST(Cli, ParseErrors) {
    EXPECT_EQ(invoke({"sumset", "-p", "11", "-A", "0,,1", "-B", "1"}).code, 2);
    EXPECT_EQ(invoke({"sumset", "-p", "12", "-A", "0", "-B", "1"}).code, 2);
    EXPECT_EQ(invoke({"sumset", "-p", "11", "-A", "0"}).code, 2);
    EXPECT_EQ(invoke({"nonsense"}).code, 2);
    EXPECT_EQ(invoke({}).code, 2);
}

TEST(Cli, CnOnLocusPoly) {
    const auto r = invoke({"cn", "-p", "11", "-A", "0,1,2,3,5", "-B", "0,1,2,3,5"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("verdict: valid"), std::string::npos) << r.out;
}

TEST(Cli, CnPolyFile) {
    const std::string good = temp_path("good.poly"), bad = temp_path("bad.poly");
    // x(x-1): vanishes on {0,1} x anything
    std::ofstream(good) << "1:2,0\n10:1,0\n";
    std::ofstream(bad) << "1:0,0\n";
    EXPECT_EQ(invoke({"cn", "-p", "11", "-A", "0,1", "-B", "2,3", "--poly", good}).code, 0);
    const auto r = invoke({"cn", "-p", "11", "-A", "0,1", "-B", "2,3", "--poly", bad});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("does not vanish"), std::string::npos);
    fs::remove(good);
    fs::remove(bad);
}

TEST(Cli, Audit) {
    auto r = invoke({"audit", "-p", "11", "-A", "0,1,2,3,5", "-B", "0,1,2,3,5"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("trace clean"), std::string::npos);

    r = invoke({"audit", "-p", "11", "-A", "0,1,2,3", "-B", "0,1,2,3,5"});
    EXPECT_EQ(r.code, 3);

    r = invoke({"audit", "-p", "11", "-A", "0,1,2,3,5", "-B", "0,1,2,3,5", "--show-closed-forms"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("-35/2"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("-42"), std::string::npos);
}

TEST(Cli, AuditBoundaryPrimeIsDirty) {
    const auto r = invoke({"audit", "-p", "11", "-A", "0,1,2,3,4,6", "-B", "0,1,2,3,4,6"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("trace dirty"), std::string::npos);
}

TEST(Cli, VerifyWritesReport) {
    const std::string path = temp_path("main-11-5.json");
    const auto r = invoke({"verify", "main", "-p", "11", "-k", "5", "--out", path});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(slurp(path));
    EXPECT_EQ(j["p"], 11);
    EXPECT_EQ(j["counterexamples"].size(), 0u);
    fs::remove(path);

    const std::string bpath = temp_path("bounds-7.json");
    EXPECT_EQ(invoke({"verify", "bounds", "-p", "7", "--out", bpath}).code, 0);
    fs::remove(bpath);
}

TEST(Cli, VerifyResourceGuard) {
    EXPECT_EQ(invoke({"verify", "main", "-p", "101", "-k", "40", "--out", temp_path("never.json")}).code, 4);
}

TEST(Cli, VerifyUnknownTheorem) {
    EXPECT_EQ(invoke({"verify", "other", "-p", "11", "-k", "5"}).code, 2);
}

TEST(Cli, RecordsAreDeterministic) {
    const std::vector<std::string> args{"--format", "records", "audit", "-p", "13", "-A", "0,1,2,3,5", "-B", "0,1,2,3,5"};
    const auto r1 = invoke(args), r2 = invoke(args);
    EXPECT_EQ(r1.code, 0);
    EXPECT_EQ(r1.out, r2.out);
    std::istringstream lines(r1.out);
    for (std::string line; std::getline(lines, line);) EXPECT_TRUE(nlohmann::json::accept(line)) << line;
}

TEST(Cli, Enumerate) {
    const auto r = invoke({"enumerate", "-p", "7", "-k", "2", "--start", "20"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "20: {5,6}\n");
    EXPECT_EQ(invoke({"enumerate", "-p", "5", "-k", "6"}).code, 2);
}
