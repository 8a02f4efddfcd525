#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream o, e;
    const int c = gnq::cli::run(args, o, e);
    return {c, o.str(), e.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

} // namespace

TEST(Cli, PpTest) {
    auto r = run({"pp-test", "--q", "3", "--e", "3", "--n", "101"});
    EXPECT_EQ(r.code, gnq::cli::kOk);
    EXPECT_EQ(r.out, "desirable\n");
    r = run({"pp-test", "--q", "3", "--e", "3", "--n", "100"});
    EXPECT_EQ(r.code, gnq::cli::kFail);
    EXPECT_EQ(r.out.rfind("not desirable", 0), 0u);
}

TEST(Cli, SearchQab) {
    auto r = run({"search-qab", "--q", "5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out), (std::vector<std::string>{"6 1", "8 1"}));
}

TEST(Cli, EvalMethodsIdentical) {
    auto a = run({"eval", "--q", "3", "--e", "2", "--n", "5", "--method", "recur"});
    auto b = run({"eval", "--q", "3", "--e", "2", "--n", "5", "--method", "functional"});
    auto c = run({"eval", "--q", "3", "--e", "2", "--n", "5", "--method", "symbolic"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(lines(a.out).size(), 9u);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
}

TEST(Cli, SearchTsvAndJson) {
    auto t = run({"search", "--q", "3", "--e", "2", "--weight-gt", "3"});
    EXPECT_EQ(t.code, 0);
    auto L = lines(t.out);
    ASSERT_EQ(L.size(), 9u); // header + 8
    auto j = run({"search", "--q", "3", "--e", "2", "--weight-gt", "3", "--format", "json"});
    EXPECT_EQ(j.code, 0);
    std::vector<std::uint64_t> got;
    for (auto& l : lines(j.out)) {
        auto obj = nlohmann::json::parse(l);
        got.push_back(obj.at("n").get<std::uint64_t>());
        EXPECT_EQ(obj.at("q").get<unsigned>(), 3u);
    }
    EXPECT_EQ(got, (std::vector<std::uint64_t>{71, 95, 101, 103, 119, 151, 197, 485}));
}

TEST(Cli, SearchDeterministic) {
    auto a = run({"search", "--q", "3", "--e", "3", "--workers", "1"});
    auto b = run({"search", "--q", "3", "--e", "3", "--workers", "8"});
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, gnq::cli::kUsage);
    EXPECT_EQ(run({"pp-test", "--q", "3", "--e", "3", "--n", "101", "--bogus"}).code, gnq::cli::kUsage);
    EXPECT_EQ(run({"pp-test", "--q", "6", "--e", "1", "--n", "5"}).code, gnq::cli::kUsage);
    EXPECT_EQ(run({"pp-test", "--q", "3", "--e", "1", "--n", "abc"}).code, gnq::cli::kUsage);
    EXPECT_EQ(run({"frobnicate"}).code, gnq::cli::kUsage);
    auto r = run({"theorem", "--id", "T9.9", "--params", "q=3"});
    EXPECT_EQ(r.code, gnq::cli::kUsage);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, Theorem) {
    auto r = run({"theorem", "--id", "T5.3", "--params", "q=7,i=2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("agreement: yes"), std::string::npos);
}

TEST(Cli, Conjecture) {
    EXPECT_EQ(run({"conjecture", "--id", "c5.1", "--bounds", "q=3,5;e=2"}).code, 0);
    auto r = run({"conjecture", "--id", "c5.x", "--bounds", "q=2;e=3"});
    EXPECT_EQ(r.code, gnq::cli::kFail);
    EXPECT_NE(r.out.find("COUNTEREXAMPLE"), std::string::npos);
}

TEST(Cli, MiscCommands) {
    EXPECT_EQ(run({"field-info", "--p", "3", "--s", "1", "--e", "2"}).code, 0);
    EXPECT_EQ(run({"params", "--family", "t4.3", "--p", "3", "--e", "2"}).code, 0);
    EXPECT_EQ(run({"sporadic", "--case", "n91525"}).code, 0);
    EXPECT_EQ(run({"appendix-c", "--q", "5"}).code, 0);
    EXPECT_EQ(run({"table", "--id", "tb1"}).code, 0);
    EXPECT_EQ(run({"table", "--id", "tb1", "--data-dir", "/nonexistent"}).code, gnq::cli::kFail);
}
