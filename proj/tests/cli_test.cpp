#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qverify/cli.hpp"
#include "qverify/registry.hpp"

using namespace qverify;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qverify_cli_test_" + name);
}

std::string without_volatile(const std::string& json) {
  auto doc = nlohmann::json::parse(json);
  doc["metadata"].erase("timestamp");
  for (auto& r : doc["reports"]) r.erase("millis");
  return doc.dump();
}

}  // namespace

TEST(Cli, ListPrintsEveryId) {
  const Outcome r = run({"list"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(static_cast<std::size_t>(std::count(r.out.begin(), r.out.end(), '\n')), catalog().size());
  EXPECT_NE(r.out.find("qbinom\tcore\tq-binomial theorem"), std::string::npos);
  const Outcome j = run({"list", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(j.out).size(), catalog().size());
}

TEST(Cli, VerifyExample) {
  const Outcome r = run({"verify", "--id", "qgauss", "--order", "30", "--seed", "7"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("3 equal, 0 mismatch, 0 skipped"), std::string::npos);
}

TEST(Cli, FaultGivesExitOne) {
  const Outcome r = run({"verify", "--id", "rrs3", "--samples", "1", "--fault", "12"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("at q^12"), std::string::npos);
}

TEST(Cli, SuiteJsonIsReproducible) {
  const std::vector<std::string> args{"suite", "--filter", "false-theta", "--order", "30", "--format", "json"};
  const Outcome a = run(args);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  const Outcome b = run(threaded);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(without_volatile(a.out), without_volatile(b.out));
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["metadata"]["N"], 30);
  EXPECT_EQ(doc["reports"].size(), 21u);  // 7 records x 3 samples
}

TEST(Cli, PteCheckExample) {
  const Outcome r = run({"pte-check", "--a", "1,5,6", "--b", "2,3,7", "--k", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("failure at e=3"), std::string::npos);
  EXPECT_EQ(run({"pte-check", "--a", "1,5,6", "--b", "2,3,7", "--k", "2"}).code, 0);
  EXPECT_EQ(run({"pte-check", "--a", "0,3", "--b", "1/2,5/2"}).code, 0);
  EXPECT_EQ(run({"pte-check", "--a", "0,3", "--b", "1,3"}).code, 1);
}

TEST(Cli, PteFamily) {
  EXPECT_EQ(run({"pte-family", "--family", "12", "--m", "1", "--K", "3"}).code, 0);
  EXPECT_EQ(run({"pte-family", "--family", "12n", "--m", "1/100"}).code, 0);
  EXPECT_EQ(run({"pte-family", "--family", "6", "--m", "2", "--n", "3", "--K", "1"}).code, 0);
  EXPECT_EQ(run({"pte-family", "--family", "6", "--m", "0"}).code, 2);
  EXPECT_EQ(run({"pte-family", "--family", "7"}).code, 2);
}

TEST(Cli, ParamsFile) {
  const auto path = temp_file("params.json");
  std::ofstream(path) << R"({"a": "q^2", "b": "q^3", "c": "q^7"})";
  const Outcome r = run({"verify", "--id", "qgauss", "--order", "30", "--params", path.string(), "--strategy", "exact"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("Equal"), std::string::npos);
  std::ofstream(path) << R"({"a": "q^2"})";
  EXPECT_EQ(run({"verify", "--id", "qgauss", "--params", path.string()}).code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, OutFile) {
  const auto path = temp_file("out.json");
  const Outcome r = run({"suite", "--filter", "ft3", "--samples", "1", "--format", "json", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(nlohmann::json::parse(in)["reports"][0]["status"], "Equal");
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"verify", "--id", "nope"}).code, 2);
  EXPECT_EQ(run({"suite", "--order", "0"}).code, 2);
  EXPECT_EQ(run({"suite", "--samples", "0"}).code, 2);
  EXPECT_EQ(run({"suite", "--strategy", "fast"}).code, 2);
  EXPECT_EQ(run({"suite", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"pte-check", "--a", "1,x", "--b", "1,2"}).code, 2);
  EXPECT_EQ(run({"pte-check", "--a", "1,2", "--b", "1"}).code, 2);
  EXPECT_EQ(run({"verify", "--id", "qgauss", "--params", "/nonexistent/p.json"}).code, 2);
  const Outcome r = run({"list", "--unknown"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, HelpIsNotAnError) { EXPECT_EQ(run({"--help"}).code, 0); }
