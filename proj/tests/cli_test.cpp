#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "zagreb/canonical.hpp"
#include "zagreb/g6.hpp"

namespace zagreb::cli {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream s(text);
  for (std::string line; std::getline(s, line);) out.push_back(line);
  return out;
}

TEST(Indices, CycleRecord) {
  const auto r = invoke({"indices", "--format", "json"}, "Dhc\n");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["schema"], 1);
  const auto& rec = doc["records"][0];
  EXPECT_EQ(rec["pi1"], "1024");
  EXPECT_EQ(rec["pi2"], "1024");
  EXPECT_EQ(rec["M1"], "20");
  EXPECT_EQ(rec["M2"], "20");
}

TEST(Indices, CompleteGraphRecordInline) {
  const auto r = invoke({"indices", "C~"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "C~ n=4 m=6 M1=36 M2=54 pi1=6561 pi2=531441\n");
}

TEST(Indices, LargeValuesPrintExactly) {
  const auto r = invoke({"indices", "--format", "csv", "--ln", encode_g6(complete(30))});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.find('e'), std::string::npos);
  EXPECT_NE(r.out.find(pi2(complete(30)).to_string()), std::string::npos);
}

TEST(Indices, MalformedLineIsNamed) {
  const auto r = invoke({"indices"}, "Dhc\nC~\nD~\n");
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(Construct, CollapsedCliqueFamiliesAgree) {
  const auto s = invoke({"construct", "kns", "--n", "5", "--k", "1"});
  const auto p = invoke({"construct", "knp", "--n", "5", "--k", "1"});
  ASSERT_EQ(s.code, kExitOk);
  ASSERT_EQ(p.code, kExitOk);
  EXPECT_TRUE(is_isomorphic(decode_g6(lines(s.out)[0]), decode_g6(lines(p.out)[0])));
}

TEST(Construct, PipesIntoBridges) {
  const auto g = invoke({"construct", "cns", "--n", "6", "--k", "2"});
  ASSERT_EQ(g.code, kExitOk);
  const auto b = invoke({"bridges", "--format", "json"}, g.out);
  ASSERT_EQ(b.code, kExitOk) << b.err;
  const auto doc = nlohmann::json::parse(b.out);
  EXPECT_EQ(doc["records"][0]["n"], 6);
  EXPECT_EQ(doc["records"][0]["bridges"].size(), 2u);
}

TEST(Construct, InvalidClassExplains) {
  const auto r = invoke({"construct", "cns", "--n", "6", "--k", "4"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("InvalidClass"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("n - 3"), std::string::npos) << r.err;
}

TEST(Construct, WithIndices) {
  const auto r = invoke({"construct", "complete", "--n", "4", "--indices", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["graph6"], "C~");
  EXPECT_EQ(doc["indices"]["pi2"], "531441");
}

TEST(Construct, UnknownFamilyIsUsageError) {
  EXPECT_EQ(invoke({"construct", "wheel", "--n", "5"}).code, kExitUsage);
}

TEST(Verify, SixPasses) {
  const auto r = invoke({"verify", "--n-max", "6", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["reports"].size(), 24u);
  EXPECT_TRUE(doc["all_pass"].get<bool>());
}

TEST(Verify, OutputIndependentOfWorkers) {
  const auto one = invoke({"verify", "--n-max", "7", "--workers", "1"});
  const auto four = invoke({"verify", "--n-max", "7", "--workers", "4"});
  EXPECT_EQ(one.code, kExitOk);
  EXPECT_EQ(one.out, four.out);
}

TEST(Verify, TooLarge) {
  const auto r = invoke({"verify", "--n-max", "9"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("TooLarge"), std::string::npos) << r.err;
}

TEST(Verify, ZeroWorkersRejected) {
  EXPECT_EQ(invoke({"verify", "--workers", "0"}).code, kExitUsage);
}

TEST(Enumerate, FourVertices) {
  const auto r = invoke({"enumerate", "--n", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(lines(r.out).size(), 6u);
  EXPECT_EQ(r.err, "count: 6\n");
  EXPECT_EQ(invoke({"enumerate", "--n", "4"}).out, r.out);
}

TEST(Enumerate, ClassFilter) {
  const auto r = invoke({"enumerate", "--n", "5", "--k", "1", "--workers", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto records = lines(r.out);
  EXPECT_EQ(records.size(), 4u);
  for (const auto& rec : records) EXPECT_EQ(bridges(decode_g6(rec)).size(), 1u);
}

TEST(Enumerate, Errors) {
  EXPECT_EQ(invoke({"enumerate", "--n", "9"}).code, kExitUsage);
  EXPECT_EQ(invoke({"enumerate", "--n", "6", "--k", "4"}).code, kExitUsage);
}

TEST(Enumerate, IngestsFile) {
  const auto path = std::filesystem::temp_directory_path() / "zagreb_cli_ingest.g6";
  {
    std::ofstream f(path);
    f << "Dhc\nD[S\nD~{\n";
  }
  const auto r = invoke({"enumerate", "--n", "5", "--input", path.string()});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(lines(r.out).size(), 2u);
}

TEST(Lemmas, PassWithSeed) {
  const auto r = invoke({"lemmas", "--seed", "5", "--trials", "20", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_EQ(lines(r.out)[0], "check,mode,instances,violations,pass,first_violation");
}

TEST(Extremal, MaxPi2) {
  const auto r = invoke({"extremal", "--n", "6", "--k", "2", "--index", "pi2", "--direction", "max",
                         "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["value"], "61509375");
  ASSERT_EQ(doc["attainers"].size(), 1u);
  EXPECT_TRUE(is_isomorphic(decode_g6(doc["attainers"][0].get<std::string>()), k_n_s({6, 2})));
}

TEST(G6, EncodeDecodeRoundTrip) {
  const auto d = invoke({"g6", "decode", "C~", "Dhc", "@"});
  ASSERT_EQ(d.code, kExitOk) << d.err;
  EXPECT_EQ(lines(d.out), (std::vector<std::string>{"4 0-1 0-2 0-3 1-2 1-3 2-3", "5 0-1 0-4 1-2 2-3 3-4", "1"}));
  const auto e = invoke({"g6", "encode"}, d.out);
  ASSERT_EQ(e.code, kExitOk) << e.err;
  EXPECT_EQ(e.out, "C~\nDhc\n@\n");
}

TEST(G6, EncodeRejectsBadEdges) {
  EXPECT_EQ(invoke({"g6", "encode", "3 0-3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"g6", "encode", "3 0_1"}).code, kExitUsage);
}

TEST(Output, WritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "zagreb_cli_output.txt";
  const auto r = invoke({"construct", "cycle", "--n", "5", "--output", path.string()});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::string line;
  std::getline(f, line);
  std::filesystem::remove(path);
  EXPECT_EQ(line, "Dhc");
}

TEST(Usage, MissingSubcommandAndHelp) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  const auto help = invoke({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("verify"), std::string::npos);
}

}  // namespace
}  // namespace zagreb::cli
