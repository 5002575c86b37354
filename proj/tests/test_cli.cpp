#include <gtest/gtest.h>

#include <sstream>

#include "markov12/cli.hpp"
#include "markov12/serialize.hpp"

using namespace markov12;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Cli, EnumerateTable) {
  const auto r = call({"enumerate", "--kind", "twelve", "--depth", "3", "--format", "table"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(lines(r.out).size(), 9u);
  EXPECT_EQ(lines(r.out).back(), "(217,3673,3)");
  EXPECT_EQ(call({"enumerate", "--depth", "0"}).out, "(1,1,1)\n");
  EXPECT_EQ(lines(call({"enumerate", "--kind", "markov", "--depth", "3"}).out).back(), "(29,169,2)");
}

TEST(Cli, EnumerateJsonRoundTripsByteForByte) {
  const auto r = call({"enumerate", "--depth", "6", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  std::string again;
  for (const auto& l : lines(r.out)) again += node_to_json(node_from_json(parse_json(l))).dump() + "\n";
  EXPECT_EQ(again, r.out);
}

TEST(Cli, EnumerateMaxValueAndDot) {
  EXPECT_EQ(lines(call({"enumerate", "--depth", "10", "--max-value", "300"}).out).size(), 6u);
  const auto dot = call({"enumerate", "--depth", "1", "--format", "dot"});
  EXPECT_NE(dot.out.find("n0 -> n1"), std::string::npos);
}

TEST(Cli, Verify) {
  auto r = call({"verify"}, "1 13 3\n");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "PASS (1,13,3)\n");
  r = call({"verify", "--kind", "markov"}, "1 1 2\n(29,169,2)\n");
  EXPECT_EQ(r.code, kExitOk);
  r = call({"verify"}, "2 2 2\n");
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_EQ(r.out, "FAIL (2,2,2)\n");
  EXPECT_EQ(call({"verify"}, "1 x 3\n").code, kExitUsage);
  EXPECT_EQ(call({"verify"}, "1 13\n").code, kExitUsage);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"enumerate", "--kind", "cubic"}).code, kExitUsage);
  EXPECT_EQ(call({"enumerate", "--depth", "-1"}).code, kExitUsage);
  EXPECT_EQ(call({"enumerate", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(call({"mutate"}).code, kExitUsage);
  EXPECT_EQ(call({"mutate", "--word", "3,4"}).code, kExitUsage);
  EXPECT_EQ(call({"snake", "--arc", "3up"}).code, kExitUsage);
  EXPECT_EQ(call({"crosscheck", "--depth", "7"}).code, kExitUsage);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}

TEST(Cli, MutatePrintsSeedAndSpecialisation) {
  auto r = call({"mutate", "--word", "3,2,3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("specialization (1,13,61)"), std::string::npos);
  r = call({"mutate", "--word", "3,2", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const Json j = parse_json(r.out);
  EXPECT_EQ(j["specialization"], Json::array({"1", "13", "3"}));
  EXPECT_EQ(seed_to_json(seed_from_json(j)).dump(), [&] {
    Json k = j;
    k.erase("specialization");
    return k.dump();
  }());
}

TEST(Cli, Descend) {
  auto r = call({"descend", "217", "13", "16693"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "(217,13,16693) -3-> (217,13,3) -1-> (1,13,3) -2-> (1,1,3)\n");
  r = call({"descend"}, "1 13 61\n");
  EXPECT_EQ(r.out, "(1,13,61) -3-> (1,13,3) -2-> (1,1,3)\n");
  EXPECT_EQ(call({"descend", "2", "2", "2"}).code, kExitFailure);
}

TEST(Cli, CensusAndSeed) {
  auto r = call({"census", "--max-value", "300"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("every maximum occurs once among 6 maxima"), std::string::npos);
  r = call({"seed", "--kind", "markov"});
  EXPECT_EQ(r.out, R"({"matrix":[[0,2,-2],[-2,0,2],[2,-2,0]],"diagonal":[1,1,1],"cluster":["x1","x2","x3"]})" "\n");
}

TEST(Cli, Snake) {
  auto r = call({"snake", "--arc", "3ccw 2cw 3cw"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("perfect matchings 13"), std::string::npos);
  EXPECT_NE(r.out.find("continued fraction [1,2,3,1] = 13/9"), std::string::npos);
  r = call({"snake", "--arc", "arc 3ccw 2cw 3cw", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const Json j = parse_json(r.out);
  EXPECT_EQ(j["matchings"], "13");
  EXPECT_EQ(j["cross"], "x2*x3^2");
  EXPECT_EQ(j["value"], "13/9");
  EXPECT_EQ(parse_json(r.out).dump() + "\n", r.out);
  EXPECT_EQ(snake_to_json(snake_from_json(j["graph"])).dump(), j["graph"].dump());
  EXPECT_EQ(polynomial_to_json(polynomial_from_json(j["numerator"])).dump(), j["numerator"].dump());
  EXPECT_EQ(call({"snake", "--arc", "3cw 2ccw 3cw"}).code, kExitFailure);
  r = call({"snake", "--arc", "l2", "--format", "dot", "--matching", "0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("color=red"), std::string::npos);
}

TEST(Cli, Crosscheck) {
  auto r = call({"crosscheck", "--depth", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("[3,2] (1,13,3)  cluster (1,13,3)  matchings (1,13,3)  continued fractions (1,13,3)"),
            std::string::npos);
  r = call({"crosscheck", "--depth", "0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("PASS 1 vertices"), std::string::npos);
  r = call({"crosscheck", "--depth", "3", "--inject-fault"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.out.find("FAIL word [3,2,1,2]"), std::string::npos);
  EXPECT_EQ(call({"crosscheck", "--depth", "6"}).code, kExitOk);
}
