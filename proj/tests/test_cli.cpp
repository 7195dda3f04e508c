#include <gtest/gtest.h>

#include <algorithm>

#include "json.hpp"

#include "cli_cases.hpp"
#include "test_support.hpp"

namespace dvr {
namespace {

using testing::run_cli;

TEST(Cli, ValuationAndResidue) {
  EXPECT_EQ(run_cli({"val", "--field", "padic:2", "8/12"}).out, "v=1\n");
  EXPECT_EQ(run_cli({"val", "--field", "padic:2", "0"}).out, "v=inf\n");
  EXPECT_EQ(run_cli({"val", "--field", "padic:3", "-3/4"}).out, "v=1\n");
  EXPECT_EQ(run_cli({"val", "--field", "tadic:3", "t^2/(t+1)"}).out, "v=2\n");
  EXPECT_EQ(run_cli({"residue", "--field", "padic:2", "7/5"}).out, "residue=1\nfield=F_2\n");
  EXPECT_EQ(run_cli({"residue", "--field", "tadic:0", "(t+3)/(t+1)"}).out, "residue=3\nfield=Q\n");
}

TEST(Cli, ArithAndPowers) {
  EXPECT_EQ(run_cli({"arith", "--field", "padic:2", "mul", "2/3", "3/2"}).out, "result=1\n");
  EXPECT_EQ(run_cli({"arith", "--field", "tadic:3", "div", "t^2", "t+1"}).out, "result=t^2/(t+1)\n");
  EXPECT_EQ(run_cli({"upow", "--field", "padic:5", "3"}).out, "power=125\nv=3\n");
}

TEST(Cli, SymbolsAndGradedProduct) {
  EXPECT_EQ(run_cli({"symbol", "--field", "padic:2", "6"}).out, "degree=1\ncoeff=1\nsymbol=1*T\n");
  const auto r = run_cli({"grmul", "--field", "padic:2", "6", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("product=1*T^2\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("multiplicative=true\n"), std::string::npos);
}

TEST(Cli, Checks) {
  const auto f = run_cli({"filt-check", "--field", "tadic:3", "--seed", "7", "--samples", "50", "--max-level", "4"});
  EXPECT_EQ(f.code, 0) << f.out;
  EXPECT_NE(f.out.find("axiom=product pass=1250/1250"), std::string::npos) << f.out;
  const auto a = run_cli({"axioms", "--field", "padic:5", "--seed", "1", "--samples", "100"});
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("axiom=multiplicative pass=100/100"), std::string::npos);
  const auto s = run_cli({"strong-split", "--field", "padic:2", "12", "1", "1"});
  EXPECT_EQ(s.out, "a=2\nb=6\nwitness=12 = 2 * 6\n");
  const auto d = run_cli({"adic-check", "--field", "padic:2", "--seed", "3", "--samples", "20", "3"});
  EXPECT_EQ(d.code, 0) << d.out;
  EXPECT_EQ(run_cli({"principal", "--field", "padic:2", "12,8"}).out, "e=2\n");
}

TEST(Cli, IdealsAndMaps) {
  EXPECT_EQ(run_cli({"ideal", "gen", "--field", "padic:2", "4,6"}).out, "ideal=pi^1*R\n");
  EXPECT_EQ(run_cli({"ideal", "inv", "--field", "padic:2", "4,6"}).out, "ideal=pi^-1*R\n");
  EXPECT_EQ(run_cli({"ideal", "prod", "--field", "padic:2", "4", "1/2"}).out, "ideal=pi^1*R\n");
  EXPECT_EQ(run_cli({"ideal", "denom", "--field", "padic:2", "1/4"}).out, "a=4\n");
  EXPECT_EQ(run_cli({"snf", "--field", "padic:2", "2,4;0,8"}).out, "U=1,0;0,1\nD=2,0;0,8\nV=1,-2;0,1\nexponents=1,3\n");
  EXPECT_EQ(run_cli({"grmap", "escape", "--field", "padic:2", "--shifts-src", "0,1", "0,0;0,0", "0,2"}).out,
            "escape=3\n");
  const auto c = run_cli({"grmap", "compat", "--field", "padic:2", "--shifts-src", "1", "--shifts-dst", "0", "1"});
  EXPECT_EQ(c.code, 1);
  EXPECT_EQ(c.out, "compatible=false\nviolation=(0,0)\n");
  EXPECT_EQ(run_cli({"grmap", "gr-injective", "--field", "padic:3", "3"}).out, "gr_injective=false\n");
  EXPECT_EQ(run_cli({"grmap", "injective", "--field", "padic:3", "3"}).out, "injective=true\n");
  EXPECT_EQ(run_cli({"grmap", "leading", "--field", "padic:3", "3,1"}).out, "leading=0,1\n");
}

TEST(Cli, Specf) {
  const auto r = run_cli({"specf", "lemma32", "--field", "padic:2", "--seed", "5", "--samples", "50"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "clause=i status=FAIL-LITERAL witness=2\n"
            "clause=ii status=PASS\n"
            "clause=iii status=PASS\n"
            "clause=iv-upper status=PASS\n"
            "clause=iv-lower status=FAIL-LITERAL witness=2\n");
  EXPECT_EQ(run_cli({"specf", "branched", "--field", "tadic:0", "m"}).out, "branched=true\n");
  EXPECT_EQ(run_cli({"specf", "branched", "--field", "tadic:0", "0"}).out, "branched=false\n");
  EXPECT_EQ(run_cli({"specf", "spec", "--field", "padic:7"}).out, "spec=(0),m\n");
  EXPECT_EQ(run_cli({"specf", "upper", "--field", "padic:2", "2", "5"}).out, "member=true\n");
  EXPECT_EQ(run_cli({"specf", "lower", "--field", "padic:2", "4", "5"}).out, "member=false\n");
  const auto p = run_cli({"specf", "prop36", "--field", "padic:3", "--seed", "1", "--samples", "30", "9"});
  EXPECT_EQ(p.out, "clause=smallest-prime status=PASS\nclause=largest-prime status=FAIL-LITERAL witness=3\n");
}

TEST(Cli, JsonOutput) {
  const auto r = run_cli({"specf", "lemma32", "--field", "tadic:3", "--seed", "5", "--samples", "50", "--json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["i.status"], "FAIL-LITERAL");
  EXPECT_EQ(j["ii.status"], "PASS");
  EXPECT_EQ(j["iv-lower.witness"], "t");
  const auto v = nlohmann::json::parse(run_cli({"val", "--json", "--field", "padic:2", "8/12"}).out);
  EXPECT_EQ(v["v"], "1");
}

TEST(Cli, Determinism) {
  const std::vector<std::string> args{"filt-check", "--field", "padic:3", "--seed", "9", "--samples", "30"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
  const std::vector<std::string> l{"specf", "lemma32", "--field", "tadic:0", "--seed", "2", "--samples", "40"};
  EXPECT_EQ(run_cli(l).out, run_cli(l).out);
}

TEST(Cli, ExitCodeMatrix) {
  for (const auto& c : testing::exit_code_matrix()) {
    const auto r = run_cli(c.args);
    std::string joined;
    for (const auto& a : c.args) joined += a + " ";
    EXPECT_EQ(r.code, c.code) << joined << "\n" << r.out << r.err;
    if (c.code == 2) {
      EXPECT_EQ(r.err.rfind("error: ", 0), 0u) << joined;
      EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
    }
  }
}

}  // namespace
}  // namespace dvr
