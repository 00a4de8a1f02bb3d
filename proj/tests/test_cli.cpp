#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "braidfrac/cli.hpp"

using namespace braidfrac;

namespace {

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "braidfrac");
  return run_cli(args);
}

}  // namespace

TEST_CASE("sign and compare") {
  auto r = run({"sign", "--drs", "thompson:2", "--flavor", "braided", "frac T=[1] B=[1] S=[1]"});
  CHECK(r.code == 0);
  CHECK(r.out == "positive\n");
  r = run({"compare", "--drs", "thompson:2", "--flavor", "plain", "frac T=[1,1] B=[] S=[1,2]",
           "frac T=[] B=[] S=[]"});
  CHECK(r.code == 0);
  CHECK(r.out == "less\n");
  CHECK(run({"sign", "--drs", "thompson:2", "id"}).out == "zero\n");
  CHECK(run({"sign", "--drs", "thompson:2", "inv(frac T=[1] B=[1] S=[1])"}).out == "negative\n");
  CHECK(run({"compare", "--drs", "thompson:2", "id", "id"}).out == "equal\n");
  CHECK(run({"compare", "--drs", "thompson:2", "frac T=[1] B=[1] S=[1]", "id"}).out == "greater\n");
}

TEST_CASE("bi mode") {
  const std::string e = "frac T=[1,1] B=[1 1] S=[1,2]";
  CHECK(run({"sign", "--drs", "thompson:2", "--flavor", "pure", e}).out == "positive\n");
  CHECK(run({"sign", "--drs", "thompson:2", "--flavor", "pure", "--mode", "bi", e}).out == "negative\n");
  auto r = run({"sign", "--drs", "thompson:2", "--mode", "bi", "frac T=[1] B=[1] S=[1]"});
  CHECK(r.code != 0);
  CHECK(r.err.find("pure and plain") != std::string::npos);
}

TEST_CASE("element output re-parses") {
  auto r = run({"mul", "--drs", "thompson:2", "frac T=[1] B=[1] S=[1]", "frac T=[1,1] B=[2] S=[1,2]"});
  REQUIRE(r.code == 0);
  std::string product = r.out.substr(0, r.out.size() - 1);
  auto inv = run({"inv", "--drs", "thompson:2", product});
  REQUIRE(inv.code == 0);
  auto back = run({"mul", "--drs", "thompson:2", product, inv.out.substr(0, inv.out.size() - 1)});
  CHECK(run({"sign", "--drs", "thompson:2", back.out}).out == "zero\n");
  CHECK(run({"mul", "--drs", "thompson:2", product}).out == r.out);

  CHECK(run({"normalize", "--drs", "thompson:2", "frac T=[1] B=[] S=[1]"}).out == "frac T=[] B=[] S=[]\n");
  CHECK(run({"project", "--drs", "thompson:2", "--flavor", "pure", "frac T=[1,1] B=[1 1] S=[1,2]"}).out ==
        "frac T=[1,1] B=[] S=[1,2]\n");
  CHECK(run({"realize", "--drs", "thompson:2", "--flavor", "plain", "frac T=[1,1] B=[] S=[1,2]"}).out ==
        "(0,0) (1/2,1/4) (3/4,1/2) (1,1)\n");
  CHECK(run({"realize", "--drs", "thompson:2", "frac T=[1,1] B=[] S=[1,2]"}).code != 0);
}

TEST_CASE("axioms") {
  auto r = run({"axioms", "--drs", "houghton:3", "--flavor", "braided", "--suite", "cone", "--trials", "200",
                "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("suite=cone trials=200 failures=0 seed=7 time_ms=", 0) == 0);
  auto bad = run({"axioms", "--drs", "houghton:3", "--suite", "bi_invariance", "--trials", "2"});
  CHECK(bad.code != 0);
  CHECK(run({"axioms", "--drs", "houghton:3", "--suite", "bogus"}).code != 0);
}

TEST_CASE("errors") {
  auto r = run({"sign", "--drs", "thompson:2", "frac T=[1] B=[1 S=[1]"});
  CHECK(r.code != 0);
  CHECK(r.out.empty());
  CHECK(r.err.find("1:17") != std::string::npos);

  r = run({"sign", "--drs", "thompson:2", "--flavor", "permutation", "frac T=[1] B=[1] S=[1]"});
  CHECK(r.code != 0);
  CHECK(r.err.find("not orderable since they have torsion") != std::string::npos);

  CHECK(run({"sign", "--drs", "thompson:2", "--flavor", "weird", "id"}).code != 0);
  CHECK(run({"sign", "--drs", "nowhere.drs", "id"}).code != 0);
  CHECK(run({"sign", "id"}).code != 0);
  CHECK(run({}).code != 0);
  CHECK(run({"frobnicate"}).code != 0);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("axioms") != std::string::npos);
}

TEST_CASE("edge shift files") {
  const char* path = "braidfrac_cli_shift.txt";
  std::ofstream(path) << "a -> b b\nb -> a a\nbase: a\n";
  auto r = run({"sign", "--drs", std::string("edgeshift:") + path, "frac T=[1] B=[1] S=[1]"});
  CHECK(r.out == "positive\n");
  auto s = run({"axioms", "--drs", std::string("edgeshift:") + path, "--suite", "left_invariance", "--trials",
                "30", "--seed", "1"});
  CHECK(s.code == 0);
  std::remove(path);
}
