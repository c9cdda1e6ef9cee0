#include <doctest.h>

#include <sstream>

#include "cfauto/cli.hpp"
#include "cfauto/json_io.hpp"

using namespace cfauto;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

void expect_usage_error(std::vector<std::string> args, const std::string& reason) {
  const Run r = run(std::move(args));
  CHECK(r.code == kExitUsage);
  CHECK(r.out.empty());
  CHECK(r.err.rfind("error: " + reason, 0) == 0);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
}

}  // namespace

TEST_CASE("derive prints the period-doubling equation") {
  const Run r = run({"derive", "--prefix", "", "--period", "a,b"});
  CHECK(r.code == kExitOk);
  CHECK(r.err.empty());
  CHECK(r.out.find("beta^4 = a*b+b^2+1 + (a^2*b+a*b^2)*beta + (a*b)*beta^2\n") != std::string::npos);
  CHECK(r.out.find("Delta = a+b\n") != std::string::npos);
}

TEST_CASE("verify reports CLEAN") {
  const Run r = run({"verify", "--period", "a,b", "--assign", "a=t", "--assign", "b=t+1", "--precision", "256"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "CLEAN at precision 256\n");
}

TEST_CASE("examples self-test") {
  const Run r = run({"examples"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("3/3 examples match\n") != std::string::npos);
}

TEST_CASE("seq and kernel") {
  const Run s = run({"seq", "--period", "a,b", "--count", "12"});
  CHECK(s.code == kExitOk);
  CHECK(s.out == "abaaabababaa\n");
  const Run k = run({"kernel", "--prefix", "a", "--period", "b,c", "--count", "1024"});
  CHECK(k.code == kExitOk);
  CHECK(k.out.find("automaton agrees with s(eps) for n < 1024") != std::string::npos);
  const Run multi = run({"seq", "--period", "x1,x2", "--count", "3"});
  CHECK(multi.out == "x1,x2,x1\n");
}

TEST_CASE("specialize prints rational coefficients") {
  const Run r = run({"specialize", "--prefix", "a", "--period", "b,c", "--assign", "a=t", "--assign", "b=t^2",
                     "--assign", "c=t^2+1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("A = (t^5+t^4+t^3+1)/(t^2)\n", 0) == 0);
}

TEST_CASE("search: certificate, then NONE when the envelope is too small") {
  const Run found = run({"search", "--period", "a,b", "--deg-x", "2", "--deg-t", "3", "--json"});
  CHECK(found.code == kExitOk);
  const auto j = ordered_json::parse(found.out);
  CHECK(j["q"] == 2);
  CHECK(j["deg_x"] == 2);
  CHECK(j["coeffs"]["P2"] == "t^2+1");
  CHECK(j["coeffs"]["P1"] == "t^3+t");
  CHECK(j["coeffs"]["P0"] == "t^2");
  const Run none = run({"search", "--period", "a,b", "--deg-x", "1", "--deg-t", "1"});
  CHECK(none.code == kExitNoRelation);
  CHECK(none.out.find("NONE within deg_x <= 1, deg_t <= 1") != std::string::npos);
  const Run gf4 = run({"search", "--period", "a,b,c", "--deg-x", "1", "--deg-t", "1", "--json"});
  CHECK(gf4.code == kExitNoRelation);
  CHECK(ordered_json::parse(gf4.out)["q"] == 4);
  CHECK(ordered_json::parse(gf4.out)["injective"] == true);
}

TEST_CASE("usage and library errors exit 2 with one line") {
  expect_usage_error({}, "UsageError");
  expect_usage_error({"derive"}, "UsageError");
  expect_usage_error({"derive", "--period", "a,b", "--bogus"}, "UsageError");
  expect_usage_error({"frobnicate"}, "UsageError");
  expect_usage_error({"verify", "--period", "a,b", "--assign", "a=t^-1", "--assign", "b=t"}, "ParseError");
  expect_usage_error({"verify", "--period", "a,b", "--assign", "a=t+t", "--assign", "b=t"}, "ConstantLetterAssignment");
  expect_usage_error({"verify", "--period", "a,b", "--assign", "a=t"}, "ConstantLetterAssignment");
  expect_usage_error({"verify", "--period", "a,b", "--assign", "a=t", "--assign", "z=t"}, "SymbolUniverseMismatch");
  expect_usage_error({"verify", "--period", "a,b", "--assign", "a=t", "--assign", "b=t+1", "--precision", "10"},
                     "PrecisionTooLow");
  expect_usage_error({"derive", "--period", "a,a"}, "DegenerateDeterminant");
  expect_usage_error({"derive", "--period", "a"}, "InvalidBackbone");
  expect_usage_error({"search", "--period", "a,b", "--q", "3"}, "UnsupportedFieldSize");
  expect_usage_error({"search", "--period", "a,b", "--assign", "a=x"}, "ParseError");
}

TEST_CASE("identical requests give identical bytes") {
  const std::vector<std::string> args = {"derive", "--period", "a,b,c", "--json"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> s = {"search", "--period", "a,b", "--json"};
  CHECK(run(s).out == run(s).out);
}

TEST_CASE("equation JSON round-trips byte for byte") {
  for (auto period : {"a,b", "a,b,c", "a,b,a,c"}) {
    const Run r = run({"derive", "--prefix", "x", "--period", period, "--json"});
    REQUIRE(r.code == kExitOk);
    const auto eq = equation_from_json(ordered_json::parse(r.out));
    CHECK(equation_to_json(eq).dump() + "\n" == r.out);
  }
}
