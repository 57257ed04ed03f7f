#include "taulab/claims.hpp"
#include "taulab/cli.hpp"
#include "taulab/error.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

using namespace taulab;

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "taulab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("verify emits the fixed json schema") {
  const Run r = run({"verify", "--order", "Q", "--seed", "42", "--samples", "50", "--claims", "inclusion,chains",
                     "--no-timing"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.contains("config"));
  CHECK(doc.contains("summary"));
  REQUIRE(doc["records"].size() == 2);
  for (const auto& rec : doc["records"]) {
    CHECK(rec["passed"] == true);
    CHECK(rec["elapsedMs"] == 0);
    CHECK(rec["paperAnchor"].get<std::string>() == claim_anchor(rec["claimId"].get<std::string>()));
    for (const char* key : {"claimId", "order", "samples", "witnesses"}) CHECK(rec.contains(key));
  }
  CHECK(doc["summary"]["allPassed"] == true);
}

TEST_CASE("identical configurations give identical reports") {
  const std::vector<std::string> args{"verify", "--order", "lex(Z,Z)", "--seed", "9", "--samples", "100", "--no-timing"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("text reports carry the anchors verbatim") {
  const Run r = run({"verify", "--order", "Q", "--samples", "20", "--claims", "gap", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find(std::string(claim_anchor("gap"))) != std::string::npos);
}

TEST_CASE("usage and configuration errors exit with 2") {
  CHECK(run({"verify", "--order", "sum(Z,Z)"}).code == 2);
  const Run parse = run({"verify", "--order", "lex(Z"});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("column 6") != std::string::npos);
  CHECK(run({"verify", "--claims", "nonsense"}).code == 2);
  CHECK(run({"verify", "--format", "xml"}).code == 2);
  CHECK(run({"verify", "--samples", "0"}).code == 2);
  CHECK(run({"finite", "--n", "6"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "--out", "/nonexistent-dir/report.json", "--claims", "chains"}).code == 2);
}

TEST_CASE("help exits cleanly") {
  const Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("finite subcommand") {
  const Run r = run({"finite", "--n", "4"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["rows"][0]["topologyCount"] == 355);
  CHECK(doc["rows"][0]["homeoClassCount"] == 33);
  CHECK(doc["rows"][0]["condensationClassesEqualHomeoClasses"] == true);
  const Run five = run({"finite", "--n", "5"});
  CHECK(nlohmann::json::parse(five.out)["rows"][0]["stronglyReversibleCount"].is_null());
}

TEST_CASE("complete, compare and homeo subcommands") {
  CHECK(run({"complete", "--order", "Z"}).code == 0);
  const Run cmp = run({"compare", "--order", "Q", "--c1", "0", "--c2", "surd(0,1,2,1)"});
  CHECK(cmp.code == 0);
  const auto doc = nlohmann::json::parse(cmp.out);
  CHECK(doc["verdict"] == "StrictlyLess");
  CHECK(doc["sep"] == "1");
  CHECK(run({"homeo", "--order", "lex(Z,Z)", "--c1", "topOfCopy(0)", "--c2", "topOfCopy(7)"}).code == 0);
  CHECK(run({"homeo", "--order", "Q", "--c1", "0", "--c2", "5"}).code == 0);
  const Run no = run({"homeo", "--order", "Q", "--c1", "surd(0,1,2,1)", "--c2", "0"});
  CHECK(no.code == 1);
  CHECK(nlohmann::json::parse(no.out).contains("obstruction"));
}

TEST_CASE("reports can be written to a file") {
  const std::string path = "taulab_cli_test_report.json";
  const Run r = run({"verify", "--claims", "sandwich", "--samples", "10", "--out", path});
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(nlohmann::json::parse(buf.str())["records"][0]["claimId"] == "sandwich");
  std::remove(path.c_str());
}

TEST_CASE("a report with a failed record does not pass") {
  Report report;
  report.records.push_back({"chains", std::string(claim_anchor("chains")), "Q", 1, true, {}, 0});
  CHECK(report.passed());
  report.records.push_back({"gap", std::string(claim_anchor("gap")), "Q", 1, false, {"forced"}, 0});
  CHECK_FALSE(report.passed());
}
