#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "schubert/error.hpp"
#include "schubert/json_io.hpp"
#include "schubert/schubert_ideal.hpp"

using namespace schubert;

namespace {

const TermOrder kAnti{TermOrderKind::Antidiagonal};

/// Runs a shell command, captures stdout, reports the exit code.
std::string runCommand(const std::string& command, int& exitCode) {
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    output.append(buffer, got);
  }
  const int status = pclose(pipe);
  REQUIRE(status != -1);
  exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return output;
}

std::string runCli(const std::string& args, int& exitCode) {
  return runCommand(std::string(SCHUBERT_CLI_PATH) + " " + args, exitCode);
}

}  // namespace

TEST_CASE("polynomial json round trip") {
  for (const char* text : {"31542", "32154", "21543"}) {
    for (const Polynomial& member :
         reducedSchubertBasis(Permutation::parse(text), kAnti).members) {
      const Json json = polyToJson(member);
      CHECK(polyFromJson(json, kAnti) == member);
    }
  }

  // Structure of a single term.
  const Polynomial half =
      Polynomial::fromVariable({1, 2}, kAnti).timesScalar(Rat(1, 2));
  const Json json = polyToJson(half);
  REQUIRE(json.size() == 1);
  CHECK(json[0]["coeff"] == "1/2");
  CHECK(json[0]["exps"] == Json::array({Json::array({1, 2, 1})}));

  CHECK_THROWS_AS(polyFromJson(Json::object(), kAnti), InputError);
  CHECK_THROWS_AS(polyFromJson(Json::array({Json::object()}), kAnti),
                  InputError);
}

TEST_CASE("betti json") {
  BettiTable table;
  table.add(0, 0, 1);
  table.add(1, 2, 3);
  const Json json = bettiToJson(table);
  REQUIRE(json.size() == 2);
  CHECK(json[0]["i"] == 0);
  CHECK(json[0]["j"] == 0);
  CHECK(json[0]["beta"] == 1);
  CHECK(json[1]["beta"] == 3);
}

TEST_CASE("ideal report fields") {
  const Json report = idealReport(Permutation::parse("31425"), kAnti);
  CHECK(report["schema"] == kSchemaVersion);
  CHECK(report["command"] == "ideal");
  CHECK(report["w"] == "31425");
  CHECK(report["n"] == 5);
  CHECK(report["order"] == "antidiag");
  CHECK(report["diagram"] ==
        Json::array({Json::array({1, 1}), Json::array({1, 2}),
                     Json::array({3, 2})}));
  REQUIRE(report["essential"].size() == 2);
  CHECK(report["essential"][0]["i"] == 1);
  CHECK(report["essential"][0]["j"] == 2);
  CHECK(report["essential"][0]["r"] == 0);
  CHECK(report["essential"][1]["i"] == 3);
  CHECK(report["essential"][1]["j"] == 2);
  CHECK(report["essential"][1]["r"] == 1);
  CHECK(report["fulton_count"] == 5);
  CHECK(report["fulton"].size() == 5);
  CHECK(report["elusive_count"] == report["elusive"].size());
  CHECK_FALSE(report.contains("note"));

  const Json empty = idealReport(Permutation::identity(3), kAnti);
  CHECK(empty["fulton_count"] == 0);
  CHECK(empty["note"] == "I_w = (0); the Rothe diagram is empty");
}

TEST_CASE("groebner report fields") {
  const Json report =
      groebnerReport(Permutation::parse("32154"), kAnti, true);
  CHECK(report["command"] == "groebner");
  CHECK(report["reduced"] == true);
  CHECK(report["count"] == 4);
  bool sawQuartic = false;
  for (const Json& member : report["basis"]) {
    if (member["degree"] == 4) {
      sawQuartic = true;
      CHECK(member["num_terms"] == 8);
      CHECK(member["lead"] == "x[1,4]·x[2,3]·x[3,2]·x[4,1]");
      const Polynomial poly = polyFromJson(member["poly"], kAnti);
      CHECK(poly.numTerms() == 8);
      CHECK(poly.str() == member["text"]);
    }
  }
  CHECK(sawQuartic);

  const Json raw = groebnerReport(Permutation::parse("31542"), kAnti, false);
  CHECK(raw["reduced"] == false);
  CHECK(raw["count"] == 7);
}

TEST_CASE("classify report fields") {
  const Json vex = classifyReport(Permutation::parse("31425"));
  CHECK(vex["command"] == "classify");
  CHECK(vex["vexillary"] == true);
  CHECK(vex["binomial"] == true);
  CHECK(vex["gao_yong_reduced"] == true);
  CHECK(vex["dominant"] == false);
  CHECK(vex["max_essential_rank"] == 1);
  CHECK(vex["parts"] == Json::array({"312", "132"}));

  const Json nonvex = classifyReport(Permutation::parse("31254"));
  CHECK(nonvex["vexillary"] == false);
  CHECK(nonvex["binomial"] == false);
  CHECK(nonvex["max_essential_rank"] == 3);

  const Json id = classifyReport(Permutation::identity(4));
  CHECK(id["dominant"] == true);
  CHECK(id["vexillary"] == true);
  CHECK(id["max_essential_rank"] == -1);
  CHECK(id["parts"] == Json::array());
}

TEST_CASE("regularity report for permutations") {
  const Json small = regularityReportForPermutation(
      Permutation::parse("31425"), 22);
  CHECK(small["command"] == "regularity");
  CHECK(small["decomposition"] == 1);
  CHECK(small["ads"] == 1);
  CHECK(small["ads_mode"] == "exhaustive");
  CHECK(small["oracle"] == 1);
  CHECK(small["agree"] == true);

  const Json staircase = regularityReportForPermutation(
      Permutation::parse("15432"), 22);
  CHECK(staircase["decomposition"] == 3);
  CHECK(staircase["ads"] == 3);
  CHECK(staircase["oracle"] == 3);
  CHECK(staircase["agree"] == true);

  CHECK_THROWS_AS(
      regularityReportForPermutation(Permutation::parse("2143"), 22),
      InputError);
}

TEST_CASE("regularity report for partitions") {
  const Json small = regularityReportForPartition(Partition({2, 1}), 22);
  CHECK(small["command"] == "regularity");
  CHECK(small["canonical_antidiagonal"]["length"] == 2);
  CHECK(small["canonical_antidiagonal"]["cells"] ==
        Json::array({Json::array({2, 1}), Json::array({1, 2})}));
  CHECK(small["rrw"] == 2);
  CHECK(small["ads"] == 2);
  CHECK(small["ads_mode"] == "exhaustive");
  CHECK_FALSE(small.contains("ads_note"));
  CHECK(small["witness"]["components"] == 3);
  CHECK(small["witness"]["strongly_connected"] == true);
  CHECK(small["agree"] == true);

  const Json big = regularityReportForPartition(Partition({4, 4, 4, 4}), 22);
  CHECK(big["rrw"] == 4);
  CHECK(big["ads"] == 4);
  CHECK(big["ads_mode"] == "witness");
  CHECK(big.contains("ads_note"));
  CHECK(big["witness"]["components"] == 5);
  CHECK(big["agree"] == true);

  const Json empty = regularityReportForPartition(Partition(), 22);
  CHECK(empty["rrw"] == 0);
  CHECK(empty["ads"] == 0);
  CHECK(empty["agree"] == true);
  CHECK_FALSE(empty.contains("witness"));
}

TEST_CASE("enumerate report fields") {
  const std::vector<Permutation> patterns = {Permutation::parse("2143"),
                                             Permutation::parse("1243")};
  const Json counted = enumerateReport(5, patterns, false);
  CHECK(counted["command"] == "enumerate");
  CHECK(counted["n"] == 5);
  CHECK(counted["patterns"] == Json::array({"2143", "1243"}));
  CHECK(counted["count"] == "90");
  CHECK_FALSE(counted.contains("witnesses"));

  const Json listed = enumerateReport(2, {}, true);
  CHECK(listed["count"] == "2");
  CHECK(listed["witnesses"] == Json::array({"12", "21"}));
}

TEST_CASE("verification report json") {
  VerificationReport report;
  report.theorem = "main";
  report.n = 4;
  report.checked = 33;
  report.wallMs = 1.5;
  const Json json = verificationReportToJson(report);
  CHECK(json["command"] == "verify");
  CHECK(json["theorem"] == "main");
  CHECK(json["checked"] == 33);
  CHECK(json["pass"] == true);
  CHECK(json["counterexamples"] == Json::array());
  CHECK(json["wall_ms"] == 1.5);
}

TEST_CASE("cli ideal command") {
  int exitCode = -1;
  const Json report = Json::parse(runCli("ideal 31542 --json", exitCode));
  CHECK(exitCode == 0);
  CHECK(report["diagram"].size() == 5);
  CHECK(report["elusive_count"] == 7);

  const Json trivial = Json::parse(runCli("ideal 1 --json", exitCode));
  CHECK(exitCode == 0);
  CHECK(trivial["note"] == "I_w = (0); the Rothe diagram is empty");

  // JSON is the default; --pretty switches to the human-readable layout.
  const std::string plain = runCli("ideal 31542", exitCode);
  CHECK(exitCode == 0);
  CHECK(Json::parse(plain)["elusive_count"] == 7);
  const std::string pretty = runCli("ideal 31542 --pretty", exitCode);
  CHECK(exitCode == 0);
  CHECK(pretty.find("Essential set E(w)") != std::string::npos);
  CHECK(pretty.find("det |") != std::string::npos);
  CHECK(pretty.find("Elusive minors G_w, 7 members") != std::string::npos);
}

TEST_CASE("cli groebner command") {
  int exitCode = -1;
  const Json report =
      Json::parse(runCli("groebner 32154 --reduced --json", exitCode));
  CHECK(exitCode == 0);
  CHECK(report["count"] == 4);
  bool sawQuartic = false;
  for (const Json& member : report["basis"]) {
    if (member["degree"] == 4) {
      sawQuartic = true;
      CHECK(member["num_terms"] == 8);
    }
  }
  CHECK(sawQuartic);
}

TEST_CASE("cli rejects the diagonal order") {
  int exitCode = -1;
  runCli("groebner 2143 --order diag --json", exitCode);
  CHECK(exitCode == 2);
}

TEST_CASE("cli regularity rejects non-binomial permutations") {
  int exitCode = -1;
  runCli("regularity 2143 --json", exitCode);
  CHECK(exitCode == 2);
}

TEST_CASE("cli regularity accepts partitions") {
  int exitCode = -1;
  const Json report =
      Json::parse(runCli("regularity --partition 2,1 --json", exitCode));
  CHECK(exitCode == 0);
  CHECK(report["rrw"] == 2);
  CHECK(report["ads"] == 2);
}

TEST_CASE("cli honors the permutation size cap") {
  int exitCode = -1;
  runCommand(std::string("SCHUBERT_MAX_N=4 ") + SCHUBERT_CLI_PATH +
                 " ideal 45312 --json",
             exitCode);
  CHECK(exitCode == 3);
  // Within the cap the same command succeeds.
  runCommand(std::string("SCHUBERT_MAX_N=5 ") + SCHUBERT_CLI_PATH +
                 " ideal 45312 --json",
             exitCode);
  CHECK(exitCode == 0);
}

TEST_CASE("cli verify is deterministic and strips timing") {
  int exitCode = -1;
  const std::string first =
      runCli("verify --theorem schroder --n 7 --json", exitCode);
  CHECK(exitCode == 0);
  const std::string second =
      runCli("verify --theorem schroder --n 7 --json", exitCode);
  CHECK(exitCode == 0);
  CHECK(first == second);
  const Json report = Json::parse(first);
  CHECK(report["pass"] == true);
  CHECK(report["checked"] == 7);
  CHECK_FALSE(report.contains("wall_ms"));

  const std::string timed =
      runCli("verify --theorem schroder --n 7 --json --timing", exitCode);
  CHECK(exitCode == 0);
  CHECK(Json::parse(timed).contains("wall_ms"));
}

TEST_CASE("cli enumerate command") {
  int exitCode = -1;
  const Json report =
      Json::parse(runCli("enumerate --n 5 2143 1243 --json", exitCode));
  CHECK(exitCode == 0);
  CHECK(report["count"] == "90");
}

TEST_CASE("cli usage errors") {
  int exitCode = -1;
  runCli("ideal", exitCode);
  CHECK(exitCode == 2);
  runCli("ideal 1135 --json", exitCode);
  CHECK(exitCode == 2);
  runCli("verify --theorem nope --json", exitCode);
  CHECK(exitCode == 2);
  runCli("--help", exitCode);
  CHECK(exitCode == 0);
}
