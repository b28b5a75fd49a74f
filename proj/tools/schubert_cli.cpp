// The `schubert` command-line tool.
//
// Subcommands: ideal, groebner, classify, regularity, verify, enumerate.
// Every subcommand emits a machine-readable JSON report on stdout by
// default; `--pretty` switches to a human-readable layout that mirrors the
// determinant-bracket notation. Stdout is byte-deterministic for fixed
// flags; wall-clock timings go to stderr (or into the JSON only under
// `--timing`).
//
// Exit codes: 0 success / sweep passed, 1 sweep found a counterexample,
// 2 usage or input error, 3 resource cap exceeded.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "schubert/betti.hpp"
#include "schubert/diagram.hpp"
#include "schubert/error.hpp"
#include "schubert/json_io.hpp"
#include "schubert/minor.hpp"
#include "schubert/patterns.hpp"
#include "schubert/regularity.hpp"
#include "schubert/schubert_ideal.hpp"
#include "schubert/verify.hpp"

namespace {

using namespace schubert;

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

/// Hard ceiling for verify sweeps (the harness precondition).
constexpr int kMaxVerifyN = 7;

/// Sweep guard against accidental huge inputs: permutations and sweep
/// ranges accepted by the CLI are bounded by SCHUBERT_MAX_N (default 9).
int maxPermutationSize() {
  const char* env = std::getenv("SCHUBERT_MAX_N");
  if (env == nullptr || *env == '\0') {
    return 9;
  }
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || value < 1) {
    throw InputError("SCHUBERT_MAX_N must be a positive integer");
  }
  return static_cast<int>(std::min(value, 64L));
}

Permutation parsePermutationArg(const std::string& text) {
  const Permutation w = Permutation::parse(text);
  const int cap = maxPermutationSize();
  if (w.size() > cap) {
    throw BudgetError("permutation has " + std::to_string(w.size()) +
                      " entries; SCHUBERT_MAX_N = " + std::to_string(cap));
  }
  return w;
}

/// The CLI ships the two antidiagonal orders only; the library's extra
/// control order is reserved for tests.
TermOrder parseOrderArg(const std::string& name) {
  const TermOrder order = TermOrder::fromName(name);
  if (order.kind() == TermOrderKind::Diagonal) {
    throw InputError(
        "supported orders are 'antidiag' and 'antidiag-transpose'");
  }
  return order;
}

void emitJson(const Json& report) { std::cout << report.dump(2) << "\n"; }

std::string varName(int i, int j) {
  return "x[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

/// Renders a minor in determinant brackets:
///   det | x[1,1]  x[1,2] |
///       | x[2,1]  x[2,2] |
void printMinorBracket(const MinorSpec& spec, const std::string& indent) {
  for (size_t a = 0; a < spec.rows.size(); ++a) {
    std::cout << indent << (a == 0 ? "det | " : "    | ");
    for (size_t b = 0; b < spec.cols.size(); ++b) {
      if (b > 0) {
        std::cout << "  ";
      }
      std::cout << varName(spec.rows[a], spec.cols[b]);
    }
    std::cout << " |\n";
  }
}

std::string indexSetText(const std::vector<int>& values) {
  std::string out = "{";
  for (size_t k = 0; k < values.size(); ++k) {
    if (k > 0) {
      out += ",";
    }
    out += std::to_string(values[k]);
  }
  return out + "}";
}

void prettyIdeal(const Permutation& w, const TermOrder& order) {
  const int n = w.size();
  std::cout << "w = " << w.compactStr() << "  (n = " << n << ", order "
            << order.name() << ")\n";

  const std::vector<Cell> diagram = rotheDiagram(w);
  if (diagram.empty()) {
    std::cout << "D(w) is empty: I_w = (0); no generators.\n";
    return;
  }
  std::cout << "\nRothe diagram D(w), " << diagram.size() << " box"
            << (diagram.size() == 1 ? "" : "es") << ":\n";
  size_t next = 0;
  for (int i = 1; i <= n; ++i) {
    std::cout << "  ";
    for (int j = 1; j <= n; ++j) {
      const bool box = next < diagram.size() && diagram[next].row == i &&
                       diagram[next].col == j;
      if (box) {
        ++next;
      }
      std::cout << (j > 1 ? " " : "") << (box ? '#' : '.');
    }
    std::cout << "\n";
  }

  const std::vector<EssentialBox> essential = essentialSet(w);
  std::cout << "\nEssential set E(w), " << essential.size() << " box"
            << (essential.size() == 1 ? "" : "es") << ":\n";
  for (const EssentialBox& box : essential) {
    std::cout << "  (" << box.cell.row << "," << box.cell.col << ")  rank "
              << box.rank << "\n";
  }

  const std::vector<FultonGenerator> fulton = fultonGenerators(w);
  std::cout << "\nFulton generators, " << fulton.size() << " minor"
            << (fulton.size() == 1 ? "" : "s") << ":\n";
  for (size_t k = 0; k < fulton.size(); ++k) {
    const FultonGenerator& gen = fulton[k];
    std::cout << "  [" << (k + 1) << "] rows " << indexSetText(gen.minor.rows)
              << " cols " << indexSetText(gen.minor.cols) << ", box ("
              << gen.box.cell.row << "," << gen.box.cell.col << ") rank "
              << gen.box.rank << "\n";
    printMinorBracket(gen.minor, "      ");
  }

  const std::vector<MinorSpec> elusive = elusiveMinors(w);
  std::cout << "\nElusive minors G_w, " << elusive.size() << " member"
            << (elusive.size() == 1 ? "" : "s") << ":\n";
  for (size_t k = 0; k < elusive.size(); ++k) {
    std::cout << "  [" << (k + 1) << "] rows " << indexSetText(elusive[k].rows)
              << " cols " << indexSetText(elusive[k].cols) << "\n";
    printMinorBracket(elusive[k], "      ");
  }
}

void prettyGroebner(const Permutation& w, const TermOrder& order,
                    bool reduced) {
  std::cout << "w = " << w.compactStr() << "  (n = " << w.size() << ", order "
            << order.name() << ")\n";
  const std::vector<Polynomial> members =
      reduced ? reducedSchubertBasis(w, order).members
              : gaoYongBasis(w, order);
  std::cout << (reduced ? "reduced Groebner basis G'_w: "
                        : "Gao-Yong basis G_w: ")
            << members.size() << " member" << (members.size() == 1 ? "" : "s")
            << "\n";
  for (size_t k = 0; k < members.size(); ++k) {
    const Polynomial& member = members[k];
    std::cout << "  [" << (k + 1) << "] degree " << member.totalDegree()
              << ", " << member.numTerms() << " term"
              << (member.numTerms() == 1 ? "" : "s") << ":\n      "
              << member.str() << "\n";
  }
}

void prettyClassify(const Json& report) {
  const auto boolWord = [](const Json& value) {
    return value.get<bool>() ? "true" : "false";
  };
  std::cout << "w = " << report["w"].get<std::string>() << "  (n = "
            << report["n"].get<int>() << ")\n"
            << "  vexillary:           " << boolWord(report["vexillary"])
            << "\n"
            << "  binomial:            " << boolWord(report["binomial"])
            << "\n"
            << "  gao_yong_reduced:    "
            << boolWord(report["gao_yong_reduced"]) << "\n"
            << "  max_essential_rank:  "
            << report["max_essential_rank"].get<int>() << "\n"
            << "  dominant:            " << boolWord(report["dominant"])
            << "\n";
  std::cout << "  parts:               ";
  if (report["parts"].is_null()) {
    std::cout << "(undefined: some component is not a shaped block)\n";
  } else if (report["parts"].empty()) {
    std::cout << "(none)\n";
  } else {
    const auto& parts = report["parts"];
    for (size_t k = 0; k < parts.size(); ++k) {
      std::cout << (k > 0 ? " x " : "") << parts[k].get<std::string>();
    }
    std::cout << "\n";
  }
}

void prettyRegularity(const Json& report) {
  const auto modeText = [&report]() {
    return report["ads_mode"].get<std::string>();
  };
  if (report.contains("w")) {
    std::cout << "w = " << report["w"].get<std::string>() << "  (n = "
              << report["n"].get<int>() << ")\n"
              << "  decomposition: " << report["decomposition"].get<int>()
              << "\n"
              << "  ads:           " << report["ads"].get<int>() << "  ("
              << modeText() << ")\n";
    std::cout << "  oracle:        ";
    if (report["oracle"].is_null()) {
      std::cout << "skipped (generator budget)\n";
    } else {
      std::cout << report["oracle"].get<int>() << "\n";
    }
  } else {
    std::cout << "lambda = " << report["partition"].get<std::string>() << "\n";
    const Json& canonical = report["canonical_antidiagonal"];
    std::cout << "  canonical antidiagonal C_lambda: length "
              << canonical["length"].get<int>() << ", cells";
    for (const Json& cell : canonical["cells"]) {
      std::cout << " (" << cell[0].get<int>() << "," << cell[1].get<int>()
                << ")";
    }
    std::cout << "\n  rrw: " << report["rrw"].get<int>() << "\n"
              << "  ads: " << report["ads"].get<int>() << "  (" << modeText()
              << ")\n";
    if (report.contains("witness")) {
      const Json& witness = report["witness"];
      std::cout << "  witness: " << witness["edges"].size() << " edges, "
                << witness["components"].get<int>()
                << " recession components, strongly connected: "
                << (witness["strongly_connected"].get<bool>() ? "yes" : "no")
                << "\n";
    }
  }
  std::cout << "agree: " << (report["agree"].get<bool>() ? "yes" : "no")
            << "\n";
}

void prettyVerify(const VerificationReport& report) {
  std::cout << "theorem " << report.theorem;
  if (report.n > 0) {
    std::cout << "  n=" << report.n;
  }
  std::cout << "  checked=" << report.checked << "  "
            << (report.pass() ? "pass" : "FAIL") << "\n";
  for (const std::string& line : report.counterexamples) {
    std::cout << "  - " << line << "\n";
  }
}

void prettyEnumerate(const Json& report) {
  std::cout << "S_" << report["n"].get<int>();
  const Json& patterns = report["patterns"];
  if (!patterns.empty()) {
    std::cout << " avoiding";
    for (size_t k = 0; k < patterns.size(); ++k) {
      std::cout << (k > 0 ? ", " : " ") << patterns[k].get<std::string>();
    }
  }
  std::cout << ": " << report["count"].get<std::string>()
            << " permutations\n";
  if (report.contains("witnesses")) {
    for (const Json& witness : report["witnesses"]) {
      std::cout << "  " << witness.get<std::string>() << "\n";
    }
  }
}

VerificationReport runVerify(const std::string& theorem, int n, int parallel,
                             const TermOrder& order, int edgeCap,
                             uint64_t seed) {
  const int cap = std::min(kMaxVerifyN, maxPermutationSize());
  const auto sweepN = [&](int fallback) {
    const int value = n > 0 ? n : fallback;
    if (value > cap) {
      throw InputError("verify sweeps support n <= " + std::to_string(cap) +
                       " (got " + std::to_string(value) + ")");
    }
    return value;
  };
  if (theorem == "main") {
    return verifyMain(sweepN(6), parallel);
  }
  if (theorem == "vexillary") {
    return verifyVexillary(sweepN(6), parallel, order);
  }
  if (theorem == "binomial") {
    return verifyBinomial(sweepN(6), parallel);
  }
  if (theorem == "schroder") {
    return verifySchroder(sweepN(7));
  }
  if (theorem == "lemmas") {
    return verifyLemmas(sweepN(6), parallel);
  }
  if (theorem == "regularity") {
    const int oracleN = n > 0 ? n : 5;
    if (oracleN > 5) {
      throw InputError(
          "the regularity oracle sweep supports n <= 5 (the Betti oracle "
          "generator budget)");
    }
    return verifyRegularity(edgeCap, oracleN, parallel);
  }
  if (theorem == "properties") {
    return verifyProperties(seed);
  }
  if (theorem == "knutson-miller") {
    return verifyKnutsonMiller(sweepN(5), parallel);
  }
  throw InputError("unknown theorem '" + theorem + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Schubert determinantal ideals: Grobner bases, classification, "
      "regularity, and exhaustive verification"};
  app.require_subcommand(1);

  std::string wText;
  std::string orderName = "antidiag";
  bool pretty = false;

  CLI::App* ideal = app.add_subcommand(
      "ideal", "Rothe diagram, essential set, Fulton and elusive generators");
  ideal->add_option("w", wText, "permutation in one-line notation (31425)")
      ->required();
  ideal->add_option("--order", orderName,
                    "term order: antidiag | antidiag-transpose");
  ideal->add_flag("--json", "JSON report on stdout (default)");
  ideal->add_flag("--pretty", pretty, "human-readable layout");

  bool reduced = false;
  CLI::App* groebner = app.add_subcommand(
      "groebner", "Gao-Yong basis G_w or reduced Groebner basis G'_w");
  groebner->add_option("w", wText, "permutation in one-line notation")
      ->required();
  groebner->add_option("--order", orderName,
                       "term order: antidiag | antidiag-transpose");
  groebner->add_flag("--reduced", reduced,
                     "emit the reduced basis G'_w instead of G_w");
  groebner->add_flag("--json", "JSON report on stdout (default)");
  groebner->add_flag("--pretty", pretty, "human-readable layout");

  CLI::App* classify = app.add_subcommand(
      "classify", "vexillary / binomial flags and the part decomposition");
  classify->add_option("w", wText, "permutation in one-line notation")
      ->required();
  classify->add_flag("--json", "JSON report on stdout (default)");
  classify->add_flag("--pretty", pretty, "human-readable layout");

  std::string partitionText;
  int edgeCap = 22;
  CLI::App* regularity = app.add_subcommand(
      "regularity",
      "Castelnuovo-Mumford regularity by every available route");
  CLI::Option* regW = regularity->add_option(
      "w", wText, "binomial permutation in one-line notation");
  CLI::Option* regPartition = regularity->add_option(
      "--partition", partitionText,
      "partition lambda (comma-separated parts) instead of a permutation");
  regW->excludes(regPartition);
  regPartition->excludes(regW);
  regularity->add_option("--edge-cap", edgeCap,
                         "exhaustive recession-search edge budget");
  regularity->add_flag("--json", "JSON report on stdout (default)");
  regularity->add_flag("--pretty", pretty, "human-readable layout");

  std::string theorem;
  int sweepNOption = 0;
  int parallel = 1;
  uint64_t seed = 12345;
  bool timing = false;
  CLI::App* verify =
      app.add_subcommand("verify", "exhaustive theorem sweeps over S_n");
  verify
      ->add_option("--theorem", theorem,
                   "main | vexillary | binomial | schroder | lemmas | "
                   "regularity | properties | knutson-miller")
      ->required();
  verify->add_option("--n", sweepNOption,
                     "sweep bound (default per theorem; at most 7)");
  verify->add_option("--parallel", parallel, "worker threads (default 1)");
  verify->add_option("--order", orderName,
                     "term order for the vexillary sweep");
  verify->add_option("--edge-cap", edgeCap,
                     "recession edge budget for the regularity suite");
  verify->add_option("--seed", seed, "RNG seed for the property suite");
  verify->add_flag("--timing", timing,
                   "include wall_ms in the JSON report (non-deterministic)");
  verify->add_flag("--json", "JSON report on stdout (default)");
  verify->add_flag("--pretty", pretty, "human-readable layout");

  int enumerateN = 0;
  std::vector<std::string> patternTexts;
  bool listWitnesses = false;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "count or list pattern-avoiding permutations");
  enumerate->add_option("--n", enumerateN, "symmetric group size")->required();
  enumerate->add_option("patterns", patternTexts,
                        "patterns to avoid (e.g. 2143 1243)");
  enumerate->add_flag("--list", listWitnesses, "list the avoiders");
  enumerate->add_flag("--json", "JSON report on stdout (default)");
  enumerate->add_flag("--pretty", pretty, "human-readable layout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (app.got_subcommand(ideal)) {
      const Permutation w = parsePermutationArg(wText);
      const TermOrder order = parseOrderArg(orderName);
      if (pretty) {
        prettyIdeal(w, order);
      } else {
        emitJson(idealReport(w, order));
      }
    } else if (app.got_subcommand(groebner)) {
      const Permutation w = parsePermutationArg(wText);
      const TermOrder order = parseOrderArg(orderName);
      if (pretty) {
        prettyGroebner(w, order, reduced);
      } else {
        emitJson(groebnerReport(w, order, reduced));
      }
    } else if (app.got_subcommand(classify)) {
      const Json report = classifyReport(parsePermutationArg(wText));
      if (pretty) {
        prettyClassify(report);
      } else {
        emitJson(report);
      }
    } else if (app.got_subcommand(regularity)) {
      Json report;
      if (*regPartition) {
        const Partition lambda = Partition::parse(partitionText);
        if (lambda.width() > 99 || lambda.numParts() > 99) {
          throw BudgetError("partition parts are capped at 99 rows/columns");
        }
        report = regularityReportForPartition(lambda, edgeCap);
      } else if (*regW) {
        report =
            regularityReportForPermutation(parsePermutationArg(wText), edgeCap);
      } else {
        throw InputError("regularity needs a permutation or --partition");
      }
      if (pretty) {
        prettyRegularity(report);
      } else {
        emitJson(report);
      }
    } else if (app.got_subcommand(verify)) {
      const TermOrder order = parseOrderArg(orderName);
      if (parallel < 1 || parallel > 64) {
        throw InputError("--parallel must be between 1 and 64");
      }
      const VerificationReport report =
          runVerify(theorem, sweepNOption, parallel, order, edgeCap, seed);
      std::cerr << "verify " << report.theorem << ": checked "
                << report.checked << " in "
                << static_cast<long long>(std::llround(report.wallMs))
                << " ms\n";
      if (pretty) {
        prettyVerify(report);
      } else {
        Json json = verificationReportToJson(report);
        if (!timing) {
          json.erase("wall_ms");
        }
        emitJson(json);
      }
      return report.pass() ? kExitPass : kExitCounterexample;
    } else if (app.got_subcommand(enumerate)) {
      if (enumerateN < 1 || enumerateN > maxPermutationSize()) {
        throw InputError("--n must be between 1 and " +
                         std::to_string(maxPermutationSize()) +
                         " (SCHUBERT_MAX_N)");
      }
      std::vector<Permutation> patterns;
      for (const std::string& text : patternTexts) {
        patterns.push_back(Permutation::parse(text));
      }
      const Json report =
          enumerateReport(enumerateN, patterns, listWitnesses);
      if (pretty) {
        prettyEnumerate(report);
      } else {
        emitJson(report);
      }
    }
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitPass;
}
