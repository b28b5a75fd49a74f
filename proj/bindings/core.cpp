// Python bindings: thin wrappers around the JSON report builders plus a few
// direct predicates. Reports cross the boundary as plain dicts/lists via the
// stdlib json module, so the Python surface matches the CLI exactly.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "schubert/diagram.hpp"
#include "schubert/error.hpp"
#include "schubert/json_io.hpp"
#include "schubert/patterns.hpp"
#include "schubert/permutation.hpp"
#include "schubert/regularity.hpp"
#include "schubert/verify.hpp"

namespace py = pybind11;

namespace {

using namespace schubert;

py::object jsonToPy(const Json& json) {
  return py::module_::import("json").attr("loads")(json.dump());
}

TermOrder orderFromName(const std::string& name) {
  return TermOrder::fromName(name);
}

std::vector<Permutation> parsePatterns(const std::vector<std::string>& texts) {
  std::vector<Permutation> patterns;
  patterns.reserve(texts.size());
  for (const std::string& text : texts) {
    patterns.push_back(Permutation::parse(text));
  }
  return patterns;
}

VerificationReport dispatchVerify(const std::string& theorem, int n,
                                  const std::string& order, int edgeCap,
                                  uint64_t seed) {
  const auto sweepN = [&](int fallback) { return n > 0 ? n : fallback; };
  if (theorem == "main") return verifyMain(sweepN(6));
  if (theorem == "vexillary") {
    return verifyVexillary(sweepN(6), 1, orderFromName(order));
  }
  if (theorem == "binomial") return verifyBinomial(sweepN(6));
  if (theorem == "schroder") return verifySchroder(sweepN(7));
  if (theorem == "lemmas") return verifyLemmas(sweepN(6));
  if (theorem == "regularity") return verifyRegularity(edgeCap, sweepN(5));
  if (theorem == "properties") return verifyProperties(seed);
  if (theorem == "knutson-miller") return verifyKnutsonMiller(sweepN(5));
  throw InputError("unknown theorem '" + theorem + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Schubert determinantal ideals: Groebner bases, classification, "
      "regularity, and verification sweeps";

  py::register_exception<Error>(m, "SchubertError", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  m.def(
      "ideal",
      [](const std::string& w, const std::string& order) {
        return jsonToPy(
            idealReport(Permutation::parse(w), orderFromName(order)));
      },
      py::arg("w"), py::arg("order") = "antidiag",
      "Rothe diagram, essential set, Fulton and elusive generators of I_w.");

  m.def(
      "groebner",
      [](const std::string& w, const std::string& order, bool reduced) {
        return jsonToPy(groebnerReport(Permutation::parse(w),
                                       orderFromName(order), reduced));
      },
      py::arg("w"), py::arg("order") = "antidiag", py::arg("reduced") = true,
      "Gao-Yong basis G_w, or the reduced Groebner basis G'_w.");

  m.def(
      "classify",
      [](const std::string& w) {
        return jsonToPy(classifyReport(Permutation::parse(w)));
      },
      py::arg("w"),
      "Vexillary/binomial/dominant flags, essential ranks, parts.");

  m.def(
      "regularity_of_permutation",
      [](const std::string& w, int edgeCap) {
        return jsonToPy(
            regularityReportForPermutation(Permutation::parse(w), edgeCap));
      },
      py::arg("w"), py::arg("edge_cap") = 22,
      "reg(I_w) for binomial w: decomposition, ADS route, Betti oracle.");

  m.def(
      "regularity_of_partition",
      [](const std::string& lambda, int edgeCap) {
        return jsonToPy(
            regularityReportForPartition(Partition::parse(lambda), edgeCap));
      },
      py::arg("partition"), py::arg("edge_cap") = 22,
      "reg(I_{1 x v}) for v dominant of shape lambda, both formulas.");

  m.def(
      "enumerate_avoiders",
      [](int n, const std::vector<std::string>& patterns, bool list) {
        return jsonToPy(enumerateReport(n, parsePatterns(patterns), list));
      },
      py::arg("n"), py::arg("patterns"), py::arg("list_witnesses") = false,
      "Count (or list) the pattern-avoiding permutations in S_n.");

  m.def(
      "verify",
      [](const std::string& theorem, int n, const std::string& order,
         int edgeCap, uint64_t seed) {
        return jsonToPy(verificationReportToJson(
            dispatchVerify(theorem, n, order, edgeCap, seed)));
      },
      py::arg("theorem"), py::arg("n") = -1, py::arg("order") = "antidiag",
      py::arg("edge_cap") = 22, py::arg("seed") = uint64_t{12345},
      "Run one exhaustive verification sweep; see the CLI verify command.");

  m.def(
      "is_vexillary",
      [](const std::string& w) { return isVexillary(Permutation::parse(w)); },
      py::arg("w"), "True iff w avoids 2143.");

  m.def(
      "is_binomial",
      [](const std::string& w) {
        return isBinomialPattern(Permutation::parse(w));
      },
      py::arg("w"), "True iff w avoids 1243 and 2143.");

  m.def(
      "max_essential_rank",
      [](const std::string& w) {
        return maxEssentialRank(Permutation::parse(w));
      },
      py::arg("w"), "Max rank over E(w); -1 when the essential set is empty.");

  m.def(
      "rothe_diagram",
      [](const std::string& w) {
        std::vector<std::pair<int, int>> cells;
        for (const Cell& cell : rotheDiagram(Permutation::parse(w))) {
          cells.emplace_back(cell.row, cell.col);
        }
        return cells;
      },
      py::arg("w"), "The cells of D(w) in row-major order, 1-based.");
}
