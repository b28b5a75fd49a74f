#include "schubert/json_io.hpp"

#include <utility>
#include <vector>

#include "schubert/error.hpp"
#include "schubert/minor.hpp"
#include "schubert/numeric.hpp"
#include "schubert/patterns.hpp"
#include "schubert/regularity.hpp"
#include "schubert/schubert_ideal.hpp"

namespace schubert {

namespace {

Json cellPair(const Cell& cell) { return Json::array({cell.row, cell.col}); }

Json essentialBoxJson(const EssentialBox& box) {
  Json entry;
  entry["i"] = box.cell.row;
  entry["j"] = box.cell.col;
  entry["r"] = box.rank;
  return entry;
}

Json minorSpecJson(const MinorSpec& spec) {
  Json entry;
  entry["rows"] = spec.rows;
  entry["cols"] = spec.cols;
  entry["size"] = spec.size();
  return entry;
}

Json basisMemberJson(const Polynomial& member) {
  Json entry;
  entry["degree"] = member.totalDegree();
  entry["num_terms"] = member.numTerms();
  entry["lead"] = member.leadMonomial().str();
  entry["poly"] = polyToJson(member);
  entry["text"] = member.str();
  return entry;
}

Json reportHead(const char* command) {
  Json report;
  report["schema"] = kSchemaVersion;
  report["command"] = command;
  return report;
}

/// Lead monomials of the reduced basis, the squarefree generators of in(I_w).
std::vector<Monomial> initialIdealGenerators(const Permutation& w) {
  std::vector<Monomial> leads;
  for (const Polynomial& member : reducedSchubertBasis(w, TermOrder()).members) {
    leads.push_back(member.leadMonomial());
  }
  return leads;
}

}  // namespace

Json polyToJson(const Polynomial& poly) {
  Json terms = Json::array();
  for (const Term& term : poly.terms()) {
    Json entry;
    entry["coeff"] = ratToString(term.coeff);
    Json exps = Json::array();
    for (const auto& [var, exp] : term.monomial.factors()) {
      exps.push_back(Json::array({var.row, var.col, exp}));
    }
    entry["exps"] = std::move(exps);
    terms.push_back(std::move(entry));
  }
  return terms;
}

Polynomial polyFromJson(const Json& json, const TermOrder& order) {
  if (!json.is_array()) {
    throw InputError("polynomial JSON must be an array of terms");
  }
  std::vector<Term> terms;
  for (const Json& entry : json) {
    if (!entry.is_object() || !entry.contains("coeff") ||
        !entry.contains("exps") || !entry["coeff"].is_string() ||
        !entry["exps"].is_array()) {
      throw InputError(
          "polynomial term must be {\"coeff\": string, \"exps\": array}");
    }
    std::vector<Monomial::Factor> factors;
    for (const Json& triple : entry["exps"]) {
      if (!triple.is_array() || triple.size() != 3 ||
          !triple[0].is_number_integer() || !triple[1].is_number_integer() ||
          !triple[2].is_number_integer()) {
        throw InputError("exponent entry must be an [i, j, e] integer triple");
      }
      factors.push_back({{triple[0].get<int>(), triple[1].get<int>()},
                         triple[2].get<int>()});
    }
    terms.push_back({Monomial::fromFactors(std::move(factors)),
                     ratFromString(entry["coeff"].get<std::string>())});
  }
  return Polynomial(std::move(terms), order);
}

Json bettiToJson(const BettiTable& table) {
  Json entries = Json::array();
  for (const auto& [key, value] : table.entries()) {
    Json entry;
    entry["i"] = key.first;
    entry["j"] = key.second;
    entry["beta"] = value;
    entries.push_back(std::move(entry));
  }
  return entries;
}

Json idealReport(const Permutation& w, const TermOrder& order) {
  Json report = reportHead("ideal");
  report["w"] = w.compactStr();
  report["n"] = w.size();
  report["order"] = order.name();

  Json diagram = Json::array();
  for (const Cell& cell : rotheDiagram(w)) {
    diagram.push_back(cellPair(cell));
  }
  report["diagram"] = std::move(diagram);

  Json essential = Json::array();
  for (const EssentialBox& box : essentialSet(w)) {
    essential.push_back(essentialBoxJson(box));
  }
  report["essential"] = std::move(essential);

  const auto fulton = fultonGenerators(w);
  Json fultonJson = Json::array();
  for (const FultonGenerator& gen : fulton) {
    Json entry = minorSpecJson(gen.minor);
    entry["box"] = essentialBoxJson(gen.box);
    fultonJson.push_back(std::move(entry));
  }
  report["fulton_count"] = fulton.size();
  report["fulton"] = std::move(fultonJson);

  const auto elusive = elusiveMinors(w);
  Json elusiveJson = Json::array();
  for (const MinorSpec& spec : elusive) {
    elusiveJson.push_back(minorSpecJson(spec));
  }
  report["elusive_count"] = elusive.size();
  report["elusive"] = std::move(elusiveJson);
  if (fulton.empty()) {
    report["note"] = "I_w = (0); the Rothe diagram is empty";
  }
  return report;
}

Json groebnerReport(const Permutation& w, const TermOrder& order,
                    bool reduced) {
  Json report = reportHead("groebner");
  report["w"] = w.compactStr();
  report["n"] = w.size();
  report["order"] = order.name();
  report["reduced"] = reduced;

  const std::vector<Polynomial> members =
      reduced ? reducedSchubertBasis(w, order).members
              : gaoYongBasis(w, order);
  report["count"] = members.size();
  Json basis = Json::array();
  for (const Polynomial& member : members) {
    basis.push_back(basisMemberJson(member));
  }
  report["basis"] = std::move(basis);
  return report;
}

Json classifyReport(const Permutation& w) {
  Json report = reportHead("classify");
  report["w"] = w.compactStr();
  report["n"] = w.size();
  report["vexillary"] = isVexillary(w);
  report["binomial"] = isBinomialPattern(w);
  report["gao_yong_reduced"] = gaoYongIsReduced(w, TermOrder());
  report["max_essential_rank"] = maxEssentialRank(w);
  report["dominant"] = isDominant(w);

  // The decomposition into parts exists whenever every diagram component is
  // a translated Young diagram of constant rank; binomial w always qualify.
  try {
    Json partsJson = Json::array();
    for (const Permutation& part : parts(w)) {
      partsJson.push_back(part.compactStr());
    }
    report["parts"] = std::move(partsJson);
  } catch (const InputError&) {
    report["parts"] = nullptr;
  }
  return report;
}

Json regularityReportForPermutation(const Permutation& w, int edgeCap) {
  if (!isBinomialPattern(w)) {
    throw InputError("regularity routes require a binomial permutation ("
                     "avoiding 1243 and 2143); w = " + w.compactStr());
  }
  Json report = reportHead("regularity");
  report["w"] = w.compactStr();
  report["n"] = w.size();
  const int decomposition = regularityDecomposition(w);
  report["decomposition"] = decomposition;

  // ADS route: sum of recession-connectivity values over the thickened
  // shapes of the rank-1 components (rank-0 components contribute 0).
  int adsTotal = 0;
  bool witnessMode = false;
  for (const DiagramComponent& component : diagramComponents(w)) {
    if (component.rank == 0) {
      continue;
    }
    const RegCertificate cert =
        adsRegularityThickened(component.shape.value(), edgeCap);
    adsTotal += cert.value;
    witnessMode = witnessMode || cert.mode == RegMode::Witness;
  }
  report["ads"] = adsTotal;
  report["ads_mode"] = witnessMode ? "witness" : "exhaustive";

  // Independent oracle on the initial ideal; skipped when the generator
  // count exceeds the lattice budget.
  bool agree = decomposition == adsTotal;
  try {
    const BettiTable table = bettiOracle(initialIdealGenerators(w));
    report["oracle"] = table.regularity();
    agree = agree && table.regularity() == adsTotal;
  } catch (const BudgetError&) {
    report["oracle"] = nullptr;
  }
  report["agree"] = agree;
  return report;
}

Json regularityReportForPartition(const Partition& lambda, int edgeCap) {
  Json report = reportHead("regularity");
  report["partition"] = lambda.str();

  const CanonicalAntidiagonal canonical = canonicalAntidiagonal(lambda);
  Json cells = Json::array();
  for (const Cell& cell : canonical.cells) {
    cells.push_back(cellPair(cell));
  }
  Json canonicalJson;
  canonicalJson["length"] = canonical.length;
  canonicalJson["cells"] = std::move(cells);
  report["canonical_antidiagonal"] = std::move(canonicalJson);
  report["rrw"] = rrwRegularity(lambda);

  if (lambda.empty()) {
    report["ads"] = 0;
    report["ads_mode"] = "exhaustive";
    report["agree"] = true;
    return report;
  }
  const RegCertificate cert = adsRegularityThickened(lambda, edgeCap);
  report["ads"] = cert.value;
  report["ads_mode"] = cert.mode == RegMode::Witness ? "witness" : "exhaustive";
  if (cert.mode == RegMode::Witness) {
    report["ads_note"] =
        "lower-bound-certified by the explicit witness; equality by the "
        "recession-connectivity theorem";
  }

  const RecessionWitness witness = recessionWitness(lambda);
  Json witnessJson;
  Json edges = Json::array();
  for (const Edge& edge : witness.edges) {
    edges.push_back(Json::array({edge.first, edge.second}));
  }
  witnessJson["edges"] = std::move(edges);
  witnessJson["components"] = witness.components;
  witnessJson["strongly_connected"] = witness.stronglyConnected;
  report["witness"] = std::move(witnessJson);

  report["agree"] = cert.value == rrwRegularity(lambda);
  return report;
}

Json enumerateReport(int n, const std::vector<Permutation>& patterns,
                     bool listWitnesses) {
  Json report = reportHead("enumerate");
  report["n"] = n;
  Json patternsJson = Json::array();
  for (const Permutation& pattern : patterns) {
    patternsJson.push_back(pattern.compactStr());
  }
  report["patterns"] = std::move(patternsJson);

  if (listWitnesses) {
    const auto avoiders = enumerateAvoiders(n, patterns);
    report["count"] = std::to_string(avoiders.size());
    Json witnesses = Json::array();
    for (const Permutation& w : avoiders) {
      witnesses.push_back(w.compactStr());
    }
    report["witnesses"] = std::move(witnesses);
  } else {
    report["count"] = countAvoiders(n, patterns).get_str();
  }
  return report;
}

Json verificationReportToJson(const VerificationReport& report) {
  Json json = reportHead("verify");
  json["theorem"] = report.theorem;
  json["n"] = report.n;
  json["checked"] = report.checked;
  json["pass"] = report.pass();
  json["counterexamples"] = report.counterexamples;
  json["wall_ms"] = report.wallMs;
  return json;
}

}  // namespace schubert
