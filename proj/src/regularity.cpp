#include "schubert/regularity.hpp"

#include <algorithm>

#include "schubert/error.hpp"

namespace schubert {

CanonicalAntidiagonal canonicalAntidiagonal(const Partition& lambda) {
  CanonicalAntidiagonal result;
  const auto fits = [&lambda](int k) {
    for (int i = 1; i <= k; ++i) {
      if (!lambda.containsCell(k - i + 1, i)) {
        return false;
      }
    }
    return true;
  };
  int k = 0;
  while (fits(k + 1)) {
    ++k;
  }
  result.length = k;
  for (int i = 1; i <= k; ++i) {
    result.cells.push_back({k - i + 1, i});
  }
  return result;
}

Partition thicken(const Partition& lambda) {
  if (lambda.empty()) {
    throw InputError("cannot thicken the empty partition");
  }
  std::vector<int> parts;
  parts.push_back(lambda.part(1) + 1);
  for (int i = 1; i <= lambda.numParts(); ++i) {
    parts.push_back(lambda.part(i) + 1);
  }
  return Partition(std::move(parts));
}

int rrwRegularity(const Partition& lambda) {
  return canonicalAntidiagonal(lambda).length;
}

RecessionWitness recessionWitness(const Partition& lambda) {
  if (lambda.empty()) {
    throw InputError("recession witness needs a nonempty partition");
  }
  const int k = canonicalAntidiagonal(lambda).length;
  std::vector<Edge> primed;
  for (const Cell& c : canonicalAntidiagonal(lambda).cells) {
    primed.push_back({c.row, c.col});
  }
  for (int j = k + 1; j <= lambda.part(1); ++j) {
    primed.push_back({1, j});
  }
  for (int i = k + 1; i <= lambda.numParts(); ++i) {
    primed.push_back({i, 1});
  }

  RecessionWitness witness;
  witness.edges.push_back({1, 1});
  for (const Edge& e : primed) {
    witness.edges.push_back({e.first + 1, e.second + 1});
  }
  std::sort(witness.edges.begin(), witness.edges.end());

  const BipartiteGraph thickGraph = partitionGraph(thicken(lambda));
  witness.components = spanningComponents(thickGraph, witness.edges);
  witness.stronglyConnected =
      recessionStronglyConnected(thickGraph, witness.edges);
  return witness;
}

int adsRegularity(const BipartiteGraph& graph, int edgeCap) {
  return recessionConnectivity(graph, edgeCap) - 1;
}

RegCertificate adsRegularityThickened(const Partition& lambda, int edgeCap) {
  const BipartiteGraph graph = partitionGraph(thicken(lambda));
  if (static_cast<int>(graph.edges.size()) <= edgeCap) {
    return {adsRegularity(graph, edgeCap), RegMode::Exhaustive};
  }
  // Witness route: the explicit subgraph certifies r(B) >= |C|+1; equality
  // is the r(B_thick) = |C_lambda|+1 theorem, so reg = |C_lambda|.
  const RecessionWitness witness = recessionWitness(lambda);
  const int expected = canonicalAntidiagonal(lambda).length + 1;
  if (!witness.stronglyConnected || witness.components != expected) {
    throw Error("recession witness failed validation for partition " +
                lambda.str());
  }
  return {expected - 1, RegMode::Witness};
}

int regularityDecomposition(const Permutation& w) {
  if (!isBinomialPattern(w)) {
    throw InputError("regularity decomposition requires a binomial "
                     "permutation (avoid 1243 and 2143): " + w.str());
  }
  int total = 0;
  for (const Permutation& part : parts(w)) {
    // Strip the 1^r prefix of u = 1^r x v; r = 0 marks the dominant part.
    int r = 0;
    while (r < part.size() && part(r + 1) == r + 1) {
      ++r;
    }
    if (r == 0) {
      continue;  // dominant part, regularity 0
    }
    if (r > 1) {
      throw Error("binomial part has rank above 1: " + part.str());
    }
    std::vector<int> tail;
    for (int j = r + 1; j <= part.size(); ++j) {
      tail.push_back(part(j) - r);
    }
    const Partition shape = shapeOfDominant(Permutation(std::move(tail)));
    total += rrwRegularity(shape);
  }
  return total;
}

}  // namespace schubert
