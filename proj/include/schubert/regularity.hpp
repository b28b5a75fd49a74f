#ifndef SCHUBERT_REGULARITY_HPP
#define SCHUBERT_REGULARITY_HPP

#include <string>
#include <vector>

#include "schubert/bipartite.hpp"
#include "schubert/diagram.hpp"
#include "schubert/partition.hpp"
#include "schubert/permutation.hpp"

namespace schubert {

/// The canonical antidiagonal C_lambda: the cells (k-i+1, i), 1 <= i <= k,
/// for the largest k such that all of them lie in lambda.
struct CanonicalAntidiagonal {
  int length = 0;
  std::vector<Cell> cells;
};

CanonicalAntidiagonal canonicalAntidiagonal(const Partition& lambda);

/// The thickening: (lambda_1 + 1, lambda_1 + 1, lambda_2 + 1, ...).
Partition thicken(const Partition& lambda);

/// reg(I_{1 x v}) for v dominant of shape lambda: |C_lambda|.
int rrwRegularity(const Partition& lambda);

/// The explicit strongly connected witness from the r(B_thick) >= |C|+1
/// construction: S = {(i+1, j+1) : (i, j) in C_lambda or a frame cell
/// (1, j) / (i, 1) with i, j > |C_lambda|} together with (1, 1).
struct RecessionWitness {
  std::vector<Edge> edges;
  int components = 0;
  bool stronglyConnected = false;
};

RecessionWitness recessionWitness(const Partition& lambda);

/// How an ADS regularity value was certified.
enum class RegMode { Exhaustive, Witness };

struct RegCertificate {
  int value = 0;
  RegMode mode = RegMode::Exhaustive;
};

/// reg of the toric edge ideal of a connected bipartite graph:
/// recessionConnectivity(B) - 1, always exhaustive. Throws BudgetError above
/// the cap.
int adsRegularity(const BipartiteGraph& graph, int edgeCap = 22);

/// reg(I_{1 x v}) via the thickened partition graph: exhaustive when B_thick
/// fits the cap, otherwise certified by the explicit witness (lower bound)
/// together with the r(B_thick) = |C_lambda|+1 equality.
RegCertificate adsRegularityThickened(const Partition& lambda,
                                      int edgeCap = 22);

/// reg(I_w) for binomial w: the sum of rrwRegularity over the shapes of the
/// non-dominant parts of the decomposition. Throws InputError for
/// non-binomial w.
int regularityDecomposition(const Permutation& w);

}  // namespace schubert

#endif
