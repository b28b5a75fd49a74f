#ifndef SCHUBERT_BIPARTITE_HPP
#define SCHUBERT_BIPARTITE_HPP

#include <utility>
#include <vector>

#include "schubert/partition.hpp"

namespace schubert {

/// An edge (row vertex i, column vertex j), 1-based.
using Edge = std::pair<int, int>;

/// A bipartite graph on row vertices [m] and column vertices [n]. The vertex
/// counts are part of the data (isolated vertices are allowed).
struct BipartiteGraph {
  int rowCount = 0;
  int colCount = 0;
  std::vector<Edge> edges;  // sorted row-major, no duplicates

  /// Validates bounds, sorts and deduplicates.
  static BipartiteGraph make(int rowCount, int colCount,
                             std::vector<Edge> edges);
};

/// B_lambda: one edge per cell of the partition, on rows(lambda) x
/// width(lambda) vertices. Throws InputError for the empty partition.
BipartiteGraph partitionGraph(const Partition& lambda);

/// Maximum matching size (augmenting-path search).
int maxMatching(const BipartiteGraph& graph);

/// True iff every row and column vertex of the graph is covered by S.
bool coversAllVertices(const BipartiteGraph& graph,
                       const std::vector<Edge>& s);

/// Number of connected components of the spanning subgraph
/// ([m] ⊔ [n], S): isolated vertices count as components.
int spanningComponents(const BipartiteGraph& graph, const std::vector<Edge>& s);

/// Strong connectivity of the recession graph R(S; B): edges of S are
/// bidirectional, all other edges are directed row -> column.
bool recessionStronglyConnected(const BipartiteGraph& graph,
                                const std::vector<Edge>& s);

/// r(B): the maximum component count of a subgraph S ⊆ B with R(S; B)
/// strongly connected, by exhaustive pruned search. Throws BudgetError when
/// |edges| > edgeCap, and InputError when no S works (disconnected B).
int recessionConnectivity(const BipartiteGraph& graph, int edgeCap = 22);

}  // namespace schubert

#endif
