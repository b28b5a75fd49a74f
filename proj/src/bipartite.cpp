#include "schubert/bipartite.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "schubert/error.hpp"

namespace schubert {

BipartiteGraph BipartiteGraph::make(int rowCount, int colCount,
                                    std::vector<Edge> edges) {
  if (rowCount < 1 || colCount < 1) {
    throw InputError("bipartite graph needs positive vertex counts");
  }
  for (const Edge& e : edges) {
    if (e.first < 1 || e.first > rowCount || e.second < 1 ||
        e.second > colCount) {
      throw InputError("bipartite edge out of range");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return BipartiteGraph{rowCount, colCount, std::move(edges)};
}

BipartiteGraph partitionGraph(const Partition& lambda) {
  if (lambda.empty()) {
    throw InputError("partition graph of the empty partition is undefined");
  }
  std::vector<Edge> edges;
  for (int i = 1; i <= lambda.numParts(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      edges.push_back({i, j});
    }
  }
  return BipartiteGraph::make(lambda.numParts(), lambda.width(),
                              std::move(edges));
}

int maxMatching(const BipartiteGraph& graph) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(graph.rowCount));
  for (const Edge& e : graph.edges) {
    adj[static_cast<size_t>(e.first) - 1].push_back(e.second - 1);
  }
  std::vector<int> matchOfCol(static_cast<size_t>(graph.colCount), -1);
  std::vector<bool> seen;

  const std::function<bool(int)> tryRow = [&](int row) {
    for (int col : adj[static_cast<size_t>(row)]) {
      if (seen[static_cast<size_t>(col)]) {
        continue;
      }
      seen[static_cast<size_t>(col)] = true;
      if (matchOfCol[static_cast<size_t>(col)] < 0 ||
          tryRow(matchOfCol[static_cast<size_t>(col)])) {
        matchOfCol[static_cast<size_t>(col)] = row;
        return true;
      }
    }
    return false;
  };

  int size = 0;
  for (int row = 0; row < graph.rowCount; ++row) {
    seen.assign(static_cast<size_t>(graph.colCount), false);
    if (tryRow(row)) {
      ++size;
    }
  }
  return size;
}

namespace {

/// Row vertex i -> id i-1; column vertex j -> id m+j-1.
int rowId(int i) { return i - 1; }
int colId(const BipartiteGraph& g, int j) { return g.rowCount + j - 1; }

}  // namespace

bool coversAllVertices(const BipartiteGraph& graph,
                       const std::vector<Edge>& s) {
  std::vector<bool> covered(
      static_cast<size_t>(graph.rowCount + graph.colCount), false);
  for (const Edge& e : s) {
    covered[static_cast<size_t>(rowId(e.first))] = true;
    covered[static_cast<size_t>(colId(graph, e.second))] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

int spanningComponents(const BipartiteGraph& graph,
                       const std::vector<Edge>& s) {
  const int total = graph.rowCount + graph.colCount;
  std::vector<int> parent(static_cast<size_t>(total));
  for (int v = 0; v < total; ++v) {
    parent[static_cast<size_t>(v)] = v;
  }
  const std::function<int(int)> find = [&](int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  };
  int components = total;
  for (const Edge& e : s) {
    const int a = find(rowId(e.first));
    const int b = find(colId(graph, e.second));
    if (a != b) {
      parent[static_cast<size_t>(a)] = b;
      --components;
    }
  }
  return components;
}

bool recessionStronglyConnected(const BipartiteGraph& graph,
                                const std::vector<Edge>& s) {
  const int total = graph.rowCount + graph.colCount;
  if (total == 0) {
    return true;
  }
  std::vector<std::vector<int>> out(static_cast<size_t>(total));
  std::vector<std::vector<int>> in(static_cast<size_t>(total));
  std::vector<bool> inS;
  {
    std::vector<Edge> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    for (const Edge& e : graph.edges) {
      const int u = rowId(e.first);
      const int v = colId(graph, e.second);
      const bool bidirectional =
          std::binary_search(sorted.begin(), sorted.end(), e);
      out[static_cast<size_t>(u)].push_back(v);
      in[static_cast<size_t>(v)].push_back(u);
      if (bidirectional) {
        out[static_cast<size_t>(v)].push_back(u);
        in[static_cast<size_t>(u)].push_back(v);
      }
    }
  }
  const auto reachesAll = [total](const std::vector<std::vector<int>>& adj) {
    std::vector<bool> seen(static_cast<size_t>(total), false);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = true;
    int count = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int u : adj[static_cast<size_t>(v)]) {
        if (!seen[static_cast<size_t>(u)]) {
          seen[static_cast<size_t>(u)] = true;
          ++count;
          queue.push(u);
        }
      }
    }
    return count == total;
  };
  return reachesAll(out) && reachesAll(in);
}

namespace {

/// Union-find with an undo log, no path compression (so unions are exactly
/// reversible).
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int size)
      : parent_(static_cast<size_t>(size)), rank_(static_cast<size_t>(size), 0) {
    for (int v = 0; v < size; ++v) {
      parent_[static_cast<size_t>(v)] = v;
    }
  }

  int find(int v) const {
    while (parent_[static_cast<size_t>(v)] != v) {
      v = parent_[static_cast<size_t>(v)];
    }
    return v;
  }

  /// Returns true when two distinct sets were merged.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      log_.push_back({-1, -1, false});
      return false;
    }
    if (rank_[static_cast<size_t>(a)] < rank_[static_cast<size_t>(b)]) {
      std::swap(a, b);
    }
    const bool bumped =
        rank_[static_cast<size_t>(a)] == rank_[static_cast<size_t>(b)];
    parent_[static_cast<size_t>(b)] = a;
    if (bumped) {
      ++rank_[static_cast<size_t>(a)];
    }
    log_.push_back({b, a, bumped});
    return true;
  }

  void undo() {
    const Entry e = log_.back();
    log_.pop_back();
    if (e.child >= 0) {
      parent_[static_cast<size_t>(e.child)] = e.child;
      if (e.bumped) {
        --rank_[static_cast<size_t>(e.root)];
      }
    }
  }

 private:
  struct Entry {
    int child;
    int root;
    bool bumped;
  };
  std::vector<int> parent_;
  std::vector<int> rank_;
  std::vector<Entry> log_;
};

struct RecessionSearch {
  const BipartiteGraph& graph;
  const std::vector<Edge>& edges;
  int matchingBound;
  RollbackUnionFind uf;
  std::vector<int> degS;        // chosen-edge degree per vertex id
  std::vector<int> potential;   // degS + undecided incident edges
  std::vector<Edge> chosen;
  int uncoveredRows;
  int uncoveredCols;
  int compCount = 0;
  int best = 0;

  RecessionSearch(const BipartiteGraph& g, const std::vector<Edge>& e)
      : graph(g),
        edges(e),
        matchingBound(maxMatching(g)),
        uf(g.rowCount + g.colCount),
        degS(static_cast<size_t>(g.rowCount + g.colCount), 0),
        potential(static_cast<size_t>(g.rowCount + g.colCount), 0),
        uncoveredRows(g.rowCount),
        uncoveredCols(g.colCount) {
    for (const Edge& edge : edges) {
      ++potential[static_cast<size_t>(rowId(edge.first))];
      ++potential[static_cast<size_t>(colId(g, edge.second))];
    }
  }

  void run() { explore(0); }

  void explore(size_t idx) {
    if (best == matchingBound) {
      return;  // the Lemma bound r(B) <= m(B) cannot be beaten
    }
    if (idx == edges.size()) {
      if (uncoveredRows == 0 && uncoveredCols == 0 && compCount > best &&
          recessionStronglyConnected(graph, chosen)) {
        best = compCount;
      }
      return;
    }
    // Each additional component must claim an uncovered row and column.
    const int reachable =
        compCount + std::min(uncoveredRows, uncoveredCols);
    if (reachable <= best) {
      return;
    }

    const Edge edge = edges[idx];
    const int u = rowId(edge.first);
    const int v = colId(graph, edge.second);

    // Branch 1: include the edge in S.
    {
      const int savedComp = compCount;
      const int savedRows = uncoveredRows;
      const int savedCols = uncoveredCols;
      const bool newU = degS[static_cast<size_t>(u)] == 0;
      const bool newV = degS[static_cast<size_t>(v)] == 0;
      if (newU && newV) {
        ++compCount;
      } else if (!newU && !newV) {
        if (uf.find(u) != uf.find(v)) {
          --compCount;
        }
      }
      uf.unite(u, v);
      if (newU) {
        --uncoveredRows;
      }
      if (newV) {
        --uncoveredCols;
      }
      ++degS[static_cast<size_t>(u)];
      ++degS[static_cast<size_t>(v)];
      chosen.push_back(edge);

      explore(idx + 1);

      chosen.pop_back();
      --degS[static_cast<size_t>(u)];
      --degS[static_cast<size_t>(v)];
      uf.undo();
      compCount = savedComp;
      uncoveredRows = savedRows;
      uncoveredCols = savedCols;
    }

    // Branch 2: exclude it; infeasible when this strands a vertex.
    --potential[static_cast<size_t>(u)];
    --potential[static_cast<size_t>(v)];
    const bool feasible =
        (degS[static_cast<size_t>(u)] > 0 || potential[static_cast<size_t>(u)] > 0) &&
        (degS[static_cast<size_t>(v)] > 0 || potential[static_cast<size_t>(v)] > 0);
    if (feasible) {
      explore(idx + 1);
    }
    ++potential[static_cast<size_t>(u)];
    ++potential[static_cast<size_t>(v)];
  }
};

}  // namespace

int recessionConnectivity(const BipartiteGraph& graph, int edgeCap) {
  if (static_cast<int>(graph.edges.size()) > edgeCap) {
    throw BudgetError(
        "graph has " + std::to_string(graph.edges.size()) +
        " edges, above the exhaustive cap " + std::to_string(edgeCap) +
        "; use the witness route");
  }
  RecessionSearch search(graph, graph.edges);
  search.run();
  if (search.best == 0) {
    throw InputError("no subgraph S makes R(S;B) strongly connected "
                     "(graph disconnected?)");
  }
  return search.best;
}

}  // namespace schubert
