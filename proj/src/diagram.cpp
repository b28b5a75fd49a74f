#include "schubert/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "schubert/error.hpp"
#include "schubert/patterns.hpp"

namespace schubert {

RankTable::RankTable(const Permutation& w) : n_(w.size()) {
  values_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), 0);
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      int above = (i > 1) ? (*this)(i - 1, j) : 0;
      values_[static_cast<size_t>(i - 1) * static_cast<size_t>(n_) +
              static_cast<size_t>(j - 1)] = above + ((w(i) <= j) ? 1 : 0);
    }
  }
}

int RankTable::operator()(int i, int j) const {
  if (i == 0 || j == 0) {
    return 0;
  }
  if (i < 0 || j < 0 || i > n_ || j > n_) {
    throw InputError("rank table index out of range");
  }
  return values_[static_cast<size_t>(i - 1) * static_cast<size_t>(n_) +
                 static_cast<size_t>(j - 1)];
}

namespace {

bool inDiagram(const Permutation& w, int i, int j) {
  return i >= 1 && j >= 1 && i <= w.size() && j <= w.size() && j < w(i) &&
         i < w.inverseAt(j);
}

}  // namespace

std::vector<Cell> rotheDiagram(const Permutation& w) {
  std::vector<Cell> cells;
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = 1; j < w(i); ++j) {
      if (i < w.inverseAt(j)) {
        cells.push_back({i, j});
      }
    }
  }
  return cells;
}

std::vector<EssentialBox> essentialSet(const Permutation& w) {
  RankTable r(w);
  std::vector<EssentialBox> boxes;
  for (const Cell& c : rotheDiagram(w)) {
    if (!inDiagram(w, c.row + 1, c.col) && !inDiagram(w, c.row, c.col + 1)) {
      boxes.push_back({c, r(c.row, c.col)});
    }
  }
  return boxes;
}

int maxEssentialRank(const Permutation& w) {
  int best = -1;
  for (const EssentialBox& b : essentialSet(w)) {
    best = std::max(best, b.rank);
  }
  return best;
}

bool isDominant(const Permutation& w) {
  return maxEssentialRank(w) <= 0;
}

Partition shapeOfDominant(const Permutation& w) {
  if (!isDominant(w)) {
    throw InputError("permutation " + w.str() + " is not dominant");
  }
  // D(w) is the Young diagram of the Lehmer code, which is a partition here.
  std::vector<int> rowLengths;
  for (int i = 1; i <= w.size(); ++i) {
    int len = 0;
    for (int j = 1; j <= w.size(); ++j) {
      if (inDiagram(w, i, j)) {
        ++len;
      }
    }
    if (len > 0) {
      rowLengths.push_back(len);
    }
  }
  return Partition(std::move(rowLengths));
}

bool isVexillary(const Permutation& w) {
  return !containsPattern(w, Permutation({2, 1, 4, 3}));
}

bool isVexillaryByEssentialChain(const Permutation& w) {
  // A southwest-ordered chain exists iff every pair of essential boxes is
  // comparable under "weakly southwest of": no pair is strictly
  // northwest/southeast of each other.
  std::vector<EssentialBox> boxes = essentialSet(w);
  for (size_t a = 0; a < boxes.size(); ++a) {
    for (size_t b = a + 1; b < boxes.size(); ++b) {
      const Cell& p = boxes[a].cell;
      const Cell& q = boxes[b].cell;
      const int dr = p.row - q.row;
      const int dc = p.col - q.col;
      if ((dr > 0 && dc > 0) || (dr < 0 && dc < 0)) {
        return false;
      }
    }
  }
  return true;
}

bool isBinomialPattern(const Permutation& w) {
  return avoidsAll(w, binomialForbiddenPatterns());
}

std::vector<DiagramComponent> diagramComponents(const Permutation& w) {
  const std::vector<Cell> cells = rotheDiagram(w);
  const std::set<Cell> cellSet(cells.begin(), cells.end());
  RankTable rank(w);

  std::set<Cell> visited;
  std::vector<DiagramComponent> components;
  for (const Cell& start : cells) {
    if (visited.count(start) > 0) {
      continue;
    }
    DiagramComponent comp;
    std::vector<Cell> stack{start};
    visited.insert(start);
    while (!stack.empty()) {
      Cell c = stack.back();
      stack.pop_back();
      comp.cells.push_back(c);
      const Cell neighbors[4] = {{c.row - 1, c.col},
                                 {c.row + 1, c.col},
                                 {c.row, c.col - 1},
                                 {c.row, c.col + 1}};
      for (const Cell& nb : neighbors) {
        if (cellSet.count(nb) > 0 && visited.insert(nb).second) {
          stack.push_back(nb);
        }
      }
    }
    std::sort(comp.cells.begin(), comp.cells.end());

    comp.rank = rank(comp.cells.front().row, comp.cells.front().col);
    for (const Cell& c : comp.cells) {
      if (rank(c.row, c.col) != comp.rank) {
        comp.rank = -1;
        break;
      }
    }

    // Translate to the origin and test for a Young-diagram shape.
    int minRow = comp.cells.front().row;
    int minCol = comp.cells.front().col;
    for (const Cell& c : comp.cells) {
      minRow = std::min(minRow, c.row);
      minCol = std::min(minCol, c.col);
    }
    std::map<int, std::set<int>> rows;
    for (const Cell& c : comp.cells) {
      rows[c.row - minRow + 1].insert(c.col - minCol + 1);
    }
    bool young = true;
    std::vector<int> rowLengths;
    int expectedRow = 1;
    int prevLen = 0;
    for (const auto& [rowIdx, cols] : rows) {
      const int len = static_cast<int>(cols.size());
      const bool contiguous = (*cols.begin() == 1 && *cols.rbegin() == len);
      if (rowIdx != expectedRow || !contiguous ||
          (expectedRow > 1 && len > prevLen)) {
        young = false;
        break;
      }
      rowLengths.push_back(len);
      prevLen = len;
      ++expectedRow;
    }
    if (young) {
      comp.shape = Partition(std::move(rowLengths));
    }
    components.push_back(std::move(comp));
  }

  std::sort(components.begin(), components.end(),
            [](const DiagramComponent& a, const DiagramComponent& b) {
              return a.cells.front() < b.cells.front();
            });
  return components;
}

Permutation dominantOfShape(const Partition& lambda) {
  if (lambda.empty()) {
    return Permutation::identity(1);
  }
  // Smallest n admitting Lehmer code (lambda_1, ..., lambda_m, 0, ...):
  // each code entry must satisfy c_i <= n - i.
  int n = 0;
  for (int i = 1; i <= lambda.numParts(); ++i) {
    n = std::max(n, lambda.part(i) + i);
  }
  std::vector<int> pool(static_cast<size_t>(n));
  for (int v = 1; v <= n; ++v) {
    pool[static_cast<size_t>(v) - 1] = v;
  }
  std::vector<int> word;
  word.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int code = lambda.part(i);
    word.push_back(pool[static_cast<size_t>(code)]);
    pool.erase(pool.begin() + code);
  }
  return Permutation(std::move(word));
}

std::vector<Permutation> parts(const Permutation& w) {
  std::vector<Permutation> out;
  for (const DiagramComponent& comp : diagramComponents(w)) {
    if (comp.rank < 0) {
      throw InputError("diagram component of " + w.str() +
                       " has non-constant rank; parts are undefined");
    }
    if (!comp.shape.has_value()) {
      throw InputError("diagram component of " + w.str() +
                       " is not a Young-diagram shape; parts are undefined");
    }
    const Permutation v = dominantOfShape(*comp.shape);
    const int r = comp.rank;
    std::vector<int> word;
    word.reserve(static_cast<size_t>(r + v.size()));
    for (int j = 1; j <= r; ++j) {
      word.push_back(j);
    }
    for (int j = 1; j <= v.size(); ++j) {
      word.push_back(v(j) + r);
    }
    out.emplace_back(std::move(word));
  }
  return out;
}

}  // namespace schubert
