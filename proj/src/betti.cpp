#include "schubert/betti.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>

#include "schubert/error.hpp"
#include "schubert/numeric.hpp"

namespace schubert {

void BettiTable::add(int i, int j, long long value) {
  if (value == 0) {
    return;
  }
  values_[{i, j}] += value;
  if (values_[{i, j}] == 0) {
    values_.erase({i, j});
  }
}

long long BettiTable::at(int i, int j) const {
  auto found = values_.find({i, j});
  return found == values_.end() ? 0 : found->second;
}

std::vector<std::pair<std::pair<int, int>, long long>> BettiTable::entries()
    const {
  return {values_.begin(), values_.end()};
}

int BettiTable::regularity() const {
  int reg = 0;
  for (const auto& [key, value] : values_) {
    reg = std::max(reg, key.second - key.first);
  }
  return reg;
}

namespace {

constexpr size_t kMaxGenerators = 16;
constexpr size_t kMaxStrandFaces = 4096;

/// Rank of a sparse matrix over Q by incremental row reduction with exact
/// rationals. Rows are (column index, value) lists sorted by column. Each
/// incoming row is reduced against the stored pivot rows (one per leading
/// column, normalized to a unit leading coefficient); a nonzero remainder
/// becomes a new pivot row.
int rationalRank(std::vector<std::vector<std::pair<int, Rat>>> rows) {
  std::map<int, std::vector<std::pair<int, Rat>>> pivots;
  for (auto& row : rows) {
    while (!row.empty()) {
      const auto found = pivots.find(row.front().first);
      if (found == pivots.end()) {
        break;
      }
      // row -= leading coefficient * pivot row, merged sparsely; the
      // leading terms cancel exactly because pivot rows are monic.
      const Rat factor = row.front().second;
      const auto& pivotRow = found->second;
      std::vector<std::pair<int, Rat>> merged;
      merged.reserve(row.size() + pivotRow.size());
      size_t a = 0;
      size_t b = 0;
      while (a < row.size() || b < pivotRow.size()) {
        if (b >= pivotRow.size() ||
            (a < row.size() && row[a].first < pivotRow[b].first)) {
          merged.push_back(row[a]);
          ++a;
        } else if (a >= row.size() || pivotRow[b].first < row[a].first) {
          merged.push_back({pivotRow[b].first, -factor * pivotRow[b].second});
          ++b;
        } else {
          const Rat value = row[a].second - factor * pivotRow[b].second;
          if (value != 0) {
            merged.push_back({row[a].first, value});
          }
          ++a;
          ++b;
        }
      }
      row = std::move(merged);
    }
    if (row.empty()) {
      continue;
    }
    const Rat lead = row.front().second;
    for (auto& [c, v] : row) {
      (void)c;
      v /= lead;
    }
    pivots[row.front().first] = std::move(row);
  }
  return static_cast<int>(pivots.size());
}

}  // namespace

BettiTable bettiOracle(const std::vector<Monomial>& gens) {
  if (gens.size() > kMaxGenerators) {
    throw BudgetError("betti oracle supports at most " +
                      std::to_string(kMaxGenerators) + " generators");
  }
  for (const Monomial& g : gens) {
    if (g.isOne()) {
      throw InputError("betti oracle generators must be nonunit");
    }
    if (!g.isSquarefree()) {
      throw InputError("betti oracle requires squarefree generators");
    }
  }
  for (size_t a = 0; a < gens.size(); ++a) {
    for (size_t b = 0; b < gens.size(); ++b) {
      if (a != b && gens[a].isDivisibleBy(gens[b])) {
        throw InputError("betti oracle requires minimal generators");
      }
    }
  }

  // lcm of every generator subset, each obtained from the subset with the
  // lowest bit dropped; lcms[0] is the empty lcm 1.
  const int g = static_cast<int>(gens.size());
  const uint32_t subsetCount = uint32_t{1} << g;
  std::vector<Monomial> lcms(subsetCount);
  for (uint32_t mask = 1; mask < subsetCount; ++mask) {
    const int lowest = std::countr_zero(mask);
    lcms[mask] =
        Monomial::lcm(lcms[mask & (mask - 1)], gens[static_cast<size_t>(lowest)]);
  }

  // Strand decomposition of the Taylor complex over Q: the basis element of
  // a generator subset B sits in multidegree lcm(B), and the differential
  // keeps exactly the faces B \ {b} whose lcm is unchanged. Homology at
  // level i of the strand of a lattice element m has dimension
  // beta_{i, deg m} (equivalently dim H~_{i-2} of the open lcm-lattice
  // interval (1, m)).
  std::map<Monomial, std::vector<uint32_t>> strands;
  for (uint32_t mask = 0; mask < subsetCount; ++mask) {
    strands[lcms[mask]].push_back(mask);
  }

  BettiTable table;
  for (const auto& [m, members] : strands) {
    // One round of discrete Morse reduction. A pivot generator dividing m
    // pairs every face without it against the face with it added; both
    // stay in the strand, so the critical cells are exactly the faces
    // that contain the pivot and fall out of the strand when it is
    // removed. Every facet of a critical cell either leaves the strand or
    // still contains the pivot, and cells with the pivot are never lower
    // halves, so no V-path has positive length: the induced differential
    // on the critical cells is the plain restriction and homology is
    // unchanged. One round only; after it the critical cells no longer
    // all share a pivot and restriction would drop V-path contributions.
    std::vector<uint32_t> faces;
    int bestPivot = -1;
    size_t bestCount = members.size();
    for (int pivot = 0; pivot < g; ++pivot) {
      if (!m.isDivisibleBy(gens[static_cast<size_t>(pivot)])) {
        continue;
      }
      const uint32_t bit = uint32_t{1} << pivot;
      size_t critical = 0;
      for (uint32_t mask : members) {
        if ((mask & bit) != 0 && !(lcms[mask ^ bit] == m)) {
          ++critical;
        }
      }
      if (critical < bestCount) {
        bestCount = critical;
        bestPivot = pivot;
      }
    }
    if (bestPivot >= 0) {
      const uint32_t bit = uint32_t{1} << bestPivot;
      faces.reserve(bestCount);
      for (uint32_t mask : members) {
        if ((mask & bit) != 0 && !(lcms[mask ^ bit] == m)) {
          faces.push_back(mask);
        }
      }
    } else {
      faces = members;
    }
    if (faces.size() > kMaxStrandFaces) {
      throw BudgetError("betti oracle strand exceeds the face budget");
    }

    // Survivors grouped by homological level = subset size; faces are in
    // ascending mask order, so each level is deterministically ordered.
    std::vector<std::vector<uint32_t>> levels(static_cast<size_t>(g) + 1);
    std::map<uint32_t, int> column;
    for (uint32_t mask : faces) {
      auto& level = levels[static_cast<size_t>(std::popcount(mask))];
      column[mask] = static_cast<int>(level.size());
      level.push_back(mask);
    }

    // ranks[i] = rank of the boundary from level i to level i-1.
    std::vector<int> ranks(static_cast<size_t>(g) + 2, 0);
    for (size_t i = 1; i <= static_cast<size_t>(g); ++i) {
      if (levels[i].empty()) {
        continue;
      }
      std::vector<std::vector<std::pair<int, Rat>>> rows;
      for (uint32_t mask : levels[i]) {
        std::vector<std::pair<int, Rat>> row;
        int sign = 1;
        for (uint32_t bits = mask; bits != 0; bits &= bits - 1) {
          const uint32_t face = mask ^ (bits & (0u - bits));
          const auto found = column.find(face);
          if (found != column.end()) {
            row.push_back({found->second, makeRat(sign)});
          }
          sign = -sign;
        }
        // Faces were visited from the lowest dropped bit up, which walks
        // the column indices downward; the reduction wants them sorted.
        std::sort(row.begin(), row.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        rows.push_back(std::move(row));
      }
      ranks[i] = rationalRank(std::move(rows));
    }

    for (size_t i = 0; i <= static_cast<size_t>(g); ++i) {
      const int dim = static_cast<int>(levels[i].size()) - ranks[i] - ranks[i + 1];
      table.add(static_cast<int>(i), m.degree(), dim);
    }
  }
  return table;
}

BettiTable convolve(const BettiTable& a, const BettiTable& b) {
  BettiTable out;
  for (const auto& [ka, va] : a.entries()) {
    for (const auto& [kb, vb] : b.entries()) {
      out.add(ka.first + kb.first, ka.second + kb.second, va * vb);
    }
  }
  return out;
}

bool convolutionCheck(const std::vector<Monomial>& gens1,
                      const std::vector<Monomial>& gens2) {
  std::set<GridVar> support1;
  for (const Monomial& g : gens1) {
    for (const auto& [var, exp] : g.factors()) {
      (void)exp;
      support1.insert(var);
    }
  }
  for (const Monomial& g : gens2) {
    for (const auto& [var, exp] : g.factors()) {
      (void)exp;
      if (support1.count(var) > 0) {
        throw InputError("convolution check requires disjoint supports");
      }
    }
  }
  std::vector<Monomial> combined = gens1;
  combined.insert(combined.end(), gens2.begin(), gens2.end());
  const BettiTable whole = bettiOracle(combined);
  const BettiTable left = bettiOracle(gens1);
  const BettiTable right = bettiOracle(gens2);
  const BettiTable product = convolve(left, right);
  return whole == product &&
         whole.regularity() == left.regularity() + right.regularity();
}

}  // namespace schubert
