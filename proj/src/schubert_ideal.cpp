#include "schubert/schubert_ideal.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "schubert/error.hpp"

namespace schubert {

namespace {

/// Calls fn with every strictly increasing size-d subset of {1..limit}.
void forEachSubset(int limit, int d,
                   const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> subset(static_cast<size_t>(d));
  const std::function<void(int, int)> go = [&](int next, int depth) {
    if (depth == d) {
      fn(subset);
      return;
    }
    for (int v = next; v <= limit - (d - depth - 1); ++v) {
      subset[static_cast<size_t>(depth)] = v;
      go(v + 1, depth + 1);
    }
  };
  go(1, 0);
}

int countLeq(const std::vector<int>& sorted, int bound) {
  return static_cast<int>(
      std::upper_bound(sorted.begin(), sorted.end(), bound) - sorted.begin());
}

}  // namespace

std::vector<FultonGenerator> fultonGenerators(const Permutation& w) {
  std::vector<FultonGenerator> out;
  std::set<MinorSpec> seen;
  for (const EssentialBox& box : essentialSet(w)) {
    const int d = box.rank + 1;
    forEachSubset(box.cell.row, d, [&](const std::vector<int>& rows) {
      forEachSubset(box.cell.col, d, [&](const std::vector<int>& cols) {
        MinorSpec spec{rows, cols};
        if (seen.insert(spec).second) {
          out.push_back({std::move(spec), box});
        }
      });
    });
  }
  return out;
}

bool attends(const MinorSpec& minor, const Cell& box, int boxRank, int d) {
  const int rowsIn = countLeq(minor.rows, box.row);
  const int colsIn = countLeq(minor.cols, box.col);
  return (rowsIn > boxRank && colsIn == d) || (colsIn > boxRank && rowsIn == d);
}

std::vector<MinorSpec> elusiveMinors(const Permutation& w) {
  const std::vector<EssentialBox> boxes = essentialSet(w);
  std::set<MinorSpec> elusive;
  for (const EssentialBox& box : boxes) {
    const int d = box.rank + 1;
    std::vector<EssentialBox> lowerBoxes;
    for (const EssentialBox& other : boxes) {
      if (other.rank < box.rank) {
        lowerBoxes.push_back(other);
      }
    }
    forEachSubset(box.cell.row, d, [&](const std::vector<int>& rows) {
      forEachSubset(box.cell.col, d, [&](const std::vector<int>& cols) {
        const MinorSpec spec{rows, cols};
        const bool attendsLower = std::any_of(
            lowerBoxes.begin(), lowerBoxes.end(), [&](const EssentialBox& b) {
              return attends(spec, b.cell, b.rank, d);
            });
        if (!attendsLower) {
          elusive.insert(spec);
        }
      });
    });
  }
  return {elusive.begin(), elusive.end()};
}

std::vector<Polynomial> gaoYongBasis(const Permutation& w,
                                     const TermOrder& order) {
  std::vector<Polynomial> out;
  for (const MinorSpec& spec : elusiveMinors(w)) {
    out.push_back(minorPolynomial(spec, order));
  }
  return out;
}

GroebnerBasis reducedSchubertBasis(const Permutation& w,
                                   const TermOrder& order) {
  GroebnerBasis basis{gaoYongBasis(w, order), order, BasisKind::Groebner};
  return reduceBasis(basis);
}

bool gaoYongIsReduced(const Permutation& w, const TermOrder& order) {
  const std::vector<Polynomial> basis = gaoYongBasis(w, order);
  if (basis.empty()) {
    return true;
  }
  std::vector<Polynomial> monic;
  monic.reserve(basis.size());
  for (const Polynomial& g : basis) {
    monic.push_back(g.monic());
  }
  return isReducedBasisSet(monic, order);
}

bool isBinomialIdeal(const Permutation& w) {
  const GroebnerBasis reduced = reducedSchubertBasis(w, TermOrder());
  return std::all_of(
      reduced.members.begin(), reduced.members.end(),
      [](const Polynomial& g) { return g.numTerms() <= 2; });
}

Permutation extremalFamily(int n) {
  if (n < 3) {
    throw InputError("extremal family requires n >= 3");
  }
  std::vector<int> word(static_cast<size_t>(n + 1));
  for (int i = 1; i <= n - 1; ++i) {
    word[static_cast<size_t>(i) - 1] = n - i;
  }
  word[static_cast<size_t>(n) - 1] = n + 1;
  word[static_cast<size_t>(n)] = n;
  return Permutation(std::move(word));
}

}  // namespace schubert
