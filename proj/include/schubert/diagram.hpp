#ifndef SCHUBERT_DIAGRAM_HPP
#define SCHUBERT_DIAGRAM_HPP

#include <compare>
#include <optional>
#include <vector>

#include "schubert/partition.hpp"
#include "schubert/permutation.hpp"

namespace schubert {

/// A 1-based grid position (row, col).
struct Cell {
  int row = 0;
  int col = 0;

  auto operator<=>(const Cell&) const = default;
};

/// r_w(i, j) = #{k <= i : w(k) <= j}, the number of 1s weakly northwest of
/// (i, j) in the permutation matrix.
class RankTable {
 public:
  explicit RankTable(const Permutation& w);

  int size() const { return n_; }

  /// r(i, j), 1-based; i or j equal to 0 gives 0.
  int operator()(int i, int j) const;

 private:
  int n_;
  std::vector<int> values_;  // row-major n x n
};

/// An essential-set box together with its rank value.
struct EssentialBox {
  Cell cell;
  int rank = 0;

  auto operator<=>(const EssentialBox&) const = default;
};

/// A connected component of the Rothe diagram under 4-adjacency.
struct DiagramComponent {
  std::vector<Cell> cells;  // sorted row-major
  int rank = -1;            // constant rank value; -1 if ranks disagree
  /// The component translated to the origin, when it is a Young diagram.
  std::optional<Partition> shape;
};

/// D(w) = {(i, j) : j < w(i) and i < w^{-1}(j)}, sorted row-major.
std::vector<Cell> rotheDiagram(const Permutation& w);

/// Southeast corners of D(w): cells with east and south neighbors absent,
/// sorted row-major, each carrying its rank value.
std::vector<EssentialBox> essentialSet(const Permutation& w);

/// Max rank over E(w); -1 when the essential set is empty.
int maxEssentialRank(const Permutation& w);

/// True iff r_w vanishes on E(w) (equivalently D(w) is a Young diagram in
/// the northwest corner).
bool isDominant(const Permutation& w);

/// Shape of a dominant permutation; throws InputError when w is not dominant.
Partition shapeOfDominant(const Permutation& w);

/// Vexillary = 2143-avoiding.
bool isVexillary(const Permutation& w);

/// Alternative vexillary test: E(w) admits an ordering e_1, ..., e_k with
/// each e_i weakly southwest of e_{i+1}. Must agree with isVexillary.
bool isVexillaryByEssentialChain(const Permutation& w);

/// True iff w avoids 1243 and 2143 (equivalently all essential ranks <= 1,
/// equivalently I_w is binomial).
bool isBinomialPattern(const Permutation& w);

/// Connected components of D(w), ordered by their first cell row-major.
std::vector<DiagramComponent> diagramComponents(const Permutation& w);

/// The smallest dominant permutation whose Rothe diagram is the Young
/// diagram of lambda at the northwest corner.
Permutation dominantOfShape(const Partition& lambda);

/// The parts u_i = 1^{r_i} x v_i of the decomposition: one per diagram
/// component, with v_i dominant of the component's shape and r_i its rank.
/// Throws InputError when some component is not a translated Young diagram
/// or carries unequal ranks (never happens for binomial w).
std::vector<Permutation> parts(const Permutation& w);

}  // namespace schubert

#endif
