#ifndef SCHUBERT_BETTI_HPP
#define SCHUBERT_BETTI_HPP

#include <map>
#include <utility>
#include <vector>

#include "schubert/monomial.hpp"

namespace schubert {

/// Graded Betti numbers beta_{i,j} of the quotient by a monomial ideal;
/// beta_{0,0} = 1 always. j is the total internal degree.
class BettiTable {
 public:
  void add(int i, int j, long long value);

  long long at(int i, int j) const;

  /// Nonzero entries sorted by (i, j).
  std::vector<std::pair<std::pair<int, int>, long long>> entries() const;

  /// max{j - i : beta_{ij} != 0}.
  int regularity() const;

  bool operator==(const BettiTable& o) const { return values_ == o.values_; }

 private:
  std::map<std::pair<int, int>, long long> values_;
};

/// Graded Betti numbers of R/I for the squarefree monomial ideal I minimally
/// generated by gens, via the lcm-graded strands of the Taylor complex over
/// Q: generator subsets sit in multidegree lcm(B), the differential keeps
/// the faces with unchanged lcm, and the homology at level i of the strand
/// of a lattice element m has dimension beta_{i, deg m} (equivalently
/// dim H~_{i-2} of the open lcm-lattice interval (1, m)). Exact rational
/// ranks throughout. Throws InputError for non-squarefree or non-minimal
/// input, BudgetError when the generator count or a strand exceeds the
/// desk-scale budget.
BettiTable bettiOracle(const std::vector<Monomial>& gens);

/// Convolution of two tables: beta_{a,b} = sum beta_{i,j} * beta_{a-i,b-j}.
BettiTable convolve(const BettiTable& a, const BettiTable& b);

/// Checks the tensor-factorization of resolutions for variable-disjoint
/// generator sets: table of the union equals the convolution of the two
/// tables (hence regularities add). Throws InputError when supports overlap.
bool convolutionCheck(const std::vector<Monomial>& gens1,
                      const std::vector<Monomial>& gens2);

}  // namespace schubert

#endif
