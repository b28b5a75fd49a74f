#ifndef SCHUBERT_MINOR_HPP
#define SCHUBERT_MINOR_HPP

#include <compare>
#include <vector>

#include "schubert/diagram.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

/// The minor m_{I,J}: row index set I and column index set J, both strictly
/// increasing and of equal size d.
struct MinorSpec {
  std::vector<int> rows;
  std::vector<int> cols;

  int size() const { return static_cast<int>(rows.size()); }

  /// (i_d, j_d), the largest row and column index.
  Cell southeastCorner() const { return {rows.back(), cols.back()}; }

  auto operator<=>(const MinorSpec&) const = default;
};

/// Throws InputError unless rows/cols are strictly increasing, positive and
/// of equal nonzero size.
void validateMinorSpec(const MinorSpec& spec);

/// The antidiagonal product: x_{i_1, j_d} * x_{i_2, j_{d-1}} * ... * x_{i_d, j_1}.
Monomial antidiagonalProduct(const MinorSpec& spec);

/// The determinant of the (I, J) submatrix of the generic matrix, scaled by
/// (-1)^{d(d-1)/2} so the antidiagonal coefficient is +1 (hence monic under
/// any antidiagonal order). Results are cached process-wide.
Polynomial minorPolynomial(const MinorSpec& spec, const TermOrder& order);

}  // namespace schubert

#endif
