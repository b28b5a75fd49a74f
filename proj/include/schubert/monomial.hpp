#ifndef SCHUBERT_MONOMIAL_HPP
#define SCHUBERT_MONOMIAL_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace schubert {

/// The variable x_{row,col} of the generic matrix.
struct GridVar {
  int row = 0;
  int col = 0;

  auto operator<=>(const GridVar&) const = default;
};

/// Canonical storage order for monomial factors: descending under the default
/// antidiagonal variable ranking (column descending, then row ascending), so
/// comparisons in the default term order walk factors front to back.
inline bool canonicalVarBefore(const GridVar& a, const GridVar& b) {
  if (a.col != b.col) {
    return a.col > b.col;
  }
  return a.row < b.row;
}

/// A monomial in the grid variables: sparse factor list with positive
/// exponents, kept sorted by canonicalVarBefore. Immutable value type.
class Monomial {
 public:
  using Factor = std::pair<GridVar, int>;

  /// The monomial 1.
  Monomial() = default;

  /// x_{var}^exp; throws InputError unless exp > 0 and indices positive.
  static Monomial variable(GridVar var, int exp = 1);

  /// Normalizes an arbitrary factor list (sorts, merges, drops zeros);
  /// throws InputError on negative exponents or nonpositive indices.
  static Monomial fromFactors(std::vector<Factor> factors);

  bool isOne() const { return factors_.empty(); }

  int degree() const { return degree_; }

  int exponentOf(GridVar var) const;

  const std::vector<Factor>& factors() const { return factors_; }

  bool isSquarefree() const;

  Monomial times(const Monomial& other) const;

  bool isDivisibleBy(const Monomial& other) const;

  /// this / other; throws Error unless divisible.
  Monomial dividedBy(const Monomial& other) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);

  /// "x[1,2]^2·x[2,1]" in canonical factor order; "1" for the unit.
  std::string str() const;

  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
  /// Arbitrary but stable total order for use as container keys; not a term
  /// order (see TermOrder for those).
  std::strong_ordering operator<=>(const Monomial& o) const {
    return factors_ <=> o.factors_;
  }

 private:
  std::vector<Factor> factors_;
  int degree_ = 0;
};

}  // namespace schubert

#endif
