#ifndef SCHUBERT_POLYNOMIAL_HPP
#define SCHUBERT_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "schubert/monomial.hpp"
#include "schubert/numeric.hpp"
#include "schubert/term_order.hpp"

namespace schubert {

/// One term of a polynomial: nonzero rational coefficient times a monomial.
struct Term {
  Monomial monomial;
  Rat coeff;

  bool operator==(const Term& o) const {
    return monomial == o.monomial && coeff == o.coeff;
  }
};

/// An exact multivariate polynomial over the grid variables. Terms are kept
/// sorted strictly descending under the attached term order; no zero
/// coefficients are stored. Immutable value semantics.
class Polynomial {
 public:
  /// The zero polynomial.
  explicit Polynomial(TermOrder order = TermOrder()) : order_(order) {}

  /// Normalizes terms: sorts descending, merges equal monomials, drops zeros.
  Polynomial(std::vector<Term> terms, TermOrder order);

  static Polynomial constant(const Rat& value, TermOrder order = TermOrder());

  static Polynomial fromVariable(GridVar var, TermOrder order = TermOrder());

  bool isZero() const { return terms_.empty(); }

  int numTerms() const { return static_cast<int>(terms_.size()); }

  /// Max total degree over terms; -1 for the zero polynomial.
  int totalDegree() const;

  const std::vector<Term>& terms() const { return terms_; }

  const TermOrder& order() const { return order_; }

  /// Throws Error when zero.
  const Term& leadTerm() const;
  const Monomial& leadMonomial() const { return leadTerm().monomial; }
  const Rat& leadCoeff() const { return leadTerm().coeff; }

  Polynomial plus(const Polynomial& other) const;
  Polynomial minus(const Polynomial& other) const;
  Polynomial negated() const;
  Polynomial timesScalar(const Rat& scalar) const;
  /// Multiplication by the single term c * m; order-preserving linear pass.
  Polynomial timesTerm(const Monomial& m, const Rat& c) const;
  Polynomial times(const Polynomial& other) const;

  /// Lead coefficient scaled to 1; zero stays zero.
  Polynomial monic() const;

  /// Same polynomial re-sorted under another order.
  Polynomial withOrder(TermOrder order) const;

  /// Terms descending: "x[1,2]·x[2,1] - 2·x[1,1]" style; "0" when zero.
  std::string str() const;

  /// Equality of content (terms compared as sets, orders need not match).
  bool operator==(const Polynomial& o) const;

 private:
  TermOrder order_;
  std::vector<Term> terms_;
};

}  // namespace schubert

#endif
