#ifndef SCHUBERT_TERM_ORDER_HPP
#define SCHUBERT_TERM_ORDER_HPP

#include <compare>
#include <string>

#include "schubert/monomial.hpp"

namespace schubert {

/// The shipped monomial orders. The two antidiagonal orders make the
/// antidiagonal product the lead term of every minor; Diagonal is a
/// deliberately non-antidiagonal lexicographic control order for negative
/// tests (it selects the main-diagonal product instead).
enum class TermOrderKind {
  Antidiagonal,           // lex, x_{ij} > x_{kl} iff j > l, or j = l and i < k
  AntidiagonalTranspose,  // lex, x_{ij} > x_{kl} iff i > k, or i = k and j < l
  Diagonal,               // lex, x_{ij} > x_{kl} iff i < k, or i = k and j < l
};

/// A total, multiplicative well-order on monomials with 1 minimal. Small
/// value type; the kind selects a lexicographic variable ranking.
class TermOrder {
 public:
  explicit TermOrder(TermOrderKind kind = TermOrderKind::Antidiagonal)
      : kind_(kind) {}

  TermOrderKind kind() const { return kind_; }

  /// True iff variable a ranks strictly above variable b.
  bool varAbove(GridVar a, GridVar b) const;

  /// <0 / 0 / >0 when a < b / a = b / a > b in this order.
  int compare(const Monomial& a, const Monomial& b) const;

  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }

  /// "antidiag", "antidiag-transpose", or "diag".
  std::string name() const;

  /// Inverse of name(); throws InputError on unknown names.
  static TermOrder fromName(const std::string& name);

  bool operator==(const TermOrder& o) const { return kind_ == o.kind_; }

 private:
  TermOrderKind kind_;
};

}  // namespace schubert

#endif
