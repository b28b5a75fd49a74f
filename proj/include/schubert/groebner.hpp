#ifndef SCHUBERT_GROEBNER_HPP
#define SCHUBERT_GROEBNER_HPP

#include <vector>

#include "schubert/polynomial.hpp"

namespace schubert {

/// Result of multivariate division: f = sum quotients[i] * divisors[i] +
/// remainder, with no remainder term divisible by any divisor lead term.
struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// How far a basis has been processed.
enum class BasisKind { Raw, Groebner, Minimal, Reduced };

/// An ordered generating set tagged with the order it was computed under.
struct GroebnerBasis {
  std::vector<Polynomial> members;
  TermOrder order;
  BasisKind kind = BasisKind::Raw;
};

/// Full-normal-form division of f by an ordered divisor list: every term of
/// the working polynomial is tested against every divisor lead term (first
/// match wins), so the remainder contains no divisible term at all.
DivisionResult divide(const Polynomial& f,
                      const std::vector<Polynomial>& divisors,
                      const TermOrder& order);

/// Remainder-only division.
Polynomial normalForm(const Polynomial& f,
                      const std::vector<Polynomial>& divisors,
                      const TermOrder& order);

/// S(f, g) = (lcm/LT(f))·f − (lcm/LT(g))·g with lcm = lcm(LM(f), LM(g)).
Polynomial sPolynomial(const Polynomial& f, const Polynomial& g,
                       const TermOrder& order);

/// Buchberger's algorithm: pairs processed first-by-index (FIFO), coprime
/// lead terms skipped, S-pair remainders appended. Deterministic for a fixed
/// input list. Zero input polynomials are dropped.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         const TermOrder& order);

/// Buchberger's criterion: every S-pair of gens reduces to 0 against gens.
bool isGroebnerBasis(const std::vector<Polynomial>& gens,
                     const TermOrder& order);

/// Drops members whose lead term is divisible by another member's lead term
/// and rescales monic; members sorted ascending by lead monomial.
GroebnerBasis minimalize(const GroebnerBasis& basis);

/// The unique reduced Groebner basis: minimal, monic, and no member's lead
/// term divides any term of another member. Members sorted ascending by lead
/// monomial, so the output is independent of the input member order.
GroebnerBasis reduceBasis(const GroebnerBasis& basis);

/// Pairwise reduced-basis condition on an arbitrary member list (each member
/// monic, no lead term divides any term of another member).
bool isReducedBasisSet(const std::vector<Polynomial>& members,
                       const TermOrder& order);

}  // namespace schubert

#endif
