#ifndef SCHUBERT_SCHUBERT_IDEAL_HPP
#define SCHUBERT_SCHUBERT_IDEAL_HPP

#include <vector>

#include "schubert/diagram.hpp"
#include "schubert/groebner.hpp"
#include "schubert/minor.hpp"
#include "schubert/permutation.hpp"

namespace schubert {

/// A Fulton generator: a minor together with the essential box it belongs to.
struct FultonGenerator {
  MinorSpec minor;
  EssentialBox box;
};

/// All (r+1)-minors of M^[i,j] over the essential boxes (i,j,r), one entry
/// per distinct MinorSpec (first belongs-box kept), boxes iterated row-major
/// and index sets in lexicographic order. Identity yields the empty list.
std::vector<FultonGenerator> fultonGenerators(const Permutation& w);

/// Whether the minor with row set I, column set J and size d attends
/// M^[i',j'] for a box of rank r': |I ∩ [i']| > r' and |J ∩ [j']| = d, or
/// the transposed clause.
bool attends(const MinorSpec& minor, const Cell& box, int boxRank, int d);

/// The Gao-Yong minimal generators G_w: Fulton minors that belong to some
/// essential box e and attend no essential M^[i',j'] of rank lower than
/// rank(e). Deduplicated, sorted by MinorSpec.
std::vector<MinorSpec> elusiveMinors(const Permutation& w);

/// G_w as polynomials (antidiagonal coefficient +1) under the given order.
std::vector<Polynomial> gaoYongBasis(const Permutation& w,
                                     const TermOrder& order);

/// Reduced Groebner basis G'_w of I_w, computed by reducing the elusive
/// basis (a Groebner basis under any antidiagonal order).
GroebnerBasis reducedSchubertBasis(const Permutation& w,
                                   const TermOrder& order);

/// True iff the monic elusive basis already satisfies the reduced-basis
/// condition; equals isVexillary(w) for antidiagonal orders.
bool gaoYongIsReduced(const Permutation& w, const TermOrder& order);

/// True iff every member of the reduced basis has at most two terms; equals
/// isBinomialPattern(w).
bool isBinomialIdeal(const Permutation& w);

/// The extremal family of Prop 3.4, normalized as in Example 3.3: the
/// permutation in S_{n+1} with w(i) = n-i for i < n, w(n) = n+1,
/// w(n+1) = n. Requires n >= 3; n = 4 gives 32154.
Permutation extremalFamily(int n);

}  // namespace schubert

#endif
