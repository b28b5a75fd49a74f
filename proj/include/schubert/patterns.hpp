#ifndef SCHUBERT_PATTERNS_HPP
#define SCHUBERT_PATTERNS_HPP

#include <vector>

#include "schubert/numeric.hpp"
#include "schubert/permutation.hpp"

namespace schubert {

/// True iff w contains p as a classical pattern: some subsequence of w is
/// order-isomorphic to p.
bool containsPattern(const Permutation& w, const Permutation& p);

bool avoidsAll(const Permutation& w, const std::vector<Permutation>& patterns);

/// All w in S_n avoiding every pattern in the list, in lexicographic order.
/// Prefix pruning: a partial word already containing a pattern is abandoned.
std::vector<Permutation> enumerateAvoiders(int n,
                                           const std::vector<Permutation>& patterns);

/// Count-only variant of enumerateAvoiders.
Int countAvoiders(int n, const std::vector<Permutation>& patterns);

/// Large Schroder numbers 6, 22, 90, 394, ... with s(0) = 1, s(1) = 2:
/// (n+1) s(n) = (6n-3) s(n-1) - (n-2) s(n-2).
Int largeSchroder(int n);

/// The k! patterns {v(k+2)(k+1) : v in S_k} inside S_{k+2}. A permutation
/// avoids all of them exactly when its rank function is < k on every
/// essential-set cell. k = 1 gives {132} (dominant permutations), k = 2
/// gives {1243, 2143} (the binomial classification).
std::vector<Permutation> rankBoundForbiddenPatterns(int k);

/// {2143}: vexillary permutations avoid exactly this pattern.
std::vector<Permutation> vexillaryForbiddenPatterns();

/// {1243, 2143}: permutations with binomial Schubert determinantal ideals
/// avoid exactly these.
std::vector<Permutation> binomialForbiddenPatterns();

}  // namespace schubert

#endif
