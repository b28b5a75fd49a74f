#ifndef SCHUBERT_VERIFY_HPP
#define SCHUBERT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "schubert/term_order.hpp"

namespace schubert {

/// Outcome of one theorem sweep. Counterexamples are human-readable
/// descriptions; the sweep passes iff the list is empty.
struct VerificationReport {
  std::string theorem;
  int n = 0;
  long long checked = 0;
  std::vector<std::string> counterexamples;
  double wallMs = 0.0;

  bool pass() const { return counterexamples.empty(); }
};

/// Thm 1.2 sweep over all w in S_m, m <= n: |G'_w| = |G_w| and every
/// degree-d member of G'_w has at least 2^{d-1} terms.
VerificationReport verifyMain(int n, int parallel = 1);

/// Thm 1.4 sweep: gao_yong_is_reduced == 2143-avoidance == essential-chain
/// route, under the given antidiagonal order.
VerificationReport verifyVexillary(int n, int parallel = 1,
                                   TermOrder order = TermOrder());

/// Thm 1.5 sweep: is_binomial_ideal == pattern avoidance == essential rank
/// <= 1; per-size counts match the large Schroder numbers. Also covers the
/// Prop §5 general-k equivalence for k in {1,2,3}.
VerificationReport verifyBinomial(int n, int parallel = 1);

/// Avoider counts versus the Schroder recurrence for 1 <= m <= n.
VerificationReport verifySchroder(int n);

/// Lemmas 3.5/3.6/3.7 for every elusive minor of every w in S_m, m <= n,
/// plus the Prop 3.4 extremal family sharpness for 3 <= m <= max(4, n-2).
VerificationReport verifyLemmas(int n, int parallel = 1);

/// Regularity suite: matching identity, exhaustive recession equality in a
/// 3x3 box, witness validation in a 6x6 box, Example 6.x, and the Betti
/// oracle concordance with the decomposition formula for binomial w in S_5.
VerificationReport verifyRegularity(int edgeCap = 22, int oracleN = 5,
                                    int parallel = 1);

/// Seeded randomized property suite: antidiagonal lead terms on 200 random
/// minors, division reconstruction on 200 random instances, reduce_basis
/// idempotence and input-order invariance on 50 random Schubert bases.
VerificationReport verifyProperties(uint64_t seed);

/// Knutson-Miller check: Fulton generators pass the Buchberger criterion
/// under both antidiagonal orders for every w in S_m, m <= n.
VerificationReport verifyKnutsonMiller(int n, int parallel = 1);

}  // namespace schubert

#endif
