#include "schubert/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "schubert/betti.hpp"
#include "schubert/diagram.hpp"
#include "schubert/error.hpp"
#include "schubert/groebner.hpp"
#include "schubert/minor.hpp"
#include "schubert/patterns.hpp"
#include "schubert/permutation.hpp"
#include "schubert/regularity.hpp"
#include "schubert/schubert_ideal.hpp"

namespace schubert {

namespace {

constexpr size_t kMaxStoredCounterexamples = 25;

using CheckFn =
    std::function<void(const Permutation&, std::vector<std::string>&)>;

class Stopwatch {
 public:
  double elapsedMs() const {
    const auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(now - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::string boolWord(bool value) { return value ? "true" : "false"; }

std::string joinInts(const std::vector<int>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += std::to_string(values[i]);
  }
  return out;
}

std::string minorLabel(const MinorSpec& spec) {
  return "rows " + joinInts(spec.rows) + " cols " + joinInts(spec.cols);
}

/// Keeps the first few counterexamples and notes how many were dropped, so a
/// badly broken sweep cannot flood the report.
void truncateCounterexamples(VerificationReport& report) {
  if (report.counterexamples.size() <= kMaxStoredCounterexamples) {
    return;
  }
  const size_t dropped =
      report.counterexamples.size() - kMaxStoredCounterexamples;
  report.counterexamples.resize(kMaxStoredCounterexamples);
  report.counterexamples.push_back("... and " + std::to_string(dropped) +
                                   " more");
}

/// Runs one check with stray exceptions recorded as counterexamples rather
/// than aborting the sweep (or the thread it runs on).
void runCheck(const CheckFn& check, const Permutation& w,
              std::vector<std::string>& out) {
  try {
    check(w, out);
  } catch (const std::exception& e) {
    out.push_back("w=" + w.compactStr() + ": unexpected error: " + e.what());
  }
}

/// Sweeps all of S_m through check. parallel > 1 fans out over the first
/// entry w(1); per-prefix counterexample lists merge in prefix order, so the
/// report is deterministic regardless of thread scheduling. Returns the
/// number of permutations checked.
long long sweepOneSize(int m, int parallel, const CheckFn& check,
                       std::vector<std::string>& out) {
  if (parallel <= 1 || m < 4) {
    long long checked = 0;
    forEachPermutation(m, [&](const Permutation& w) {
      runCheck(check, w, out);
      ++checked;
    });
    return checked;
  }
  std::vector<std::vector<std::string>> slots(static_cast<size_t>(m));
  std::atomic<int> nextFirst{1};
  std::atomic<long long> checked{0};
  std::vector<std::thread> workers;
  const int workerCount = std::min(parallel, m);
  workers.reserve(static_cast<size_t>(workerCount));
  for (int t = 0; t < workerCount; ++t) {
    workers.emplace_back([&] {
      for (int first = nextFirst++; first <= m; first = nextFirst++) {
        long long local = 0;
        forEachPermutationWithFirst(m, first, [&](const Permutation& w) {
          runCheck(check, w, slots[static_cast<size_t>(first) - 1]);
          ++local;
        });
        checked += local;
      }
    });
  }
  for (std::thread& worker : workers) {
    worker.join();
  }
  for (const auto& slot : slots) {
    out.insert(out.end(), slot.begin(), slot.end());
  }
  return checked.load();
}

/// sweepOneSize over every S_m with 1 <= m <= n.
long long sweepAllSizes(int n, int parallel, const CheckFn& check,
                        std::vector<std::string>& out) {
  long long checked = 0;
  for (int m = 1; m <= n; ++m) {
    checked += sweepOneSize(m, parallel, check, out);
  }
  return checked;
}

/// All nonempty partitions fitting in a rows x cols box, in a deterministic
/// larger-parts-first order.
std::vector<Partition> partitionsInBox(int rows, int cols) {
  std::vector<Partition> result;
  std::vector<int> parts;
  const std::function<void(int)> extend = [&](int maxPart) {
    if (static_cast<int>(parts.size()) == rows || maxPart == 0) {
      return;
    }
    for (int p = maxPart; p >= 1; --p) {
      parts.push_back(p);
      result.push_back(Partition(parts));
      extend(p);
      parts.pop_back();
    }
  };
  extend(cols);
  return result;
}

bool shareVariable(const Monomial& a, const Monomial& b) {
  for (const auto& [var, exp] : a.factors()) {
    (void)exp;
    if (b.exponentOf(var) > 0) {
      return true;
    }
  }
  return false;
}

/// Partition of the generators into variable-connectivity clusters (two
/// generators sharing a variable land together), ordered by first member.
std::vector<std::vector<Monomial>> variableClusters(
    const std::vector<Monomial>& gens) {
  const size_t n = gens.size();
  std::vector<size_t> root(n);
  std::iota(root.begin(), root.end(), size_t{0});
  const std::function<size_t(size_t)> find = [&](size_t x) {
    while (root[x] != x) {
      x = root[x] = root[root[x]];
    }
    return x;
  };
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      if (shareVariable(gens[a], gens[b])) {
        root[find(a)] = find(b);
      }
    }
  }
  std::vector<std::vector<Monomial>> clusters;
  std::vector<int> slot(n, -1);
  for (size_t a = 0; a < n; ++a) {
    const size_t r = find(a);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(clusters.size());
      clusters.emplace_back();
    }
    clusters[static_cast<size_t>(slot[r])].push_back(gens[a]);
  }
  return clusters;
}

}  // namespace

VerificationReport verifyMain(int n, int parallel) {
  const Stopwatch timer;
  VerificationReport report;
  report.theorem = "main";
  report.n = n;
  report.checked = sweepAllSizes(
      n, parallel,
      [](const Permutation& w, std::vector<std::string>& out) {
        const size_t elusiveCount = elusiveMinors(w).size();
        const GroebnerBasis reduced = reducedSchubertBasis(w, TermOrder());
        if (reduced.members.size() != elusiveCount) {
          out.push_back("w=" + w.compactStr() + ": |G'_w| = " +
                        std::to_string(reduced.members.size()) +
                        " but |G_w| = " + std::to_string(elusiveCount));
        }
        for (const Polynomial& member : reduced.members) {
          const int d = member.totalDegree();
          if (member.numTerms() < (1LL << (d - 1))) {
            out.push_back("w=" + w.compactStr() + ": degree-" +
                          std::to_string(d) + " member has " +
                          std::to_string(member.numTerms()) +
                          " terms, below 2^" + std::to_string(d - 1));
          }
        }
      },
      report.counterexamples);
  truncateCounterexamples(report);
  report.wallMs = timer.elapsedMs();
  return report;
}

VerificationReport verifyVexillary(int n, int parallel, TermOrder order) {
  const Stopwatch timer;
  VerificationReport report;
  report.theorem = "vexillary";
  report.n = n;
  report.checked = sweepAllSizes(
      n, parallel,
      [order](const Permutation& w, std::vector<std::string>& out) {
        const bool reduced = gaoYongIsReduced(w, order);
        const bool avoids = isVexillary(w);
        const bool chain = isVexillaryByEssentialChain(w);
        if (reduced != avoids || chain != avoids) {
          out.push_back("w=" + w.compactStr() + ": gao_yong_reduced=" +
                        boolWord(reduced) + ", 2143-avoiding=" +
                        boolWord(avoids) + ", essential-chain=" +
                        boolWord(chain));
        }
      },
      report.counterexamples);
  truncateCounterexamples(report);
  report.wallMs = timer.elapsedMs();
  return report;
}

VerificationReport verifyBinomial(int n, int parallel) {
  const Stopwatch timer;
  VerificationReport report;
  report.theorem = "binomial";
  report.n = n;
  const std::vector<Permutation> binomialPatterns = binomialForbiddenPatterns();
  std::vector<std::pair<int, std::vector<Permutation>>> rankPatterns;
  for (int k = 1; k <= 3; ++k) {
    rankPatterns.push_back({k, rankBoundForbiddenPatterns(k)});
  }
  for (int m = 1; m <= n; ++m) {
    std::atomic<long long> binomialCount{0};
    report.checked += sweepOneSize(
        m, parallel,
        [&](const Permutation& w, std::vector<std::string>& out) {
          const bool ideal = isBinomialIdeal(w);
          const bool avoids = avoidsAll(w, binomialPatterns);
          const bool rankBound = maxEssentialRank(w) <= 1;
          if (ideal != avoids || rankBound != avoids) {
            out.push_back("w=" + w.compactStr() + ": binomial_ideal=" +
                          boolWord(ideal) + ", pattern-avoiding=" +
                          boolWord(avoids) + ", essential-rank<=1=" +
                          boolWord(rankBound));
          }
          if (avoids) {
            ++binomialCount;
          }
          for (const auto& [k, patterns] : rankPatterns) {
            if ((maxEssentialRank(w) < k) != avoidsAll(w, patterns)) {
              out.push_back("w=" + w.compactStr() +
                            ": essential-rank bound and v(k+2)(k+1) "
                            "avoidance disagree at k=" + std::to_string(k));
            }
          }
        },
        report.counterexamples);
    if (Int(static_cast<long>(binomialCount.load())) != largeSchroder(m - 1)) {
      report.counterexamples.push_back(
          "S_" + std::to_string(m) + ": " +
          std::to_string(binomialCount.load()) +
          " binomial permutations, schroder(" + std::to_string(m - 1) +
          ") = " + largeSchroder(m - 1).get_str());
    }
  }
  truncateCounterexamples(report);
  report.wallMs = timer.elapsedMs();
  return report;
}

VerificationReport verifySchroder(int n) {
  const Stopwatch timer;
  VerificationReport report;
  report.theorem = "schroder";
  report.n = n;
  const std::vector<Permutation> patterns = binomialForbiddenPatterns();
  for (int m = 1; m <= n; ++m) {
    ++report.checked;
    const Int counted = countAvoiders(m, patterns);
    const Int expected = largeSchroder(m - 1);
    if (counted != expected) {
      report.counterexamples.push_back(
          "S_" + std::to_string(m) + ": " + counted.get_str() +
          " avoiders, schroder(" + std::to_string(m - 1) + ") = " +
          expected.get_str());
    }
  }
  truncateCounterexamples(report);
  report.wallMs = timer.elapsedMs();
  return report;
}

VerificationReport verifyLemmas(int n, int parallel) {
  const Stopwatch timer;
  VerificationReport report;
  report.theorem = "lemmas";
  report.n = n;
  report.checked = sweepAllSizes(
      n, parallel,
      [](const Permutation& w, std::vector<std::string>& out) {
        const RankTable ranks(w);
        const std::vector<Cell> diagram = rotheDiagram(w);
        const auto inDiagram = [&diagram](int i, int j) {
          return std::binary_search(diagram.begin(), diagram.end(),
                                    Cell{i, j});
        };
        std::set<MinorSpec> generatorSpecs;
        for (const FultonGenerator& gen : fultonGenerators(w)) {
          generatorSpecs.insert(gen.minor);
        }
        const int m = w.size();
        for (const MinorSpec& minor : elusiveMinors(w)) {
          const int d = minor.size();
          const std::string label =
              "w=" + w.compactStr() + ", minor " + minorLabel(minor);

          // Lemma 3.6: the southeast corner (i_d, j_d) lies in D(w).
          if (!inDiagram(minor.rows.back(), minor.cols.back())) {
            out.push_back(label + ": (i_d, j_d) is outside D(w)");
          }

          // Lemma 3.5: diagram cells east of j_d in row i_a (a < d) have
          // rank at least a, and the transposed statement.
          for (int a = 1; a < d; ++a) {
            const int row = minor.rows[static_cast<size_t>(a) - 1];
            for (int j = minor.cols.back(); j <= m; ++j) {
              if (inDiagram(row, j) && ranks(row, j) < a) {
                out.push_back(label + ": r(" + std::to_string(row) + "," +
                              std::to_string(j) + ") = " +
                              std::to_string(ranks(row, j)) + " < a = " +
                              std::to_string(a));
              }
            }
          }
          for (int b = 1; b < d; ++b) {
            const int col = minor.cols[static_cast<size_t>(b) - 1];
            for (int i = minor.rows.back(); i <= m; ++i) {
              if (inDiagram(i, col) && ranks(i, col) < b) {
                out.push_back(label + ": r(" + std::to_string(i) + "," +
                              std::to_string(col) + ") = " +
                              std::to_string(ranks(i, col)) + " < b = " +
                              std::to_string(b));
              }
            }
          }

          // Lemma 3.7: every generator sub-minor keeps its main
          // antidiagonal weakly northwest of the (d-2)nd antidiagonal:
          // writing p, q for the positions of its antidiagonal cell's row
          // in I and column in J, p + q <= d - 1.
          for (const MinorSpec& sub : generatorSpecs) {
            const int k = sub.size();
            if (k >= d ||
                !std::includes(minor.rows.begin(), minor.rows.end(),
                               sub.rows.begin(), sub.rows.end()) ||
                !std::includes(minor.cols.begin(), minor.cols.end(),
                               sub.cols.begin(), sub.cols.end())) {
              continue;
            }
            for (int t = 1; t <= k; ++t) {
              const auto position = [](const std::vector<int>& sorted,
                                       int value) {
                return static_cast<int>(std::lower_bound(sorted.begin(),
                                                         sorted.end(), value) -
                                        sorted.begin()) +
                       1;
              };
              const int p = position(
                  minor.rows, sub.rows[static_cast<size_t>(t) - 1]);
              const int q = position(
                  minor.cols, sub.cols[static_cast<size_t>(k - t)]);
              if (p + q > d - 1) {
                out.push_back(label + ": sub-minor " + minorLabel(sub) +
                              " antidiagonal reaches position (" +
                              std::to_string(p) + "," + std::to_string(q) +
                              "), past antidiagonal " + std::to_string(d - 2));
                break;
              }
            }
          }
        }
      },
      report.counterexamples);

  // Prop 3.4 sharpness: the extremal family's reduced top member has
  // exactly 2^{m-1} terms, the rest are the variables x_{ij}, i+j <= m-1.
  for (int m = 3; m <= std::max(4, n - 2); ++m) {
    ++report.checked;
    const Permutation w = extremalFamily(m);
    const GroebnerBasis reduced = reducedSchubertBasis(w, TermOrder());
    const std::string label = "extremal n=" + std::to_string(m) +
                              " (w=" + w.compactStr() + ")";
    bool foundTop = false;
    for (const Polynomial& member : reduced.members) {
      if (member.totalDegree() == m) {
        foundTop = true;
        if (member.numTerms() != (1 << (m - 1))) {
          report.counterexamples.push_back(
              label + ": top member has " +
              std::to_string(member.numTerms()) + " terms, expected " +
              std::to_string(1 << (m - 1)));
        }
      } else if (member.totalDegree() != 1) {
        report.counterexamples.push_back(
            label + ": unexpected member of degree " +
            std::to_string(member.totalDegree()));
      }
    }
    if (!foundTop) {
      report.counterexamples.push_back(label + ": no degree-" +
                                       std::to_string(m) + " member");
    }
    const size_t expectedCount =
        static_cast<size_t>((m - 1) * (m - 2) / 2) + 1;
    if (reduced.members.size() != expectedCount) {
      report.counterexamples.push_back(
          label + ": " + std::to_string(reduced.members.size()) +
          " members, expected " + std::to_string(expectedCount));
    }
  }
  truncateCounterexamples(report);
  report.wallMs = timer.elapsedMs();
  return report;
}

VerificationReport verifyRegularity(int edgeCap, int oracleN, int parallel) {
  const Stopwatch timer;
  VerificationReport report;
  report.theorem = "regularity";
  report.n = oracleN;

  // Matching identity: max matching of B_lambda is |C_lambda|.
  for (const Partition& lambda : partitionsInBox(4, 4)) {
    ++report.checked;
    const int matching = maxMatching(partitionGraph(lambda));
    const int canonical = rrwRegularity(lambda);
    if (matching != canonical) {
      report.counterexamples.push_back(
          "lambda=" + lambda.str() + ": max matching " +
          std::to_string(matching) + ", |C_lambda| " +
          std::to_string(canonical));
    }
  }

  // Exhaustive recession equality r(B_thick) = |C_lambda| + 1 in a 3x3 box.
  for (const Partition& lambda : partitionsInBox(3, 3)) {
    ++report.checked;
    try {
      const int r = recessionConnectivity(partitionGraph(thicken(lambda)),
                                          edgeCap);
      if (r != rrwRegularity(lambda) + 1) {
        report.counterexamples.push_back(
            "lambda=" + lambda.str() + ": r(B_thick) = " + std::to_string(r) +
            ", |C_lambda|+1 = " + std::to_string(rrwRegularity(lambda) + 1));
      }
    } catch (const std::exception& e) {
      report.counterexamples.push_back("lambda=" + lambda.str() +
                                       ": recession search failed: " +
                                       e.what());
    }
  }

  // Witness validation in a 6x6 box: strongly connected with |C|+1
  // components.
  for (const Partition& lambda : partitionsInBox(6, 6)) {
    ++report.checked;
    const RecessionWitness witness = recessionWitness(lambda);
    if (!witness.stronglyConnected ||
        witness.components != rrwRegularity(lambda) + 1) {
      report.counterexamples.push_back(
          "lambda=" + lambda.str() + ": witness has " +
          std::to_string(witness.components) + " components, strong " +
          boolWord(witness.stronglyConnected));
    }
  }

  // The worked lambda = (6,4,1,1,1) example: |C| = 3, r(B_thick) = 4.
  {
    ++report.checked;
    const Partition lambda({6, 4, 1, 1, 1});
    const RecessionWitness witness = recessionWitness(lambda);
    const RegCertificate cert = adsRegularityThickened(lambda, edgeCap);
    if (rrwRegularity(lambda) != 3 || cert.value != 3 ||
        witness.components != 4 || !witness.stronglyConnected) {
      report.counterexamples.push_back(
          "lambda=6,4,1,1,1: |C| = " + std::to_string(rrwRegularity(lambda)) +
          ", ads = " + std::to_string(cert.value) + ", witness components = " +
          std::to_string(witness.components));
    }
  }

  // Oracle concordance for binomial w: decomposition formula, summed ADS
  // route, and Betti oracle regularity of in(I_w) all agree; convolution
  // holds across every variable-disjoint cluster split of the generators.
  report.checked += sweepAllSizes(
      oracleN, parallel,
      [edgeCap](const Permutation& w, std::vector<std::string>& out) {
        if (!isBinomialPattern(w)) {
          return;
        }
        const int viaDecomposition = regularityDecomposition(w);
        int viaAds = 0;
        for (const DiagramComponent& component : diagramComponents(w)) {
          if (component.rank == 0) {
            continue;
          }
          viaAds +=
              adsRegularityThickened(component.shape.value(), edgeCap).value;
        }
        std::vector<Monomial> gens;
        for (const Polynomial& member :
             reducedSchubertBasis(w, TermOrder()).members) {
          gens.push_back(member.leadMonomial());
        }
        const int viaOracle = bettiOracle(gens).regularity();
        if (viaDecomposition != viaAds || viaOracle != viaDecomposition) {
          out.push_back("w=" + w.compactStr() + ": decomposition " +
                        std::to_string(viaDecomposition) + ", ads " +
                        std::to_string(viaAds) + ", oracle " +
                        std::to_string(viaOracle));
        }
        const std::vector<std::vector<Monomial>> clusters =
            variableClusters(gens);
        if (clusters.size() < 2) {
          return;
        }
        for (size_t c = 0; c < clusters.size(); ++c) {
          std::vector<Monomial> rest;
          for (size_t o = 0; o < clusters.size(); ++o) {
            if (o != c) {
              rest.insert(rest.end(), clusters[o].begin(), clusters[o].end());
            }
          }
          if (!convolutionCheck(clusters[c], rest)) {
            out.push_back("w=" + w.compactStr() +
                          ": convolution fails for cluster " +
                          std::to_string(c + 1) + " of " +
                          std::to_string(clusters.size()));
          }
        }
      },
      report.counterexamples);

  truncateCounterexamples(report);
  report.wallMs = timer.elapsedMs();
  return report;
}

VerificationReport verifyProperties(uint64_t seed) {
  const Stopwatch timer;
  VerificationReport report;
  report.theorem = "properties";
  report.n = 0;
  std::mt19937_64 rng(seed);
  const auto randInt = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
  };
  const auto randSubset = [&](int n, int d) {
    std::vector<int> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<size_t>(d));
    std::sort(pool.begin(), pool.end());
    return pool;
  };
  const auto randPolynomial = [&](const TermOrder& order, int maxTerms) {
    std::vector<Term> terms;
    const int count = randInt(1, maxTerms);
    for (int t = 0; t < count; ++t) {
      std::vector<Monomial::Factor> factors;
      const int width = randInt(1, 3);
      for (int f = 0; f < width; ++f) {
        factors.push_back({{randInt(1, 4), randInt(1, 4)}, randInt(1, 2)});
      }
      int coeff = randInt(-9, 9);
      if (coeff == 0) {
        coeff = 1;
      }
      terms.push_back({Monomial::fromFactors(std::move(factors)),
                       makeRat(coeff)});
    }
    return Polynomial(std::move(terms), order);
  };
  const TermOrder antidiagonalOrders[] = {
      TermOrder(TermOrderKind::Antidiagonal),
      TermOrder(TermOrderKind::AntidiagonalTranspose)};
  const TermOrder allOrders[] = {TermOrder(TermOrderKind::Antidiagonal),
                                 TermOrder(TermOrderKind::AntidiagonalTranspose),
                                 TermOrder(TermOrderKind::Diagonal)};

  // Lead terms of random minors: the antidiagonal product (monic) under
  // both antidiagonal orders, the main diagonal under the control order,
  // and d! terms in every case.
  for (int trial = 0; trial < 200; ++trial) {
    ++report.checked;
    const int n = randInt(2, 8);
    const int d = randInt(1, std::min(5, n));
    const MinorSpec spec{randSubset(n, d), randSubset(n, d)};
    const std::string label = "minor " + minorLabel(spec);
    long long expectedTerms = 1;
    for (int f = 2; f <= d; ++f) {
      expectedTerms *= f;
    }
    const Monomial anti = antidiagonalProduct(spec);
    for (const TermOrder& order : antidiagonalOrders) {
      const Polynomial minor = minorPolynomial(spec, order);
      if (!(minor.leadMonomial() == anti) || minor.leadCoeff() != 1) {
        report.counterexamples.push_back(label + ": lead under " +
                                         order.name() + " is " +
                                         minor.leadTerm().monomial.str());
      }
      if (minor.numTerms() != expectedTerms) {
        report.counterexamples.push_back(
            label + ": " + std::to_string(minor.numTerms()) +
            " terms, expected " + std::to_string(expectedTerms));
      }
    }
    std::vector<Monomial::Factor> diagonalFactors;
    for (int t = 0; t < d; ++t) {
      diagonalFactors.push_back(
          {{spec.rows[static_cast<size_t>(t)], spec.cols[static_cast<size_t>(t)]},
           1});
    }
    const Monomial mainDiagonal =
        Monomial::fromFactors(std::move(diagonalFactors));
    const Polynomial control =
        minorPolynomial(spec, TermOrder(TermOrderKind::Diagonal));
    if (!(control.leadMonomial() == mainDiagonal)) {
      report.counterexamples.push_back(
          label + ": diagonal-order lead is " + control.leadMonomial().str() +
          ", expected the main diagonal");
    }
  }

  // Division reconstruction: f = sum q_i d_i + r with a fully reduced
  // remainder, under a random one of the three orders.
  for (int trial = 0; trial < 200; ++trial) {
    ++report.checked;
    const TermOrder order = allOrders[randInt(0, 2)];
    const std::string label = "division trial " + std::to_string(trial);
    const Polynomial f = randPolynomial(order, 6);
    std::vector<Polynomial> divisors;
    const int divisorCount = randInt(1, 4);
    for (int i = 0; i < divisorCount; ++i) {
      Polynomial divisor = randPolynomial(order, 3);
      if (!divisor.isZero()) {
        divisors.push_back(std::move(divisor));
      }
    }
    if (divisors.empty()) {
      divisors.push_back(Polynomial::constant(makeRat(1), order));
    }
    const DivisionResult result = divide(f, divisors, order);
    Polynomial rebuilt = result.remainder;
    for (size_t i = 0; i < divisors.size(); ++i) {
      rebuilt = rebuilt.plus(result.quotients[i].times(divisors[i]));
    }
    if (!(rebuilt == f)) {
      report.counterexamples.push_back(label + ": reconstruction mismatch");
    }
    for (const Term& term : result.remainder.terms()) {
      for (const Polynomial& divisor : divisors) {
        if (term.monomial.isDivisibleBy(divisor.leadMonomial())) {
          report.counterexamples.push_back(
              label + ": remainder term " + term.monomial.str() +
              " divisible by a divisor lead");
        }
      }
    }
  }

  // reduce_basis is idempotent and independent of the member order on
  // random Schubert generator sets.
  for (int trial = 0; trial < 50; ++trial) {
    ++report.checked;
    const int m = randInt(2, 6);
    std::vector<int> word(static_cast<size_t>(m));
    std::iota(word.begin(), word.end(), 1);
    std::shuffle(word.begin(), word.end(), rng);
    const Permutation w{std::move(word)};
    const TermOrder order = antidiagonalOrders[randInt(0, 1)];
    const std::string label =
        "reduce trial " + std::to_string(trial) + " (w=" + w.compactStr() +
        ", " + order.name() + ")";
    std::vector<Polynomial> gens = gaoYongBasis(w, order);
    const GroebnerBasis reduced =
        reduceBasis({gens, order, BasisKind::Groebner});
    if (!isReducedBasisSet(reduced.members, order)) {
      report.counterexamples.push_back(label + ": output is not reduced");
    }
    const GroebnerBasis again = reduceBasis(reduced);
    if (!(again.members == reduced.members)) {
      report.counterexamples.push_back(label + ": not idempotent");
    }
    std::shuffle(gens.begin(), gens.end(), rng);
    const GroebnerBasis shuffled =
        reduceBasis({gens, order, BasisKind::Groebner});
    if (!(shuffled.members == reduced.members)) {
      report.counterexamples.push_back(label +
                                       ": depends on the input order");
    }
  }

  truncateCounterexamples(report);
  report.wallMs = timer.elapsedMs();
  return report;
}

VerificationReport verifyKnutsonMiller(int n, int parallel) {
  const Stopwatch timer;
  VerificationReport report;
  report.theorem = "knutson-miller";
  report.n = n;
  report.checked = sweepAllSizes(
      n, parallel,
      [](const Permutation& w, std::vector<std::string>& out) {
        for (const TermOrderKind kind : {TermOrderKind::Antidiagonal,
                                         TermOrderKind::AntidiagonalTranspose}) {
          const TermOrder order(kind);
          std::vector<Polynomial> gens;
          for (const FultonGenerator& gen : fultonGenerators(w)) {
            gens.push_back(minorPolynomial(gen.minor, order));
          }
          const GroebnerBasis completed = buchberger(gens, order);
          if (completed.members.size() != gens.size()) {
            out.push_back("w=" + w.compactStr() + ": buchberger added " +
                          std::to_string(completed.members.size() -
                                         gens.size()) +
                          " members under " + order.name());
          }
        }
      },
      report.counterexamples);
  truncateCounterexamples(report);
  report.wallMs = timer.elapsedMs();
  return report;
}

}  // namespace schubert
