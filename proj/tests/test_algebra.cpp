#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "schubert/error.hpp"
#include "schubert/groebner.hpp"
#include "schubert/minor.hpp"
#include "schubert/monomial.hpp"
#include "schubert/numeric.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/term_order.hpp"

using namespace schubert;

namespace {

/// Tiny deterministic generator for reproducible random-ish cases, kept
/// independent of the library's own randomized harness.
struct SplitMix {
  uint64_t state;
  uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

Monomial randomMonomial(SplitMix& rng) {
  std::vector<Monomial::Factor> factors;
  const int count = rng.range(0, 3);
  for (int k = 0; k < count; ++k) {
    factors.push_back({{rng.range(1, 3), rng.range(1, 3)}, rng.range(1, 2)});
  }
  return Monomial::fromFactors(std::move(factors));
}

Polynomial randomPolynomial(SplitMix& rng, const TermOrder& order) {
  std::vector<Term> terms;
  const int count = rng.range(0, 4);
  for (int k = 0; k < count; ++k) {
    terms.push_back({randomMonomial(rng), makeRat(rng.range(-4, 4))});
  }
  return Polynomial(std::move(terms), order);
}

/// Independent determinant of the generic submatrix by Leibniz expansion.
Polynomial leibnizDet(const MinorSpec& spec, const TermOrder& order) {
  const int d = spec.size();
  std::vector<int> perm(static_cast<size_t>(d));
  for (int k = 0; k < d; ++k) {
    perm[static_cast<size_t>(k)] = k;
  }
  std::vector<Term> terms;
  do {
    int sign = 1;
    for (int a = 0; a < d; ++a) {
      for (int b = a + 1; b < d; ++b) {
        if (perm[static_cast<size_t>(a)] > perm[static_cast<size_t>(b)]) {
          sign = -sign;
        }
      }
    }
    Monomial product;
    for (int a = 0; a < d; ++a) {
      product = product.times(Monomial::variable(
          {spec.rows[static_cast<size_t>(a)],
           spec.cols[static_cast<size_t>(perm[static_cast<size_t>(a)])]}));
    }
    terms.push_back({product, makeRat(sign)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  // Scale so the antidiagonal coefficient is +1: the reversal permutation
  // has sign (-1)^{d(d-1)/2}.
  Polynomial det(std::move(terms), order);
  return (d * (d - 1) / 2) % 2 == 0 ? det : det.negated();
}

const Monomial kOne;

}  // namespace

TEST_CASE("monomial normalization and arithmetic") {
  const Monomial a = Monomial::fromFactors({{{1, 2}, 1}, {{1, 2}, 1}});
  CHECK(a == Monomial::variable({1, 2}, 2));
  CHECK(a.degree() == 2);
  CHECK_FALSE(a.isSquarefree());
  CHECK(Monomial::fromFactors({{{1, 1}, 0}}) == kOne);
  CHECK_THROWS_AS(Monomial::fromFactors({{{1, 1}, -1}}), InputError);
  CHECK_THROWS_AS(Monomial::variable({0, 1}), InputError);

  const Monomial b = Monomial::variable({2, 1});
  const Monomial ab = a.times(b);
  CHECK(ab.degree() == 3);
  CHECK(ab.isDivisibleBy(a));
  CHECK(ab.isDivisibleBy(b));
  CHECK_FALSE(a.isDivisibleBy(b));
  CHECK(ab.dividedBy(a) == b);
  CHECK(Monomial::lcm(a, ab) == ab);
  CHECK(Monomial::lcm(a, b) == ab);
  CHECK(ab.exponentOf({1, 2}) == 2);
  CHECK(ab.exponentOf({3, 3}) == 0);
  CHECK(ab.str() == "x[1,2]^2·x[2,1]");
  CHECK(kOne.str() == "1");
}

TEST_CASE("term order variable rankings") {
  const TermOrder anti(TermOrderKind::Antidiagonal);
  const TermOrder antiT(TermOrderKind::AntidiagonalTranspose);
  const TermOrder diag(TermOrderKind::Diagonal);

  // Antidiagonal: columns rank first (east largest), rows break ties north.
  CHECK(anti.varAbove({1, 2}, {2, 1}));
  CHECK(anti.varAbove({1, 2}, {2, 2}));
  // Transpose: rows rank first (south largest), columns break ties west.
  CHECK(antiT.varAbove({2, 1}, {1, 2}));
  CHECK(antiT.varAbove({2, 1}, {2, 2}));
  // Diagonal control: northwest variables rank highest.
  CHECK(diag.varAbove({1, 1}, {1, 2}));
  CHECK(diag.varAbove({1, 2}, {2, 1}));

  for (const TermOrder& order : {anti, antiT, diag}) {
    CHECK(TermOrder::fromName(order.name()) == order);
  }
  CHECK(anti.name() == "antidiag");
  CHECK(antiT.name() == "antidiag-transpose");
  CHECK(diag.name() == "diag");
  CHECK_THROWS_AS(TermOrder::fromName("grevlex"), InputError);
}

TEST_CASE("term orders are multiplicative well-orders with 1 minimal") {
  SplitMix rng{7};
  for (const TermOrderKind kind :
       {TermOrderKind::Antidiagonal, TermOrderKind::AntidiagonalTranspose,
        TermOrderKind::Diagonal}) {
    const TermOrder order(kind);
    for (int trial = 0; trial < 300; ++trial) {
      const Monomial a = randomMonomial(rng);
      const Monomial b = randomMonomial(rng);
      const Monomial c = randomMonomial(rng);
      // Antisymmetry and totality.
      const int ab = order.compare(a, b);
      CHECK(ab == -order.compare(b, a));
      CHECK((ab == 0) == (a == b));
      // 1 is minimal.
      if (!a.isOne()) {
        CHECK(order.less(kOne, a));
      }
      // Multiplicativity.
      if (ab < 0) {
        CHECK(order.less(a.times(c), b.times(c)));
      }
      // Transitivity spot check.
      if (ab < 0 && order.less(b, c)) {
        CHECK(order.less(a, c));
      }
    }
  }
}

TEST_CASE("polynomial construction and string form") {
  const TermOrder order;
  const Monomial x12 = Monomial::variable({1, 2});
  const Monomial x21 = Monomial::variable({2, 1});
  const Monomial x11 = Monomial::variable({1, 1});

  const Polynomial p({{x12.times(x21), makeRat(1)}, {x11, makeRat(-2)}},
                     order);
  CHECK(p.str() == "x[1,2]·x[2,1] - 2·x[1,1]");
  CHECK(p.numTerms() == 2);
  CHECK(p.totalDegree() == 2);
  CHECK(p.leadMonomial() == x12.times(x21));
  CHECK(p.leadCoeff() == makeRat(1));

  const Polynomial q({{x11, makeRat(1, 2)}, {kOne, makeRat(-3)}}, order);
  CHECK(q.str() == "1/2·x[1,1] - 3");
  CHECK(q.monic().leadCoeff() == makeRat(1));
  CHECK(q.monic().str() == "x[1,1] - 6");

  // Terms with equal monomials merge; zero coefficients vanish.
  const Polynomial merged(
      {{x11, makeRat(2)}, {x11, makeRat(-2)}, {x12, makeRat(0)}}, order);
  CHECK(merged.isZero());
  CHECK(merged.str() == "0");
  CHECK(merged.totalDegree() == -1);
  CHECK_THROWS_AS(merged.leadTerm(), Error);
}

TEST_CASE("polynomial arithmetic identities") {
  SplitMix rng{11};
  const TermOrder order;
  for (int trial = 0; trial < 120; ++trial) {
    const Polynomial f = randomPolynomial(rng, order);
    const Polynomial g = randomPolynomial(rng, order);
    const Polynomial h = randomPolynomial(rng, order);
    CHECK(f.plus(g) == g.plus(f));
    CHECK(f.minus(g) == f.plus(g.negated()));
    CHECK(f.plus(f.negated()).isZero());
    CHECK(f.times(g) == g.times(f));
    CHECK(f.times(g.plus(h)) == f.times(g).plus(f.times(h)));
    CHECK(f.timesScalar(makeRat(-3)) ==
          f.times(Polynomial::constant(makeRat(-3), order)));
    if (!f.isZero()) {
      CHECK(f.monic().leadCoeff() == makeRat(1));
      const Term& lead = f.leadTerm();
      CHECK(f.timesTerm(lead.monomial, lead.coeff) ==
            f.times(Polynomial({{lead.monomial, lead.coeff}}, order)));
    }
  }
}

TEST_CASE("withOrder re-sorts without changing content") {
  SplitMix rng{13};
  const TermOrder anti(TermOrderKind::Antidiagonal);
  const TermOrder diag(TermOrderKind::Diagonal);
  for (int trial = 0; trial < 60; ++trial) {
    const Polynomial f = randomPolynomial(rng, anti);
    const Polynomial g = f.withOrder(diag);
    CHECK(f == g);
    for (size_t k = 1; k < g.terms().size(); ++k) {
      CHECK(diag.less(g.terms()[k].monomial, g.terms()[k - 1].monomial));
    }
  }
}

TEST_CASE("division reconstructs the dividend") {
  SplitMix rng{17};
  const TermOrder order;
  for (int trial = 0; trial < 150; ++trial) {
    const Polynomial f = randomPolynomial(rng, order);
    std::vector<Polynomial> divisors;
    const int count = rng.range(1, 3);
    for (int k = 0; k < count; ++k) {
      const Polynomial d = randomPolynomial(rng, order);
      if (!d.isZero()) {
        divisors.push_back(d);
      }
    }
    if (divisors.empty()) {
      continue;
    }
    const DivisionResult result = divide(f, divisors, order);
    Polynomial rebuilt = result.remainder;
    for (size_t k = 0; k < divisors.size(); ++k) {
      rebuilt = rebuilt.plus(result.quotients[k].times(divisors[k]));
    }
    CHECK(rebuilt == f);
    // No remainder term is divisible by any divisor lead monomial.
    for (const Term& term : result.remainder.terms()) {
      for (const Polynomial& d : divisors) {
        CHECK_FALSE(term.monomial.isDivisibleBy(d.leadMonomial()));
      }
    }
    CHECK(normalForm(f, divisors, order) == result.remainder);
  }
}

TEST_CASE("textbook lex division example") {
  // With X = x[1,2] > Y = x[1,1] in the antidiagonal (lex) order:
  // X^2 Y + X Y^2 + Y^2 divided by {XY - 1, Y^2 - 1} leaves X + Y + 1.
  const TermOrder order;
  const Monomial X = Monomial::variable({1, 2});
  const Monomial Y = Monomial::variable({1, 1});
  const Polynomial f({{X.times(X).times(Y), makeRat(1)},
                      {X.times(Y).times(Y), makeRat(1)},
                      {Y.times(Y), makeRat(1)}},
                     order);
  const Polynomial d1({{X.times(Y), makeRat(1)}, {kOne, makeRat(-1)}}, order);
  const Polynomial d2({{Y.times(Y), makeRat(1)}, {kOne, makeRat(-1)}}, order);
  const Polynomial expected(
      {{X, makeRat(1)}, {Y, makeRat(1)}, {kOne, makeRat(1)}}, order);
  CHECK(normalForm(f, {d1, d2}, order) == expected);
}

TEST_CASE("s-polynomials cancel lead terms") {
  SplitMix rng{23};
  const TermOrder order;
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial f = randomPolynomial(rng, order);
    const Polynomial g = randomPolynomial(rng, order);
    if (f.isZero() || g.isZero()) {
      continue;
    }
    const Polynomial s = sPolynomial(f, g, order);
    const Monomial lcm = Monomial::lcm(f.leadMonomial(), g.leadMonomial());
    if (!s.isZero()) {
      CHECK(order.less(s.leadMonomial(), lcm));
    }
  }
}

TEST_CASE("buchberger on a pinned lex ideal") {
  // Ideal (X^2 + Y^2, XY) with X = x[1,2] > Y = x[1,1]: the completed basis
  // acquires Y^3 and nothing else.
  const TermOrder order;
  const Monomial X = Monomial::variable({1, 2});
  const Monomial Y = Monomial::variable({1, 1});
  const Polynomial f(
      {{X.times(X), makeRat(1)}, {Y.times(Y), makeRat(1)}}, order);
  const Polynomial g({{X.times(Y), makeRat(1)}}, order);

  const GroebnerBasis basis = buchberger({f, g}, order);
  CHECK(basis.kind == BasisKind::Groebner);
  REQUIRE(basis.members.size() == 3);
  CHECK(basis.members[2] ==
        Polynomial({{Y.times(Y).times(Y), makeRat(1)}}, order));
  CHECK(isGroebnerBasis(basis.members, order));
  CHECK_FALSE(isGroebnerBasis({f, g}, order));

  const GroebnerBasis reduced = reduceBasis(basis);
  CHECK(reduced.kind == BasisKind::Reduced);
  REQUIRE(reduced.members.size() == 3);
  // Ascending lead monomials: Y^3 < XY < X^2.
  CHECK(reduced.members[0].leadMonomial() == Y.times(Y).times(Y));
  CHECK(reduced.members[1].leadMonomial() == X.times(Y));
  CHECK(reduced.members[2].leadMonomial() == X.times(X));
  CHECK(isReducedBasisSet(reduced.members, order));

  // A redundant member disappears under minimalization.
  std::vector<Polynomial> padded = basis.members;
  padded.push_back(f.times(g));
  const GroebnerBasis minimal =
      minimalize({padded, order, BasisKind::Groebner});
  CHECK(minimal.members.size() == 3);
}

TEST_CASE("zero generators are dropped") {
  const TermOrder order;
  const GroebnerBasis basis = buchberger({Polynomial(order)}, order);
  CHECK(basis.members.empty());
  CHECK(isGroebnerBasis({}, order));
}

TEST_CASE("minor polynomials match Leibniz expansion") {
  const std::vector<MinorSpec> specs = {
      {{1}, {2}},
      {{1, 2}, {1, 2}},
      {{1, 3}, {2, 4}},
      {{1, 2, 3}, {1, 3, 4}},
      {{1, 2, 3, 4}, {1, 2, 3, 4}},
  };
  for (const TermOrderKind kind :
       {TermOrderKind::Antidiagonal, TermOrderKind::AntidiagonalTranspose}) {
    const TermOrder order(kind);
    for (const MinorSpec& spec : specs) {
      const Polynomial minor = minorPolynomial(spec, order);
      CHECK(minor == leibnizDet(spec, order));
      CHECK(minor.leadMonomial() == antidiagonalProduct(spec));
      CHECK(minor.leadCoeff() == makeRat(1));
      CHECK(minor.numTerms() <= 24);
    }
  }
  // The diagonal control order picks the main diagonal instead.
  const TermOrder diag(TermOrderKind::Diagonal);
  const MinorSpec square{{1, 2}, {1, 2}};
  CHECK(minorPolynomial(square, diag).leadMonomial() ==
        Monomial::variable({1, 1}).times(Monomial::variable({2, 2})));

  CHECK(antidiagonalProduct({{1, 3}, {2, 4}}) ==
        Monomial::variable({1, 4}).times(Monomial::variable({3, 2})));
  CHECK_THROWS_AS(validateMinorSpec({{2, 1}, {1, 2}}), InputError);
  CHECK_THROWS_AS(validateMinorSpec({{1, 2}, {1}}), InputError);
  CHECK_THROWS_AS(validateMinorSpec({{}, {}}), InputError);
}

TEST_CASE("rational coefficient string round trip") {
  CHECK(ratToString(makeRat(-3, 6)) == "-1/2");
  CHECK(ratFromString("-1/2") == makeRat(-1, 2));
  CHECK(ratFromString("7") == makeRat(7));
  CHECK_THROWS_AS(ratFromString("seven"), Error);
}
