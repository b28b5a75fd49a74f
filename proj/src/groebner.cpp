#include "schubert/groebner.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "schubert/error.hpp"

namespace schubert {

namespace {

bool leadsCoprime(const Monomial& a, const Monomial& b) {
  size_t i = 0;
  size_t j = 0;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first == fb[j].first) {
      return false;
    }
    if (canonicalVarBefore(fa[i].first, fb[j].first)) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

std::vector<Polynomial> alignOrders(const std::vector<Polynomial>& polys,
                                    const TermOrder& order,
                                    bool forbidZero) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const Polynomial& p : polys) {
    if (p.isZero()) {
      if (forbidZero) {
        throw InputError("zero polynomial not allowed here");
      }
      continue;
    }
    out.push_back(p.withOrder(order));
  }
  return out;
}

void sortByLead(std::vector<Polynomial>& members, const TermOrder& order) {
  std::sort(members.begin(), members.end(),
            [&order](const Polynomial& a, const Polynomial& b) {
              return order.compare(a.leadMonomial(), b.leadMonomial()) < 0;
            });
}

}  // namespace

DivisionResult divide(const Polynomial& f,
                      const std::vector<Polynomial>& divisors,
                      const TermOrder& order) {
  const std::vector<Polynomial> divs =
      alignOrders(divisors, order, /*forbidZero=*/true);

  DivisionResult result;
  result.quotients.assign(divs.size(), Polynomial(order));
  result.remainder = Polynomial(order);

  Polynomial p = f.withOrder(order);
  std::vector<Term> remainderTerms;
  while (!p.isZero()) {
    const Term lt = p.leadTerm();
    bool reduced = false;
    for (size_t i = 0; i < divs.size(); ++i) {
      if (lt.monomial.isDivisibleBy(divs[i].leadMonomial())) {
        const Monomial m = lt.monomial.dividedBy(divs[i].leadMonomial());
        const Rat c = lt.coeff / divs[i].leadCoeff();
        result.quotients[i] =
            result.quotients[i].plus(Polynomial({{m, c}}, order));
        p = p.minus(divs[i].timesTerm(m, c));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainderTerms.push_back(lt);
      p = p.minus(Polynomial({lt}, order));
    }
  }
  result.remainder = Polynomial(std::move(remainderTerms), order);
  return result;
}

Polynomial normalForm(const Polynomial& f,
                      const std::vector<Polynomial>& divisors,
                      const TermOrder& order) {
  return divide(f, divisors, order).remainder;
}

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g,
                       const TermOrder& order) {
  const Polynomial a = f.withOrder(order);
  const Polynomial b = g.withOrder(order);
  if (a.isZero() || b.isZero()) {
    throw InputError("S-polynomial of a zero polynomial");
  }
  const Monomial lcm = Monomial::lcm(a.leadMonomial(), b.leadMonomial());
  const Polynomial left =
      a.timesTerm(lcm.dividedBy(a.leadMonomial()), makeRat(1) / a.leadCoeff());
  const Polynomial right =
      b.timesTerm(lcm.dividedBy(b.leadMonomial()), makeRat(1) / b.leadCoeff());
  return left.minus(right);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         const TermOrder& order) {
  std::vector<Polynomial> basis =
      alignOrders(gens, order, /*forbidZero=*/false);

  std::deque<std::pair<size_t, size_t>> pending;
  for (size_t j = 1; j < basis.size(); ++j) {
    for (size_t i = 0; i < j; ++i) {
      pending.push_back({i, j});
    }
  }
  while (!pending.empty()) {
    const auto [i, j] = pending.front();
    pending.pop_front();
    if (leadsCoprime(basis[i].leadMonomial(), basis[j].leadMonomial())) {
      continue;  // Buchberger's first criterion
    }
    const Polynomial s = sPolynomial(basis[i], basis[j], order);
    const Polynomial r = normalForm(s, basis, order);
    if (!r.isZero()) {
      basis.push_back(r);
      const size_t k = basis.size() - 1;
      for (size_t a = 0; a < k; ++a) {
        pending.push_back({a, k});
      }
    }
  }
  return GroebnerBasis{std::move(basis), order, BasisKind::Groebner};
}

bool isGroebnerBasis(const std::vector<Polynomial>& gens,
                     const TermOrder& order) {
  const std::vector<Polynomial> basis =
      alignOrders(gens, order, /*forbidZero=*/true);
  for (size_t j = 1; j < basis.size(); ++j) {
    for (size_t i = 0; i < j; ++i) {
      if (leadsCoprime(basis[i].leadMonomial(), basis[j].leadMonomial())) {
        continue;
      }
      const Polynomial s = sPolynomial(basis[i], basis[j], order);
      if (!normalForm(s, basis, order).isZero()) {
        return false;
      }
    }
  }
  return true;
}

GroebnerBasis minimalize(const GroebnerBasis& basis) {
  if (basis.kind == BasisKind::Raw) {
    throw InputError("minimalize requires a Groebner basis");
  }
  std::vector<Polynomial> sorted =
      alignOrders(basis.members, basis.order, /*forbidZero=*/false);
  // Ascending by lead monomial puts potential divisors first: in any
  // multiplicative order a proper divisor of a monomial is smaller.
  sortByLead(sorted, basis.order);
  std::vector<Polynomial> kept;
  for (const Polynomial& g : sorted) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&g](const Polynomial& h) {
          return g.leadMonomial().isDivisibleBy(h.leadMonomial());
        });
    if (!redundant) {
      kept.push_back(g.monic());
    }
  }
  return GroebnerBasis{std::move(kept), basis.order, BasisKind::Minimal};
}

GroebnerBasis reduceBasis(const GroebnerBasis& basis) {
  GroebnerBasis minimal = minimalize(basis);
  std::vector<Polynomial>& members = minimal.members;

  // Tail-reduce each member against the current others until stable. Lead
  // terms are fixed points (pairwise non-divisible after minimalization),
  // so only tails shrink; the loop terminates by the well-ordering of terms.
  bool changed = true;
  int rounds = 0;
  while (changed) {
    changed = false;
    if (++rounds > 1000) {
      throw Error("basis reduction failed to stabilize");
    }
    for (size_t i = 0; i < members.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(members.size() - 1);
      for (size_t j = 0; j < members.size(); ++j) {
        if (j != i) {
          others.push_back(members[j]);
        }
      }
      if (others.empty()) {
        continue;
      }
      const Polynomial h =
          normalForm(members[i], others, minimal.order).monic();
      if (!(h == members[i])) {
        members[i] = h;
        changed = true;
      }
    }
  }
  sortByLead(members, minimal.order);
  return GroebnerBasis{std::move(members), minimal.order, BasisKind::Reduced};
}

bool isReducedBasisSet(const std::vector<Polynomial>& members,
                       const TermOrder& order) {
  const std::vector<Polynomial> basis =
      alignOrders(members, order, /*forbidZero=*/true);
  for (const Polynomial& g : basis) {
    if (g.leadCoeff() != 1) {
      return false;
    }
  }
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) {
        continue;
      }
      for (const Term& t : basis[j].terms()) {
        if (t.monomial.isDivisibleBy(basis[i].leadMonomial())) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace schubert
