#include "schubert/polynomial.hpp"

#include <algorithm>

#include "schubert/error.hpp"

namespace schubert {

Polynomial::Polynomial(std::vector<Term> terms, TermOrder order)
    : order_(order) {
  std::sort(terms.begin(), terms.end(), [&order](const Term& a, const Term& b) {
    return order.compare(a.monomial, b.monomial) > 0;
  });
  for (Term& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff == 0) {
        terms_.pop_back();
      }
    } else if (t.coeff != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(const Rat& value, TermOrder order) {
  return Polynomial({{Monomial(), value}}, order);
}

Polynomial Polynomial::fromVariable(GridVar var, TermOrder order) {
  return Polynomial({{Monomial::variable(var), makeRat(1)}}, order);
}

int Polynomial::totalDegree() const {
  int deg = -1;
  for (const Term& t : terms_) {
    deg = std::max(deg, t.monomial.degree());
  }
  return deg;
}

const Term& Polynomial::leadTerm() const {
  if (terms_.empty()) {
    throw Error("zero polynomial has no lead term");
  }
  return terms_.front();
}

Polynomial Polynomial::plus(const Polynomial& other) const {
  const Polynomial& rhs =
      (other.order_ == order_) ? other : other.withOrder(order_);
  Polynomial out(order_);
  out.terms_.reserve(terms_.size() + rhs.terms_.size());
  size_t a = 0;
  size_t b = 0;
  while (a < terms_.size() || b < rhs.terms_.size()) {
    int cmp;
    if (a == terms_.size()) {
      cmp = -1;
    } else if (b == rhs.terms_.size()) {
      cmp = 1;
    } else {
      cmp = order_.compare(terms_[a].monomial, rhs.terms_[b].monomial);
    }
    if (cmp > 0) {
      out.terms_.push_back(terms_[a++]);
    } else if (cmp < 0) {
      out.terms_.push_back(rhs.terms_[b++]);
    } else {
      Rat c = terms_[a].coeff + rhs.terms_[b].coeff;
      if (c != 0) {
        out.terms_.push_back({terms_[a].monomial, std::move(c)});
      }
      ++a;
      ++b;
    }
  }
  return out;
}

Polynomial Polynomial::minus(const Polynomial& other) const {
  return plus(other.negated());
}

Polynomial Polynomial::negated() const {
  Polynomial out(order_);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    out.terms_.push_back({t.monomial, -t.coeff});
  }
  return out;
}

Polynomial Polynomial::timesScalar(const Rat& scalar) const {
  if (scalar == 0) {
    return Polynomial(order_);
  }
  Polynomial out(order_);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    out.terms_.push_back({t.monomial, t.coeff * scalar});
  }
  return out;
}

Polynomial Polynomial::timesTerm(const Monomial& m, const Rat& c) const {
  if (c == 0) {
    return Polynomial(order_);
  }
  // Multiplying every term by a fixed monomial preserves the sort order
  // because term orders are multiplicative.
  Polynomial out(order_);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    out.terms_.push_back({t.monomial.times(m), t.coeff * c});
  }
  return out;
}

Polynomial Polynomial::times(const Polynomial& other) const {
  Polynomial out(order_);
  for (const Term& t : other.terms_) {
    out = out.plus(timesTerm(t.monomial, t.coeff));
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) {
    return *this;
  }
  return timesScalar(makeRat(1) / leadCoeff());
}

Polynomial Polynomial::withOrder(TermOrder order) const {
  if (order == order_) {
    return *this;
  }
  return Polynomial(terms_, order);
}

std::string Polynomial::str() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  for (size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    const bool negative = t.coeff < 0;
    const Rat magnitude = negative ? Rat(-t.coeff) : t.coeff;
    if (i == 0) {
      if (negative) {
        out += "-";
      }
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1 || t.monomial.isOne()) {
      out += ratToString(magnitude);
      if (!t.monomial.isOne()) {
        out += "·";
      }
    }
    if (!t.monomial.isOne()) {
      out += t.monomial.str();
    }
  }
  return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (order_ == o.order_) {
    return terms_ == o.terms_;
  }
  return terms_ == o.withOrder(order_).terms_;
}

}  // namespace schubert
