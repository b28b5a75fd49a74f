#include "schubert/monomial.hpp"

#include <algorithm>

#include "schubert/error.hpp"

namespace schubert {

Monomial Monomial::variable(GridVar var, int exp) {
  return fromFactors({{var, exp}});
}

Monomial Monomial::fromFactors(std::vector<Factor> factors) {
  for (const Factor& f : factors) {
    if (f.first.row < 1 || f.first.col < 1) {
      throw InputError("grid variable indices must be positive");
    }
    if (f.second < 0) {
      throw InputError("monomial exponents must be nonnegative");
    }
  }
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) {
              return canonicalVarBefore(a.first, b.first);
            });
  Monomial m;
  for (const Factor& f : factors) {
    if (f.second == 0) {
      continue;
    }
    if (!m.factors_.empty() && m.factors_.back().first == f.first) {
      m.factors_.back().second += f.second;
    } else {
      m.factors_.push_back(f);
    }
    m.degree_ += f.second;
  }
  return m;
}

int Monomial::exponentOf(GridVar var) const {
  for (const Factor& f : factors_) {
    if (f.first == var) {
      return f.second;
    }
  }
  return 0;
}

bool Monomial::isSquarefree() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return f.second == 1; });
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  size_t a = 0;
  size_t b = 0;
  while (a < factors_.size() || b < other.factors_.size()) {
    if (b == other.factors_.size() ||
        (a < factors_.size() &&
         canonicalVarBefore(factors_[a].first, other.factors_[b].first))) {
      out.factors_.push_back(factors_[a++]);
    } else if (a == factors_.size() ||
               canonicalVarBefore(other.factors_[b].first, factors_[a].first)) {
      out.factors_.push_back(other.factors_[b++]);
    } else {
      out.factors_.push_back(
          {factors_[a].first, factors_[a].second + other.factors_[b].second});
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

bool Monomial::isDivisibleBy(const Monomial& other) const {
  size_t a = 0;
  for (const Factor& f : other.factors_) {
    while (a < factors_.size() && canonicalVarBefore(factors_[a].first, f.first)) {
      ++a;
    }
    if (a == factors_.size() || !(factors_[a].first == f.first) ||
        factors_[a].second < f.second) {
      return false;
    }
  }
  return true;
}

Monomial Monomial::dividedBy(const Monomial& other) const {
  if (!isDivisibleBy(other)) {
    throw Error("monomial " + str() + " is not divisible by " + other.str());
  }
  Monomial out;
  size_t b = 0;
  for (const Factor& f : factors_) {
    int exp = f.second;
    if (b < other.factors_.size() && other.factors_[b].first == f.first) {
      exp -= other.factors_[b].second;
      ++b;
    }
    if (exp > 0) {
      out.factors_.push_back({f.first, exp});
      out.degree_ += exp;
    }
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  size_t i = 0;
  size_t j = 0;
  while (i < a.factors_.size() || j < b.factors_.size()) {
    if (j == b.factors_.size() ||
        (i < a.factors_.size() &&
         canonicalVarBefore(a.factors_[i].first, b.factors_[j].first))) {
      out.factors_.push_back(a.factors_[i++]);
    } else if (i == a.factors_.size() ||
               canonicalVarBefore(b.factors_[j].first, a.factors_[i].first)) {
      out.factors_.push_back(b.factors_[j++]);
    } else {
      out.factors_.push_back(
          {a.factors_[i].first,
           std::max(a.factors_[i].second, b.factors_[j].second)});
      ++i;
      ++j;
    }
  }
  for (const Factor& f : out.factors_) {
    out.degree_ += f.second;
  }
  return out;
}

std::string Monomial::str() const {
  if (factors_.empty()) {
    return "1";
  }
  std::string out;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) {
      out += "·";
    }
    out += "x[" + std::to_string(factors_[i].first.row) + "," +
           std::to_string(factors_[i].first.col) + "]";
    if (factors_[i].second > 1) {
      out += "^" + std::to_string(factors_[i].second);
    }
  }
  return out;
}

}  // namespace schubert
