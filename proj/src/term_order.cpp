#include "schubert/term_order.hpp"

#include <algorithm>

#include "schubert/error.hpp"

namespace schubert {

bool TermOrder::varAbove(GridVar a, GridVar b) const {
  switch (kind_) {
    case TermOrderKind::Antidiagonal:
      return a.col != b.col ? a.col > b.col : a.row < b.row;
    case TermOrderKind::AntidiagonalTranspose:
      return a.row != b.row ? a.row > b.row : a.col < b.col;
    case TermOrderKind::Diagonal:
      return a.row != b.row ? a.row < b.row : a.col < b.col;
  }
  throw Error("unreachable term-order kind");
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  // Lexicographic comparison over the variable ranking: walk both factor
  // lists in descending variable rank; the first discrepancy decides.
  const auto walk = [this](const std::vector<Monomial::Factor>& fa,
                           const std::vector<Monomial::Factor>& fb) {
    size_t i = 0;
    size_t j = 0;
    while (i < fa.size() && j < fb.size()) {
      if (fa[i].first == fb[j].first) {
        if (fa[i].second != fb[j].second) {
          return fa[i].second > fb[j].second ? 1 : -1;
        }
        ++i;
        ++j;
      } else if (varAbove(fa[i].first, fb[j].first)) {
        return 1;  // a has a positive exponent on the higher variable
      } else {
        return -1;
      }
    }
    if (i < fa.size()) {
      return 1;
    }
    if (j < fb.size()) {
      return -1;
    }
    return 0;
  };

  if (kind_ == TermOrderKind::Antidiagonal) {
    // Canonical storage is already sorted by this ranking.
    return walk(a.factors(), b.factors());
  }
  const auto resort = [this](std::vector<Monomial::Factor> f) {
    std::sort(f.begin(), f.end(),
              [this](const Monomial::Factor& x, const Monomial::Factor& y) {
                return varAbove(x.first, y.first);
              });
    return f;
  };
  return walk(resort(a.factors()), resort(b.factors()));
}

std::string TermOrder::name() const {
  switch (kind_) {
    case TermOrderKind::Antidiagonal:
      return "antidiag";
    case TermOrderKind::AntidiagonalTranspose:
      return "antidiag-transpose";
    case TermOrderKind::Diagonal:
      return "diag";
  }
  throw Error("unreachable term-order kind");
}

TermOrder TermOrder::fromName(const std::string& name) {
  if (name == "antidiag") {
    return TermOrder(TermOrderKind::Antidiagonal);
  }
  if (name == "antidiag-transpose") {
    return TermOrder(TermOrderKind::AntidiagonalTranspose);
  }
  if (name == "diag") {
    return TermOrder(TermOrderKind::Diagonal);
  }
  throw InputError("unknown term order '" + name + "'");
}

}  // namespace schubert
