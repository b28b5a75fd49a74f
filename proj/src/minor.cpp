#include "schubert/minor.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <unordered_map>

#include "schubert/error.hpp"

namespace schubert {

void validateMinorSpec(const MinorSpec& spec) {
  if (spec.rows.empty() || spec.rows.size() != spec.cols.size()) {
    throw InputError("minor spec needs equal nonzero row and column counts");
  }
  const auto strictlyIncreasingPositive = [](const std::vector<int>& v) {
    int prev = 0;
    for (int x : v) {
      if (x <= prev) {
        return false;
      }
      prev = x;
    }
    return true;
  };
  if (!strictlyIncreasingPositive(spec.rows) ||
      !strictlyIncreasingPositive(spec.cols)) {
    throw InputError("minor index sets must be strictly increasing positive");
  }
}

Monomial antidiagonalProduct(const MinorSpec& spec) {
  validateMinorSpec(spec);
  std::vector<Monomial::Factor> factors;
  const int d = spec.size();
  for (int a = 0; a < d; ++a) {
    factors.push_back({{spec.rows[static_cast<size_t>(a)],
                        spec.cols[static_cast<size_t>(d - 1 - a)]},
                       1});
  }
  return Monomial::fromFactors(std::move(factors));
}

namespace {

/// Cofactor expansion along rows, memoized per call on the remaining column
/// bitmask (the remaining row suffix is determined by its population count).
Polynomial expand(const MinorSpec& spec, size_t rowIdx, uint32_t colMask,
                  std::unordered_map<uint32_t, Polynomial>& memo,
                  const TermOrder& order) {
  if (colMask == 0) {
    return Polynomial::constant(makeRat(1), order);
  }
  auto found = memo.find(colMask);
  if (found != memo.end()) {
    return found->second;
  }
  Polynomial sum(order);
  int sign = 1;
  for (size_t c = 0; c < spec.cols.size(); ++c) {
    if ((colMask & (uint32_t{1} << c)) == 0) {
      continue;
    }
    const GridVar var{spec.rows[rowIdx], spec.cols[c]};
    const Polynomial sub = expand(spec, rowIdx + 1,
                                  colMask & ~(uint32_t{1} << c), memo, order);
    sum = sum.plus(sub.timesTerm(Monomial::variable(var), makeRat(sign)));
    sign = -sign;
  }
  memo.emplace(colMask, sum);
  return sum;
}

std::map<MinorSpec, Polynomial>& minorCache() {
  static std::map<MinorSpec, Polynomial> cache;
  return cache;
}

std::mutex& minorCacheMutex() {
  static std::mutex mutex;
  return mutex;
}

}  // namespace

Polynomial minorPolynomial(const MinorSpec& spec, const TermOrder& order) {
  validateMinorSpec(spec);
  if (spec.size() > 16) {
    throw BudgetError("minor size exceeds the supported budget");
  }
  {
    std::lock_guard<std::mutex> lock(minorCacheMutex());
    auto found = minorCache().find(spec);
    if (found != minorCache().end()) {
      return found->second.withOrder(order);
    }
  }
  const TermOrder defaultOrder;
  std::unordered_map<uint32_t, Polynomial> memo;
  Polynomial det =
      expand(spec, 0, (uint32_t{1} << spec.cols.size()) - 1, memo, defaultOrder);
  // Scale so the antidiagonal term (sign (-1)^{d(d-1)/2} in the raw
  // determinant) carries coefficient +1.
  const int d = spec.size();
  if ((d * (d - 1) / 2) % 2 == 1) {
    det = det.negated();
  }
  {
    std::lock_guard<std::mutex> lock(minorCacheMutex());
    minorCache().emplace(spec, det);
  }
  return det.withOrder(order);
}

}  // namespace schubert
