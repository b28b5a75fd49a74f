#include "schubert/patterns.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>

#include "schubert/error.hpp"

namespace schubert {

namespace {

/// Depth-first search over subsequences. positions[k] is the index in w
/// (1-based) matched to pattern position k+1. Order-isomorphism is enforced
/// incrementally: when appending index i with value w(i), the rank of w(i)
/// among the already-chosen values must equal the rank of p(k+1) among
/// p(1..k+1).
bool containsFrom(const Permutation& w, const Permutation& p, size_t depth,
                  int minIndex, std::vector<int>& values) {
  const size_t m = static_cast<size_t>(p.size());
  if (depth == m) {
    return true;
  }
  // Remaining pattern positions need this many indices after minIndex - 1.
  const int remaining = static_cast<int>(m - depth);
  for (int i = minIndex; i + remaining - 1 <= w.size(); ++i) {
    const int v = w(i);
    bool ok = true;
    for (size_t k = 0; k < depth && ok; ++k) {
      const bool wLess = values[k] < v;
      const bool pLess = p(static_cast<int>(k) + 1) < p(static_cast<int>(depth) + 1);
      ok = (wLess == pLess);
    }
    if (!ok) {
      continue;
    }
    values.push_back(v);
    if (containsFrom(w, p, depth + 1, i + 1, values)) {
      return true;
    }
    values.pop_back();
  }
  return false;
}

/// Backtracking enumeration of pattern-avoiding words. Because classical
/// pattern containment is monotone under taking prefixes of the word being
/// built (any occurrence lies inside some prefix and involves its last letter
/// first at the step that completes it), it suffices to re-test only
/// occurrences using the newly placed letter.
bool newLetterCompletesPattern(const std::vector<int>& prefix,
                               const Permutation& p) {
  const size_t m = static_cast<size_t>(p.size());
  if (prefix.size() < m) {
    return false;
  }
  // Force pattern position m to map to the last letter of the prefix, then
  // search for the earlier m-1 positions.
  const int last = prefix.back();
  std::vector<int> values;
  values.reserve(m);
  std::function<bool(size_t, size_t)> go = [&](size_t depth, size_t minIndex) {
    if (depth == m - 1) {
      // Check last letter against all chosen values.
      for (size_t k = 0; k < depth; ++k) {
        const bool wLess = values[k] < last;
        const bool pLess = p(static_cast<int>(k) + 1) < p(static_cast<int>(m));
        if (wLess != pLess) {
          return false;
        }
      }
      return true;
    }
    const size_t remaining = (m - 1) - depth;
    for (size_t i = minIndex; i + remaining - 1 < prefix.size() - 1; ++i) {
      const int v = prefix[i];
      bool ok = true;
      for (size_t k = 0; k < depth && ok; ++k) {
        const bool wLess = values[k] < v;
        const bool pLess =
            p(static_cast<int>(k) + 1) < p(static_cast<int>(depth) + 1);
        ok = (wLess == pLess);
      }
      if (!ok) {
        continue;
      }
      values.push_back(v);
      if (go(depth + 1, i + 1)) {
        return true;
      }
      values.pop_back();
    }
    return false;
  };
  return go(0, 0);
}

void enumerateRec(int n, std::vector<int>& prefix, std::vector<bool>& used,
                  const std::vector<Permutation>& patterns,
                  const std::function<void(const Permutation&)>& emit) {
  if (static_cast<int>(prefix.size()) == n) {
    emit(Permutation(prefix));
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[static_cast<size_t>(v) - 1]) {
      continue;
    }
    prefix.push_back(v);
    bool pruned = false;
    for (const Permutation& p : patterns) {
      if (newLetterCompletesPattern(prefix, p)) {
        pruned = true;
        break;
      }
    }
    if (!pruned) {
      used[static_cast<size_t>(v) - 1] = true;
      enumerateRec(n, prefix, used, patterns, emit);
      used[static_cast<size_t>(v) - 1] = false;
    }
    prefix.pop_back();
  }
}

}  // namespace

bool containsPattern(const Permutation& w, const Permutation& p) {
  if (p.size() > w.size()) {
    return false;
  }
  std::vector<int> values;
  values.reserve(static_cast<size_t>(p.size()));
  return containsFrom(w, p, 0, 1, values);
}

bool avoidsAll(const Permutation& w, const std::vector<Permutation>& patterns) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const Permutation& p) { return containsPattern(w, p); });
}

std::vector<Permutation> enumerateAvoiders(int n,
                                           const std::vector<Permutation>& patterns) {
  if (n < 1) {
    throw InputError("permutation size must be positive");
  }
  std::vector<Permutation> out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<size_t>(n));
  std::vector<bool> used(static_cast<size_t>(n), false);
  enumerateRec(n, prefix, used, patterns,
               [&](const Permutation& w) { out.push_back(w); });
  return out;
}

Int countAvoiders(int n, const std::vector<Permutation>& patterns) {
  if (n < 1) {
    throw InputError("permutation size must be positive");
  }
  Int count = 0;
  std::vector<int> prefix;
  prefix.reserve(static_cast<size_t>(n));
  std::vector<bool> used(static_cast<size_t>(n), false);
  enumerateRec(n, prefix, used, patterns,
               [&](const Permutation&) { count += 1; });
  return count;
}

Int largeSchroder(int n) {
  if (n < 0) {
    throw InputError("Schroder index must be nonnegative");
  }
  if (n == 0) {
    return 1;
  }
  if (n == 1) {
    return 2;
  }
  Int prev2 = 1;  // s(0)
  Int prev1 = 2;  // s(1)
  for (int k = 2; k <= n; ++k) {
    Int numerator = (6 * k - 3) * prev1 - (k - 2) * prev2;
    Int quotient;
    Int remainder;
    mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(),
                numerator.get_mpz_t(), Int(k + 1).get_mpz_t());
    if (remainder != 0) {
      throw Error("Schroder recurrence produced a non-integer value");
    }
    prev2 = prev1;
    prev1 = quotient;
  }
  return prev1;
}

std::vector<Permutation> rankBoundForbiddenPatterns(int k) {
  if (k < 1) {
    throw InputError("rank bound must be positive");
  }
  std::vector<Permutation> out;
  std::vector<int> head(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    head[static_cast<size_t>(i)] = i + 1;
  }
  do {
    std::vector<int> word = head;
    word.push_back(k + 2);
    word.push_back(k + 1);
    out.emplace_back(std::move(word));
  } while (std::next_permutation(head.begin(), head.end()));
  return out;
}

std::vector<Permutation> vexillaryForbiddenPatterns() {
  return {Permutation({2, 1, 4, 3})};
}

std::vector<Permutation> binomialForbiddenPatterns() {
  return {Permutation({1, 2, 4, 3}), Permutation({2, 1, 4, 3})};
}

}  // namespace schubert
