#ifndef SCHUBERT_PERMUTATION_HPP
#define SCHUBERT_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace schubert {

/// A permutation of {1..n} in one-line notation. Immutable after construction;
/// the inverse word is computed once and stored alongside.
class Permutation {
 public:
  /// Builds from a one-line word; throws InputError unless it is a bijection
  /// on {1..n}.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  /// Accepts comma- or whitespace-separated integers, or a digit string for
  /// n <= 9 ("31425").
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(word_.size()); }

  /// w(i), 1-based.
  int operator()(int i) const { return word_[static_cast<size_t>(i) - 1]; }

  /// w^{-1}(j), 1-based.
  int inverseAt(int j) const { return inverse_[static_cast<size_t>(j) - 1]; }

  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;

  int inversionCount() const;

  bool isIdentity() const;

  /// Same permutation embedded in S_m (appends fixed points); m >= n.
  Permutation embed(int m) const;

  /// Comma-separated one-line notation ("3,1,4,2,5").
  std::string str() const;

  /// Compact digit form for n <= 9 ("31425"), else same as str().
  std::string compactStr() const;

  bool operator==(const Permutation& o) const { return word_ == o.word_; }
  std::strong_ordering operator<=>(const Permutation& o) const {
    return word_ <=> o.word_;
  }

 private:
  std::vector<int> word_;
  std::vector<int> inverse_;
};

/// Calls fn for every w in S_n in lexicographic order.
void forEachPermutation(int n, const std::function<void(const Permutation&)>& fn);

/// Lexicographic sweep restricted to w(1) = firstValue (used to partition
/// parallel sweeps by prefix).
void forEachPermutationWithFirst(int n, int firstValue,
                                 const std::function<void(const Permutation&)>& fn);

}  // namespace schubert

#endif
