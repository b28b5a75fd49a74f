#include "schubert/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert {

namespace {

std::vector<int> invertWord(const std::vector<int>& word) {
  std::vector<int> inv(word.size(), 0);
  for (size_t i = 0; i < word.size(); ++i) {
    inv[static_cast<size_t>(word[i]) - 1] = static_cast<int>(i) + 1;
  }
  return inv;
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  if (word_.empty()) {
    throw InputError("permutation word must be nonempty");
  }
  const int n = static_cast<int>(word_.size());
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : word_) {
    if (v < 1 || v > n) {
      throw InputError("permutation entry " + std::to_string(v) +
                       " out of range 1.." + std::to_string(n));
    }
    if (seen[static_cast<size_t>(v) - 1]) {
      throw InputError("permutation entry " + std::to_string(v) + " repeated");
    }
    seen[static_cast<size_t>(v) - 1] = true;
  }
  inverse_ = invertWord(word_);
}

Permutation Permutation::identity(int n) {
  if (n < 1) {
    throw InputError("permutation size must be positive");
  }
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

Permutation Permutation::parse(const std::string& text) {
  std::string trimmed;
  trimmed.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) || !trimmed.empty()) {
      trimmed.push_back(c);
    }
  }
  while (!trimmed.empty() &&
         std::isspace(static_cast<unsigned char>(trimmed.back()))) {
    trimmed.pop_back();
  }
  if (trimmed.empty()) {
    throw InputError("empty permutation string");
  }

  const bool hasSeparator =
      trimmed.find_first_of(", \t") != std::string::npos;
  std::vector<int> word;
  if (hasSeparator) {
    std::string normalized = trimmed;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream in(normalized);
    int value = 0;
    while (in >> value) {
      word.push_back(value);
    }
    if (!in.eof()) {
      throw InputError("could not parse permutation '" + text + "'");
    }
  } else {
    for (char c : trimmed) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw InputError("could not parse permutation '" + text + "'");
      }
      word.push_back(c - '0');
    }
  }
  return Permutation(std::move(word));
}

Permutation Permutation::inverse() const {
  return Permutation(inverse_);
}

int Permutation::inversionCount() const {
  int count = 0;
  const int n = size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if ((*this)(i) > (*this)(j)) {
        ++count;
      }
    }
  }
  return count;
}

bool Permutation::isIdentity() const {
  for (int i = 1; i <= size(); ++i) {
    if ((*this)(i) != i) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::embed(int m) const {
  if (m < size()) {
    throw InputError("cannot embed permutation of size " +
                     std::to_string(size()) + " into S_" + std::to_string(m));
  }
  std::vector<int> word = word_;
  for (int v = size() + 1; v <= m; ++v) {
    word.push_back(v);
  }
  return Permutation(std::move(word));
}

std::string Permutation::str() const {
  std::string out;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (i > 0) {
      out.push_back(',');
    }
    out += std::to_string(word_[i]);
  }
  return out;
}

std::string Permutation::compactStr() const {
  if (size() > 9) {
    return str();
  }
  std::string out;
  for (int v : word_) {
    out.push_back(static_cast<char>('0' + v));
  }
  return out;
}

void forEachPermutation(int n, const std::function<void(const Permutation&)>& fn) {
  if (n < 1) {
    throw InputError("permutation size must be positive");
  }
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    fn(Permutation(word));
  } while (std::next_permutation(word.begin(), word.end()));
}

void forEachPermutationWithFirst(int n, int firstValue,
                                 const std::function<void(const Permutation&)>& fn) {
  if (n < 1) {
    throw InputError("permutation size must be positive");
  }
  if (firstValue < 1 || firstValue > n) {
    throw InputError("first value out of range");
  }
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v) {
    if (v != firstValue) {
      rest.push_back(v);
    }
  }
  std::vector<int> word(static_cast<size_t>(n));
  word[0] = firstValue;
  do {
    std::copy(rest.begin(), rest.end(), word.begin() + 1);
    fn(Permutation(word));
  } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace schubert
