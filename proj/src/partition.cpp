#include "schubert/partition.hpp"

#include <numeric>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw InputError("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InputError("partition parts must be weakly decreasing");
    }
  }
}

Partition Partition::parse(const std::string& text) {
  std::string normalized = text;
  for (char& c : normalized) {
    if (c == ',') {
      c = ' ';
    }
  }
  std::istringstream in(normalized);
  std::vector<int> parts;
  int value = 0;
  while (in >> value) {
    parts.push_back(value);
  }
  if (!in.eof()) {
    throw InputError("could not parse partition '" + text + "'");
  }
  if (parts.size() == 1 && parts[0] == 0) {
    parts.clear();
  }
  return Partition(std::move(parts));
}

int Partition::part(int i) const {
  if (i < 1) {
    throw InputError("partition part index must be positive");
  }
  if (i > numParts()) {
    return 0;
  }
  return parts_[static_cast<size_t>(i) - 1];
}

int Partition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::containsCell(int i, int j) const {
  if (i < 1 || j < 1) {
    return false;
  }
  return j <= part(i);
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  for (int j = 1; j <= width(); ++j) {
    int count = 0;
    for (int p : parts_) {
      if (p >= j) {
        ++count;
      }
    }
    conj.push_back(count);
  }
  return Partition(std::move(conj));
}

std::string Partition::str() const {
  if (parts_.empty()) {
    return "0";
  }
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) {
      out.push_back(',');
    }
    out += std::to_string(parts_[i]);
  }
  return out;
}

}  // namespace schubert
