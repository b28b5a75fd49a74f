#ifndef SCHUBERT_PARTITION_HPP
#define SCHUBERT_PARTITION_HPP

#include <string>
#include <vector>

namespace schubert {

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is allowed.
class Partition {
 public:
  Partition() = default;

  /// Throws InputError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// Parses comma-separated parts; "" and "0" denote the empty partition.
  static Partition parse(const std::string& text);

  int numParts() const { return static_cast<int>(parts_.size()); }

  bool empty() const { return parts_.empty(); }

  /// lambda_i, 1-based; 0 when i exceeds the number of parts.
  int part(int i) const;

  const std::vector<int>& parts() const { return parts_; }

  int sum() const;

  /// Largest part (0 for the empty partition).
  int width() const { return parts_.empty() ? 0 : parts_.front(); }

  /// True iff cell (i, j) lies in the Young diagram: j <= lambda_i.
  bool containsCell(int i, int j) const;

  Partition conjugate() const;

  /// Comma-separated parts; empty partition renders as "0".
  std::string str() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

 private:
  std::vector<int> parts_;
};

}  // namespace schubert

#endif
