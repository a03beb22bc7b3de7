#pragma once

#include <string>
#include <vector>

namespace invmaj {

// Integer partition with weakly decreasing positive parts.  Drawn in French
// notation: row 1 is the bottom (longest) row, row i has parts[i-1] cells.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int size() const;

  // Length of row r, 1-based; 0 when the row does not exist.
  int row_length(int r) const {
    return (r >= 1 && r <= rows()) ? parts_[r - 1] : 0;
  }
  // Height of column c, 1-based.
  int column_height(int c) const;

  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  std::string to_string() const;  // "3,2,1"; "-" for the empty partition

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& p);

// mu^(i): remove the corner square of the column holding the last cell of
// row i, i.e. drop one cell from the lowest row equal in length to row i.
Partition corner_removal(const Partition& mu, int i);

// All partitions of n, optionally with at most max_rows parts.
std::vector<Partition> partitions_of(int n, int max_rows = -1);

Partition parse_partition(const std::string& text);

}  // namespace invmaj
