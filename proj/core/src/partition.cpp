#include "invmaj/partition.hpp"

#include <numeric>
#include <sstream>

#include "invmaj/errors.hpp"

namespace invmaj {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw precondition_error("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw precondition_error("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::column_height(int c) const {
  int h = 0;
  for (int p : parts_) {
    if (p >= c) ++h;
    else break;
  }
  return h;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

Partition conjugate(const Partition& p) {
  std::vector<int> out;
  int width = p.rows() ? p.parts()[0] : 0;
  out.reserve(width);
  for (int c = 1; c <= width; ++c) out.push_back(p.column_height(c));
  return Partition(std::move(out));
}

Partition corner_removal(const Partition& mu, int i) {
  if (i < 1 || i > mu.rows()) throw precondition_error("corner_removal: row index out of range");
  int len = mu.parts()[i - 1];
  // Lowest row with the same length as row i owns the corner of column `len`.
  int t = i;
  while (t < mu.rows() && mu.parts()[t] == len) ++t;
  std::vector<int> parts = mu.parts();
  parts[t - 1] -= 1;
  if (parts[t - 1] == 0) parts.erase(parts.begin() + (t - 1));
  return Partition(std::move(parts));
}

namespace {
void partitions_rec(int n, int max_part, int max_rows, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(acc);
    return;
  }
  if (max_rows == 0) return;
  for (int p = std::min(n, max_part); p >= 1; --p) {
    acc.push_back(p);
    partitions_rec(n - p, p, max_rows - 1, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n, int max_rows) {
  std::vector<Partition> out;
  std::vector<int> acc;
  partitions_rec(n, n, max_rows < 0 ? n : max_rows, acc, out);
  return out;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw precondition_error("bad partition literal: " + text);
    parts.push_back(std::stoi(tok));
  }
  return Partition(std::move(parts));
}

}  // namespace invmaj
