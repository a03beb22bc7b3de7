#include "invmaj/t1.hpp"

#include <algorithm>

#include "invmaj/errors.hpp"
#include "invmaj/statistics.hpp"
#include "invmaj/word_codes.hpp"

namespace invmaj {

namespace {
void require_distinct_filling(const Filling& f, const char* who) {
  std::vector<int> all = alphabet_of(f);
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw precondition_error(std::string(who) + ": entries must be distinct");
}

// Carlitz bijection in the maj -> inv direction on a column word.
std::vector<int> column_to_row(const std::vector<int>& column_word) {
  std::vector<int> letters(column_word);
  std::sort(letters.begin(), letters.end());
  return invcode_word_inverse(majcode_column_word(column_word), letters);
}

std::vector<int> row_to_column(const std::vector<int>& row_word) {
  std::vector<int> letters(row_word);
  std::sort(letters.begin(), letters.end());
  return majcode_column_word_inverse(invcode_word(row_word), letters);
}
}  // namespace

std::vector<int> row_inversion_targets(const std::vector<int>& row,
                                       const std::vector<int>& base) {
  std::vector<int> targets(row.size(), 0);
  for (size_t i = 0; i < row.size(); ++i) {
    int b = i < base.size() ? base[i] : 0;
    for (size_t j = i + 1; j < row.size(); ++j)
      if (relative_inversion_triple(row[i], row[j], b)) ++targets[i];
  }
  return targets;
}

std::vector<int> cyclic_row_insert(const std::vector<int>& base, std::vector<int> letters,
                                   const std::vector<int>& targets) {
  if (letters.size() != targets.size())
    throw precondition_error("cyclic_row_insert: one target per letter required");
  if (letters.size() > base.size() && !base.empty())
    throw precondition_error("cyclic_row_insert: row longer than its base");
  std::vector<int> out;
  out.reserve(letters.size());
  for (size_t pos = 0; pos < targets.size(); ++pos) {
    int b = pos < base.size() ? base[pos] : 0;
    // sort remaining letters cyclically, strictly-above-b first
    std::vector<int> order(letters);
    std::sort(order.begin(), order.end(), [b](int x, int y) {
      return std::make_pair(x > b ? 0 : 1, x) < std::make_pair(y > b ? 0 : 1, y);
    });
    int want = targets[pos];
    if (want < 0 || want >= static_cast<int>(order.size()))
      throw precondition_error("cyclic_row_insert: unachievable target");
    int chosen = order[want];
    // the count of strictly-cyclically-smaller remaining letters must equal
    // the target exactly; with repeated letters only block boundaries work
    int strictly_before = 0;
    for (int x : order)
      if (std::make_pair(x > b ? 0 : 1, x) < std::make_pair(chosen > b ? 0 : 1, chosen))
        ++strictly_before;
    if (strictly_before != want)
      throw precondition_error("cyclic_row_insert: unachievable target");
    out.push_back(chosen);
    letters.erase(std::find(letters.begin(), letters.end(), chosen));
  }
  return out;
}

Filling t1_map(const Filling& f) {
  require_distinct_filling(f, "t1_map");
  const Partition& mu = f.shape();
  Partition conj = conjugate(mu);

  std::vector<std::vector<int>> rows;
  int width = mu.rows() ? mu.parts()[0] : 0;
  for (int c = 1; c <= width; ++c) {
    std::vector<int> w = column_to_row(f.column_word(c));
    if (c == 1) {
      rows.push_back(w);
    } else {
      std::vector<int> targets = invcode_left_counts(w);
      rows.push_back(cyclic_row_insert(rows.back(), w, targets));
    }
  }
  return Filling(conj, std::move(rows));
}

Filling t1_map_inverse(const Filling& f) {
  require_distinct_filling(f, "t1_map_inverse");
  const Partition& mu = f.shape();
  Partition conj = conjugate(mu);

  std::vector<std::vector<int>> cols(mu.rows());
  for (int r = mu.rows(); r >= 1; --r) {
    std::vector<int> w;
    if (r == 1) {
      w = f.row(1);
    } else {
      std::vector<int> targets = row_inversion_targets(f.row(r), f.row(r - 1));
      w = word_from_left_counts(f.row(r), targets);
    }
    cols[r - 1] = row_to_column(w);
  }
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= conj.rows(); ++r) {
    std::vector<int> row;
    for (int c = 1; c <= conj.row_length(r); ++c) {
      const std::vector<int>& col = cols[c - 1];
      int height = static_cast<int>(col.size());
      row.push_back(col[height - r]);  // column words are top to bottom
    }
    rows.push_back(std::move(row));
  }
  return Filling(conj, std::move(rows));
}

}  // namespace invmaj
