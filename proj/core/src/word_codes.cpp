#include "invmaj/word_codes.hpp"

#include <algorithm>
#include <numeric>

#include "invmaj/errors.hpp"
#include "invmaj/statistics.hpp"

namespace invmaj {

Filling column_filling(const std::vector<int>& word) {
  int n = static_cast<int>(word.size());
  std::vector<std::vector<int>> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = {word[n - 1 - i]};  // row 1 = bottom = last letter
  return Filling(Partition(std::vector<int>(n, 1)), std::move(rows));
}

Filling row_filling(const std::vector<int>& word) {
  return Filling(Partition({static_cast<int>(word.size())}), {word});
}

namespace {
// Alphabet index of every position: sort positions by (value, position);
// ties broken by appearance order.
std::vector<int> alphabet_index_by_appearance(const std::vector<int>& w) {
  int n = static_cast<int>(w.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return w[a] < w[b]; });
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[order[i]] = i;
  return idx;
}
}  // namespace

Code invcode_word(const std::vector<int>& w) {
  int n = static_cast<int>(w.size());
  std::vector<int> idx = alphabet_index_by_appearance(w);
  Code code(n, 0);
  for (int p = 0; p < n; ++p) {
    int larger_left = 0;
    for (int q = 0; q < p; ++q)
      if (w[q] > w[p]) ++larger_left;
    code[idx[p]] = larger_left;
  }
  return code;
}

std::vector<int> invcode_word_inverse(const Code& code, const std::vector<int>& sorted_alphabet) {
  int n = static_cast<int>(code.size());
  if (static_cast<int>(sorted_alphabet.size()) != n)
    throw precondition_error("invcode_word_inverse: code/alphabet length mismatch");
  if (!std::is_sorted(sorted_alphabet.begin(), sorted_alphabet.end()))
    throw precondition_error("invcode_word_inverse: alphabet must be sorted");
  if (!is_a_weakly_increasing(code, sorted_alphabet))
    throw precondition_error("invcode_word_inverse: code is not A-weakly increasing");

  // Insert letters from the largest down; entry i asks for code[i] strictly
  // larger letters to the left, and all placed letters are larger.
  std::vector<int> word;
  word.reserve(n);
  for (int i = n - 1; i >= 0; --i) {
    int v = sorted_alphabet[i];
    int target = code[i];
    int seen = 0;
    size_t pos = 0;
    while (pos < word.size() && (seen < target || word[pos] <= v)) {
      if (word[pos] > v) ++seen;
      ++pos;
    }
    if (seen != target)
      throw precondition_error("invcode_word_inverse: code is not a Carlitz code for A");
    word.insert(word.begin() + pos, v);
  }
  return word;
}

std::vector<int> standardize_column_word(const std::vector<int>& w) {
  int n = static_cast<int>(w.size());
  // For each letter value, the labeling order (label 1 = smallest copy).
  // rank[p] = (value, label) sort key for position p.
  std::vector<std::pair<int, int>> key(n);  // (value, label)
  std::vector<int> values(w);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  for (int v : values) {
    // sigma': positions with entry <= v, in top-to-bottom order.
    std::vector<int> sub;
    for (int p = 0; p < n; ++p)
      if (w[p] <= v) sub.push_back(p);
    std::vector<bool> removed(sub.size(), false);
    int copies = 0;
    for (int p : sub)
      if (w[p] == v) ++copies;
    int next_label = copies;
    // Step 2: repeatedly take the bottommost v that is at the very bottom or
    // has neighbors a (above) and b (below) with a > b.
    while (true) {
      int chosen = -1;
      for (int s = static_cast<int>(sub.size()) - 1; s >= 0; --s) {
        if (removed[s] || w[sub[s]] != v) continue;
        int below = s + 1;
        while (below < static_cast<int>(sub.size()) && removed[below]) ++below;
        if (below == static_cast<int>(sub.size())) { chosen = s; break; }  // very bottom
        int above = s - 1;
        while (above >= 0 && removed[above]) --above;
        if (above >= 0 && w[sub[above]] > w[sub[below]]) { chosen = s; break; }
      }
      if (chosen < 0) break;
      key[sub[chosen]] = {v, next_label--};
      removed[chosen] = true;
    }
    // Step 3: remaining copies labeled top to bottom, decreasing.
    for (int s = 0; s < static_cast<int>(sub.size()); ++s) {
      if (removed[s] || w[sub[s]] != v) continue;
      key[sub[s]] = {v, next_label--};
      removed[s] = true;
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[order[i]] = i + 1;
  return out;
}

Filling standardize_column(const Filling& column) {
  if (column.shape().rows() != column.size())
    throw precondition_error("standardize_column: shape must be a single column");
  std::vector<int> w = column.column_word(1);
  return column_filling(standardize_column_word(w));
}

namespace {
// majcode of a permutation word (distinct entries): remove the largest
// remaining entry, record the drop in major index.
Code majcode_permutation(std::vector<int> w) {
  Code code;
  while (!w.empty()) {
    int before = maj_word(w);
    auto it = std::max_element(w.begin(), w.end());
    w.erase(it);
    code.push_back(before - maj_word(w));
  }
  return code;
}

// Inverse: insert 1,2,...,n, each at the unique spot producing the required
// maj increase.
std::vector<int> majcode_permutation_inverse(const Code& code) {
  int n = static_cast<int>(code.size());
  std::vector<int> w;
  for (int v = 1; v <= n; ++v) {
    int target = code[n - v];
    int found = -1;
    for (int pos = 0; pos <= static_cast<int>(w.size()); ++pos) {
      std::vector<int> trial(w);
      trial.insert(trial.begin() + pos, v);
      if (maj_word(trial) - maj_word(w) == target) {
        found = pos;
        break;
      }
    }
    if (found < 0)
      throw not_in_image_error("majcode inverse: no insertion position matches the code");
    w.insert(w.begin() + found, v);
  }
  return w;
}
}  // namespace

Code majcode_column_word(const std::vector<int>& w) {
  return majcode_permutation(standardize_column_word(w));
}

Code majcode_column(const Filling& column) {
  if (column.shape().rows() != column.size())
    throw precondition_error("majcode_column: shape must be a single column");
  return majcode_column_word(column.column_word(1));
}

std::vector<int> majcode_column_word_inverse(const Code& code,
                                             const std::vector<int>& sorted_alphabet) {
  int n = static_cast<int>(code.size());
  if (static_cast<int>(sorted_alphabet.size()) != n)
    throw precondition_error("majcode_column_inverse: code/alphabet length mismatch");
  if (!std::is_sorted(sorted_alphabet.begin(), sorted_alphabet.end()))
    throw precondition_error("majcode_column_inverse: alphabet must be sorted");
  // Removal pairs code positions with letters largest first, so blocks are
  // checked against the reversed alphabet.
  std::vector<int> rev(sorted_alphabet.rbegin(), sorted_alphabet.rend());
  for (size_t i = 0; i + 1 < rev.size(); ++i)
    if (rev[i] == rev[i + 1] && code[i] > code[i + 1])
      throw precondition_error("majcode_column_inverse: code is not A-weakly increasing");
  if (!is_carlitz(code))
    throw precondition_error("majcode_column_inverse: code is not a Carlitz code");
  std::vector<int> standard = majcode_permutation_inverse(code);
  std::vector<int> out(standard.size());
  for (size_t p = 0; p < standard.size(); ++p) out[p] = sorted_alphabet[standard[p] - 1];
  return out;
}

Filling majcode_column_inverse(const Code& code, const std::vector<int>& sorted_alphabet) {
  return column_filling(majcode_column_word_inverse(code, sorted_alphabet));
}

std::vector<int> invcode_left_counts(const std::vector<int>& w) {
  std::vector<int> counts(w.size(), 0);
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[j] < w[i]) ++counts[i];
  return counts;
}

std::vector<int> word_from_left_counts(std::vector<int> letters, const std::vector<int>& targets) {
  if (letters.size() != targets.size())
    throw precondition_error("word_from_left_counts: one target per letter required");
  std::vector<int> out;
  out.reserve(letters.size());
  for (int t : targets) {
    int chosen = -1;
    for (int v : letters) {
      int smaller = 0;
      for (int u : letters)
        if (u < v) ++smaller;
      if (smaller == t) chosen = v;  // distinct values have distinct counts
    }
    if (chosen < 0)
      throw precondition_error("word_from_left_counts: unachievable target");
    out.push_back(chosen);
    letters.erase(std::find(letters.begin(), letters.end(), chosen));
  }
  return out;
}

namespace {
void require_distinct(const std::vector<int>& w, const char* who) {
  std::vector<int> s(w);
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw precondition_error(std::string(who) + ": entries must be distinct");
}
}  // namespace

std::vector<int> carlitz_bijection(const std::vector<int>& w) {
  require_distinct(w, "carlitz_bijection");
  std::vector<int> letters(w);
  std::sort(letters.begin(), letters.end());
  return majcode_column_word_inverse(invcode_word(w), letters);
}

std::vector<int> carlitz_bijection_inverse(const std::vector<int>& w) {
  require_distinct(w, "carlitz_bijection_inverse");
  std::vector<int> letters(w);
  std::sort(letters.begin(), letters.end());
  return invcode_word_inverse(majcode_column_word(w), letters);
}

}  // namespace invmaj
