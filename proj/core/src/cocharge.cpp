#include "invmaj/cocharge.hpp"

#include <algorithm>

#include "invmaj/errors.hpp"

namespace invmaj {

bool has_partition_content(const std::vector<int>& word) {
  if (word.empty()) return true;
  std::vector<int> alpha = content_of_word(word);
  for (size_t i = 0; i + 1 < alpha.size(); ++i)
    if (alpha[i] < alpha[i + 1]) return false;
  return alpha.back() > 0;
}

namespace {
void require_partition_content(const std::vector<int>& word, const char* who) {
  if (!has_partition_content(word))
    throw precondition_error(std::string(who) + ": word must have partition content");
}
}  // namespace

std::vector<std::vector<int>> subword_decomposition(const std::vector<int>& word) {
  require_partition_content(word, "subword_decomposition");
  int n = static_cast<int>(word.size());
  std::vector<int> alpha = word.empty() ? std::vector<int>{} : content_of_word(word);
  int rounds = alpha.empty() ? 0 : alpha[0];

  std::vector<bool> used(n, false);
  std::vector<std::vector<int>> subwords;
  for (int i = 1; i <= rounds; ++i) {
    // letters 1..top remain available at least once in this round
    int top = 0;
    while (top < static_cast<int>(alpha.size()) && alpha[top] >= i) ++top;
    std::vector<int> positions;
    int cursor = n - 1;
    for (int letter = 1; letter <= top; ++letter) {
      // scan right to left from the cursor, wrapping cyclically
      int steps = 0;
      while (steps < n && (used[cursor] || word[cursor] != letter)) {
        cursor = (cursor + n - 1) % n;
        ++steps;
      }
      if (used[cursor] || word[cursor] != letter)
        throw std::logic_error("subword_decomposition: letter not found");
      used[cursor] = true;
      positions.push_back(cursor);
      cursor = (cursor + n - 1) % n;
    }
    subwords.push_back(std::move(positions));
  }
  return subwords;
}

int cocharge(const std::vector<int>& word) {
  int total = 0;
  for (const auto& positions : subword_decomposition(word)) {
    // positions[k] holds letter k+1; increment the counter whenever the next
    // letter sits to the left of the previous one
    int counter = 0;
    for (size_t k = 1; k < positions.size(); ++k) {
      if (positions[k] < positions[k - 1]) ++counter;
      total += counter;
    }
  }
  return total;
}

std::vector<int> cyclage(const std::vector<int>& word) {
  if (word.empty()) throw precondition_error("cyclage: empty word");
  std::vector<int> out(word.begin() + 1, word.end());
  out.push_back(word.front());
  return out;
}

std::set<std::vector<int>> knuth_neighbors(const std::vector<int>& word) {
  std::set<std::vector<int>> out;
  int n = static_cast<int>(word.size());
  for (int i = 0; i + 2 < n; ++i) {
    int x = word[i], y = word[i + 1], z = word[i + 2];
    if ((y < x && x <= z) || (z < x && x <= y)) {
      std::vector<int> w(word);
      std::swap(w[i + 1], w[i + 2]);  // xyz -> xzy
      out.insert(std::move(w));
    }
    if ((x <= z && z < y) || (y <= z && z < x)) {
      std::vector<int> w(word);
      std::swap(w[i], w[i + 1]);  // xyz -> yxz
      out.insert(std::move(w));
    }
  }
  return out;
}

std::vector<int> cocharge_word(const Filling& f) {
  std::vector<Cell> cells = f.reading_order_cells();
  // decreasing entries; ties in reverse reading order
  std::stable_sort(cells.begin(), cells.end(),
                   [&](const Cell& a, const Cell& b) { return f.at(a) > f.at(b); });
  std::vector<Cell> ordered;
  ordered.reserve(cells.size());
  size_t i = 0;
  while (i < cells.size()) {
    size_t j = i;
    while (j < cells.size() && f.at(cells[j]) == f.at(cells[i])) ++j;
    for (size_t k = j; k > i; --k) ordered.push_back(cells[k - 1]);
    i = j;
  }
  std::vector<int> w;
  w.reserve(ordered.size());
  for (const Cell& c : ordered) w.push_back(c.row);
  return w;
}

std::vector<int> first_letter_reduction(const std::vector<int>& word) {
  require_partition_content(word, "first_letter_reduction");
  if (word.empty() || word.front() != 1)
    throw precondition_error("first_letter_reduction: word must start with 1");
  auto subwords = subword_decomposition(word);
  const std::vector<int>& last = subwords.back();
  if (std::find(last.begin(), last.end(), 0) == last.end())
    throw std::logic_error("first_letter_reduction: leading 1 not in the last subword");
  std::vector<int> out(word);
  for (int pos : last) --out[pos];
  out.erase(out.begin());  // the leading 1 became 0
  return out;
}

}  // namespace invmaj
