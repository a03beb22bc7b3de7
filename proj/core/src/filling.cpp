#include "invmaj/filling.hpp"

#include <algorithm>
#include <sstream>

#include "invmaj/errors.hpp"

namespace invmaj {

Filling::Filling(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.rows())
    throw precondition_error("filling row count does not match shape");
  for (int r = 1; r <= shape_.rows(); ++r) {
    if (static_cast<int>(rows_[r - 1].size()) != shape_.row_length(r))
      throw precondition_error("filling row length does not match shape");
    for (int v : rows_[r - 1])
      if (v <= 0) throw precondition_error("filling entries must be positive");
  }
}

std::vector<int> Filling::column_word(int c) const {
  std::vector<int> w;
  for (int r = shape_.column_height(c); r >= 1; --r) w.push_back(at(r, c));
  return w;
}

std::vector<Cell> Filling::reading_order_cells() const {
  std::vector<Cell> cells;
  cells.reserve(size());
  for (int r = shape_.rows(); r >= 1; --r)
    for (int c = 1; c <= shape_.row_length(r); ++c) cells.push_back({r, c});
  return cells;
}

int Filling::max_entry() const {
  int m = 0;
  for (const auto& row : rows_)
    for (int v : row) m = std::max(m, v);
  return m;
}

std::string Filling::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (r) os << ',';
    os << '[';
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) os << ',';
      os << rows_[r][c];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Filling parse_filling(const std::string& literal) {
  std::vector<std::vector<int>> rows;
  size_t i = 0;
  auto skip_ws = [&] { while (i < literal.size() && isspace(literal[i])) ++i; };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= literal.size() || literal[i] != c)
      throw precondition_error("bad filling literal: " + literal);
    ++i;
  };
  expect('[');
  skip_ws();
  while (i < literal.size() && literal[i] != ']') {
    expect('[');
    std::vector<int> row;
    skip_ws();
    while (i < literal.size() && literal[i] != ']') {
      size_t end = i;
      while (end < literal.size() && (isdigit(literal[end]) || literal[end] == '-')) ++end;
      if (end == i) throw precondition_error("bad filling literal: " + literal);
      row.push_back(std::stoi(literal.substr(i, end - i)));
      i = end;
      skip_ws();
      if (i < literal.size() && literal[i] == ',') { ++i; skip_ws(); }
    }
    expect(']');
    rows.push_back(std::move(row));
    skip_ws();
    if (i < literal.size() && literal[i] == ',') { ++i; skip_ws(); }
  }
  expect(']');
  std::vector<int> parts;
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  return Filling(Partition(parts), std::move(rows));
}

std::vector<int> content_of_word(const std::vector<int>& word, int min_letters) {
  std::vector<int> alpha(min_letters, 0);
  for (int v : word) {
    if (v <= 0) throw precondition_error("letters must be positive");
    if (v > static_cast<int>(alpha.size())) alpha.resize(v, 0);
    ++alpha[v - 1];
  }
  return alpha;
}

std::vector<int> content_of(const Filling& f, int min_letters) {
  std::vector<int> all;
  for (const auto& row : f.rows()) all.insert(all.end(), row.begin(), row.end());
  return content_of_word(all, min_letters);
}

std::vector<int> reverse_content(const std::vector<int>& alpha) {
  return {alpha.rbegin(), alpha.rend()};
}

std::vector<int> alphabet_of(const Filling& f) {
  std::vector<int> all;
  for (const auto& row : f.rows()) all.insert(all.end(), row.begin(), row.end());
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<int> complement_alphabet(const std::vector<int>& sorted_letters, int M) {
  if (sorted_letters.empty()) return {};
  if (M == 0) M = sorted_letters.back();
  std::vector<int> out;
  out.reserve(sorted_letters.size());
  for (auto it = sorted_letters.rbegin(); it != sorted_letters.rend(); ++it)
    out.push_back(M + 1 - *it);
  return out;
}

std::string word_to_string(const std::vector<int>& word) {
  std::ostringstream os;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) os << ',';
    os << word[i];
  }
  return os.str();
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> w;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw precondition_error("bad word literal: " + text);
    w.push_back(std::stoi(tok));
  }
  return w;
}

}  // namespace invmaj
