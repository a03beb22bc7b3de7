#pragma once

#include <string>
#include <vector>

#include "invmaj/partition.hpp"

namespace invmaj {

// 1-based French coordinates: row 1 at the bottom, column 1 at the left.
struct Cell {
  int row = 0;
  int col = 0;
  bool operator==(const Cell&) const = default;
};

// Assignment of positive integers to the cells of a partition shape.
// Rows are stored bottom-to-top, matching the serialized form
// [[bottom row],[next row],...].
class Filling {
 public:
  Filling() = default;
  Filling(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  int size() const { return shape_.size(); }

  int at(int row, int col) const { return rows_[row - 1][col - 1]; }
  int at(Cell c) const { return at(c.row, c.col); }
  int& at(int row, int col) { return rows_[row - 1][col - 1]; }

  const std::vector<int>& row(int r) const { return rows_[r - 1]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  // Word of column c read top to bottom.
  std::vector<int> column_word(int c) const;

  // Cells in reading order: top row first, left to right within a row.
  std::vector<Cell> reading_order_cells() const;

  int max_entry() const;

  bool operator==(const Filling&) const = default;
  bool operator<(const Filling& o) const { return rows_ < o.rows_; }

  // Serialized form, rows bottom-to-top: [[1,2,3],[2,1]]
  std::string to_string() const;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

Filling parse_filling(const std::string& literal);

// Letter multiplicities: content[i-1] = number of cells equal to i.
// Trailing zeros are trimmed unless min_letters asks for a longer list.
std::vector<int> content_of(const Filling& f, int min_letters = 0);
std::vector<int> content_of_word(const std::vector<int>& word, int min_letters = 0);

// r(alpha): the reversed content list (kept at its declared length).
std::vector<int> reverse_content(const std::vector<int>& alpha);

// Sorted multiset of entries of f.
std::vector<int> alphabet_of(const Filling& f);

// Complement multiset {M+1-a} for M = max element (or the given M).
std::vector<int> complement_alphabet(const std::vector<int>& sorted_letters, int M = 0);

std::string word_to_string(const std::vector<int>& word);
std::vector<int> parse_word(const std::string& text);

}  // namespace invmaj
