#pragma once

#include <vector>

#include "invmaj/filling.hpp"

namespace invmaj {

// Major index of a word: sum of positions i (1-based) with w[i] > w[i+1].
int maj_word(const std::vector<int>& w);

// Sum over columns of the major index of the column word read top to bottom.
int maj(const Filling& f);

// Descent: an entry strictly greater than the entry directly below it.
bool is_descent(const Filling& f, int row, int col);

// Attacking pairs minus the sum of the arms of the descents.
int inv_attacking(const Filling& f);

// True when the triple (u above b, v to the right) is oriented
// counterclockwise: u<=b<v, b<v<u or v<u<=b.  For bottom-row pairs pass b=0.
bool relative_inversion_triple(int u, int v, int b);

// Row-by-row count of relative inversions; equals inv_attacking.
int inv_relative(const Filling& f);

// Number of descents weakly below (row, col) in its column.
int cocharge_contribution(const Filling& f, Cell c);

}  // namespace invmaj
