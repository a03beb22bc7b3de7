#pragma once

#include <set>
#include <vector>

#include "invmaj/filling.hpp"

namespace invmaj {

// True when the multiplicities of 1,2,...,max form a weakly decreasing
// sequence with no gaps.
bool has_partition_content(const std::vector<int>& word);

// The cyclic right-to-left scan decomposition: subword i collects one copy
// each of 1..(number of letters still available i times).  Returned as
// 0-based position lists covering the word.
std::vector<std::vector<int>> subword_decomposition(const std::vector<int>& word);

// Lascoux-Schutzenberger cocharge via the counter labeling on each subword.
int cocharge(const std::vector<int>& word);

// First letter moved to the end; drops cocharge by one unless w starts with 1.
std::vector<int> cyclage(const std::vector<int>& word);

// All words reachable by a single Knuth move (either direction).
std::set<std::vector<int>> knuth_neighbors(const std::vector<int>& word);

// Row indices of the cells taken in decreasing-entry order, reverse reading
// order on ties.  For inversion-free fillings maj = cocharge of this word.
std::vector<int> cocharge_word(const Filling& f);

// Remove a leading 1 and decrement every letter of the last subword; the
// cocharge is preserved.
std::vector<int> first_letter_reduction(const std::vector<int>& word);

}  // namespace invmaj
