#pragma once

#include <vector>

#include "invmaj/codes.hpp"
#include "invmaj/filling.hpp"

namespace invmaj {

// Inversion code of a word: entry i counts the inversions whose smaller
// element is the i-th letter of the sorted alphabet (ties ordered by first
// appearance in w).  Equal letters never form inversions.
Code invcode_word(const std::vector<int>& w);

// Rebuild the word with the given sorted alphabet from its inversion code.
std::vector<int> invcode_word_inverse(const Code& code, const std::vector<int>& sorted_alphabet);

// Standardization of a one-column filling: distinct entries 1..n respecting
// the order of the original entries, ties broken by the maj-preserving
// labeling on repeated letters.
Filling standardize_column(const Filling& column);
std::vector<int> standardize_column_word(const std::vector<int>& word_top_to_bottom);

// majcode of a one-column filling: remove entries from the largest down
// (standardization order), recording the major-index drop at each step.
Code majcode_column(const Filling& column);
Code majcode_column_word(const std::vector<int>& word_top_to_bottom);

// Inverse of majcode_column.  `sorted_alphabet` is the alphabet of the
// resulting column; the code blocks are checked against its reversed
// multiplicities (removal pairs code positions with letters largest first).
std::vector<int> majcode_column_word_inverse(const Code& code,
                                             const std::vector<int>& sorted_alphabet);
Filling majcode_column_inverse(const Code& code, const std::vector<int>& sorted_alphabet);

// Number of inversions whose left element is at each position of w.
std::vector<int> invcode_left_counts(const std::vector<int>& w);

// Unique word over the letters of `letters` whose left-inversion counts are
// `targets` (each position needs exactly targets[i] smaller letters after it).
std::vector<int> word_from_left_counts(std::vector<int> letters, const std::vector<int>& targets);

// majcode^{-1} o invcode on words with distinct entries: maj(result) = inv(w).
std::vector<int> carlitz_bijection(const std::vector<int>& w);

// invcode^{-1} o majcode on a column word with distinct entries, read as a
// row: inv(result) = maj(w).  The inverse direction of carlitz_bijection.
std::vector<int> carlitz_bijection_inverse(const std::vector<int>& w);

Filling column_filling(const std::vector<int>& word_top_to_bottom);
Filling row_filling(const std::vector<int>& word_left_to_right);

}  // namespace invmaj
