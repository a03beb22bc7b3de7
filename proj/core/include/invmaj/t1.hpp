#pragma once

#include <vector>

#include "invmaj/filling.hpp"

namespace invmaj {

// Build a row above `base` from `letters` so that the cell at position k is
// the left element of exactly targets[k] relative inversions.  Candidates at
// each step are ordered cyclically starting strictly above the base entry.
std::vector<int> cyclic_row_insert(const std::vector<int>& base, std::vector<int> letters,
                                   const std::vector<int>& targets);

// Number of relative inversions whose left element is at each position of
// the row placed above `base`.
std::vector<int> row_inversion_targets(const std::vector<int>& row, const std::vector<int>& base);

// Column-by-column extension of the Carlitz bijection: sends a filling with
// distinct entries to a filling of the conjugate shape with inv = maj(f).
Filling t1_map(const Filling& f);
Filling t1_map_inverse(const Filling& f);

}  // namespace invmaj
