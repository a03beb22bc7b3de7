#pragma once

#include <string>
#include <vector>

#include "invmaj/codes.hpp"
#include "invmaj/filling.hpp"

namespace invmaj {

// Pair of partial codes of a hook filling under the standardization ordering
// of its letters: the invcode of the bottom row on the row positions and the
// majcode of the left column (written backwards) on the column positions.
// The corner position carries both and holds the shared zero.
struct HookCodePair {
  int size = 0;                   // number of cells
  std::vector<int> letters;       // standardized ascending alphabet
  std::vector<bool> in_row;       // position belongs to the bottom row
  std::vector<bool> in_column;    // position belongs to the left column
  std::vector<int> value;         // code entry at each position

  int corner_position() const;    // the unique shared position (0-based)
  std::string to_string() const;  // per position: (R|C|B, letter, value)
};

bool is_hook(const Partition& mu);

HookCodePair hook_codes(const Filling& f);

// Rebuilds the filling; a violated condition is reported by its number
// (1: zeros misaligned, 2: bad overlap/coverage, 3: row code invalid,
// 4: column code invalid).
Filling hook_codes_inverse(const HookCodePair& pair, const std::vector<int>& sorted_alphabet,
                           const Partition& shape);

// The involution interchanging the two hook codes, writing them backwards
// and reversing the alphabet; swaps inv and maj.
Filling hook_phi(const Filling& f);

}  // namespace invmaj
