#pragma once

#include <utility>
#include <vector>

#include "invmaj/codes.hpp"
#include "invmaj/filling.hpp"

namespace invmaj {

// The unique (up to equal letters) arrangement of `letters` contributing no
// relative inversions above `base_row`: left to right, each cell takes the
// first remaining letter in cyclic order starting strictly above the base
// entry.  `letters` may exceed the base length by one; the leftover letter
// takes the trailing overhang cell.
std::vector<int> rearrange_row_no_inversions(std::vector<int> letters,
                                             const std::vector<int>& base_row);

// Canonical inversion-free arrangement of per-row multisets, bottom-up.
Filling arrange_filling(const std::vector<std::vector<int>>& row_multisets);

// Remove the rightmost maximal entry from the bottom row (necessarily in the
// rightmost column), shift that column down one row, and rearrange.  The
// major index is preserved and the shape becomes mu^(1).
Filling zero_bump(const Filling& f);

// Inverse: raise pull-up letters along the short column of `f` and insert a
// new maximal entry `m` at the end of the bottom row, restoring `target`.
Filling zero_bump_inverse(const Filling& f, int m, const Partition& target);

// The unique bottom letter whose promotion to the top row lands in the
// rightmost position (top row one longer than the bottom row it sits over).
int pull_up(const std::vector<int>& bottom_letters, const std::vector<int>& top_letters);

// Index (0-based) of the selected 0 in the balanced-minus-one 0/1 word: the
// unique 0 whose removal leaves a 0-dominated sequence starting just after it.
int pull_up_index(const std::vector<int>& zero_one_word);

// Entries a_1..a_{h-1} of the rightmost column (bottom to top, above the
// max) of the canonical bottom-max representative of the fiber of f.
std::vector<int> bumping_sequence(const Filling& rectangle);
std::vector<int> bumping_sequence_at_row(const Filling& rectangle, int max_row);

// One step of the maj-code recursion: removes the maximal entry and returns
// the reduced filling together with the drop d = maj(f) - maj(result).
std::pair<Filling, int> rect_psi(const Filling& rectangle);
std::pair<Filling, int> two_row_psi(const Filling& f);
std::pair<Filling, int> two_row_psi(const Filling& f, Cell occurrence);
std::pair<Filling, int> three_row_psi(const Filling& f, Cell occurrence);

// Unified psi for shapes with at most three rows, at a designated occurrence
// of the maximal entry.
std::pair<Filling, int> psi_leq3(const Filling& f, Cell occurrence);

// Distinct relabeling 1..n respecting entry order; ties resolved by reading
// order (<= 2 rows) or by the minimal-drop removal policy (3 rows).
Filling standardize_filling(const Filling& f);

// maj code of an inversion-free filling with at most three rows (single
// columns delegate to the column machinery).  Lands in C_{mu, complement-A}.
Code majcode_filling(const Filling& f);

// Inverse; `sorted_alphabet` is the alphabet of the resulting filling.
Filling majcode_filling_inverse(const Code& code, const Partition& mu,
                                const std::vector<int>& sorted_alphabet);

// Inversion word of a descent-free filling: column numbers listed per entry
// value (ascending), reading order within a value.
std::vector<int> inversion_word(const Filling& f);

// Plot of the inversion word over the ordered multiset of entries.
struct InversionDiagram {
  std::vector<int> letters;  // entries ascending, ties by reading order
  std::vector<int> heights;  // diagram row of each position (1-based)
  Partition shape;           // row i holds shape_i dots

  // label of each dot: positions within a row are labeled mu_i..1 left to right
  std::vector<int> labels() const;
  long long inversions() const;  // type I + type II pairs
  // equal-letter runs carry their labels high-to-low, equal labels bottom-up
  bool is_inversion_word_type() const;
  // per ordered position: (letter, row, label)
  std::string to_string() const;
};

InversionDiagram inv_plot(const Filling& f);
Filling inv_plot_inverse(const InversionDiagram& d);

// Inversion code of a descent-free filling of mu*: entry i counts attacking
// pairs whose smaller element is the i-th entry in sorted order.
Code invcode_filling(const Filling& f);

// Inverse: left-to-right dot placement, one compatible height per step.
Filling invcode_filling_inverse(const Code& code, const Partition& mu,
                                const std::vector<int>& sorted_alphabet);

// invcode^{-1} o majcode: sends an inversion-free filling of mu (<= 3 rows)
// to a descent-free filling of mu* over the complement alphabet, swapping
// (inv, maj).
Filling hl_symmetry_map(const Filling& f);

// Crossing number of a balanced 0/1 word under the given ordering of its
// zero positions (0-based); independent of the ordering.
int crossing_number(const std::vector<int>& zero_one_word, const std::vector<int>& zero_order);

}  // namespace invmaj
