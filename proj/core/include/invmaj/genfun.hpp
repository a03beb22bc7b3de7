#pragma once

#include <vector>

#include "invmaj/enumerate.hpp"
#include "invmaj/qpoly.hpp"

namespace invmaj {

// Sum of q^inv t^maj over all fillings of mu with content alpha: the
// coefficient of x^alpha in the transformed Macdonald polynomial of mu.
QTPolynomial macdonald_coefficient(const Partition& mu, const std::vector<int>& alpha);

// Sum of t^maj over the inversion-free fillings (the q=0 slice).
QPolynomial hall_littlewood_coefficient(const Partition& mu, const std::vector<int>& alpha);

// True iff for every content over the alphabet the coefficient of mu in
// (q,t) equals the coefficient of the conjugate shape in (t,q).
bool check_symmetry(const Partition& mu, int alphabet_size);

// Relative inversions contributed by a row placed above the fixed base row
// (only pairs inside the placed row are counted).
int inv_over_base(const std::vector<int>& row, const std::vector<int>& base);

// Distribution of inv_over_base over all distinct arrangements of `letters`
// above `base`: the row identities say this is a q-multinomial.
QPolynomial row_inversion_distribution(const std::vector<int>& letters,
                                       const std::vector<int>& base);

}  // namespace invmaj
