#pragma once

#include <functional>
#include <vector>

#include "invmaj/filling.hpp"

namespace invmaj {

// Visit each distinct filling of `shape` with letter multiplicities `content`
// exactly once.  The count of visited fillings is multinomial(n; content).
void enumerate_fillings(const Partition& shape, const std::vector<int>& content,
                        const std::function<void(const Filling&)>& visit);

std::vector<Filling> all_fillings(const Partition& shape, const std::vector<int>& content);

// Only the inversion-free fillings, visited once each.  They correspond to
// the splits of the content into row multisets, so this avoids scanning the
// full multinomial of arrangements.
void enumerate_inversion_free_fillings(const Partition& shape, const std::vector<int>& content,
                                       const std::function<void(const Filling&)>& visit);

// Compositions of n into parts >= 1, at most max_parts of them (all orderings).
// Contents with zero parts name the same coefficients, so these cover every
// alphabet up to relabeling.
std::vector<std::vector<int>> compositions_of(int n, int max_parts);

// Weak compositions of n into exactly k parts >= 0.
std::vector<std::vector<int>> weak_compositions_of(int n, int k);

long long multinomial(const std::vector<int>& parts);

}  // namespace invmaj
