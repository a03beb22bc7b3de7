#pragma once

#include <set>
#include <string>
#include <vector>

#include "invmaj/partition.hpp"

namespace invmaj {

// Finite word over nonnegative integers carrying the letter-sum statistic.
using Code = std::vector<int>;

long long code_sum(const Code& c);

// Compact text: digits concatenated when all letters are < 10,
// comma-separated otherwise.
std::string code_to_string(const Code& c);

// code[i] <= n-i for all 1-based i; there are n! such codes of length n.
bool is_carlitz(const Code& code);

// Every suffix contains at least as many i's as (i+1)'s, for all i >= 0.
bool is_yamanouchi(const std::vector<int>& word);

// All Yamanouchi words whose content is mu (letter i-1 used mu_i times).
std::vector<std::vector<int>> enumerate_yamanouchi(const Partition& mu);

// True iff some Yamanouchi word v of content mu dominates the code
// componentwise (code[i] <= v[i]).
bool is_sub_yamanouchi(const Code& code, const Partition& mu);

// Weakly increasing on each block of positions belonging to a repeated
// letter of the sorted alphabet A.
bool is_a_weakly_increasing(const Code& code, const std::vector<int>& sorted_alphabet);

// C_{mu,A}: the mu-sub-Yamanouchi, A-weakly-increasing codes, enumerated by
// the Garsia-Procesi style recursion over corner removals.
std::set<Code> enumerate_codes(const Partition& mu, const std::vector<int>& sorted_alphabet);

// Brute-force oracle for enumerate_codes.
std::set<Code> enumerate_codes_bruteforce(const Partition& mu,
                                          const std::vector<int>& sorted_alphabet);

// Exponent vector of x^c: exponent of x_{n+1-i} is code[i].
// Returned as exps[j-1] = exponent of x_j.
std::vector<int> code_monomial(const Code& code);

}  // namespace invmaj
