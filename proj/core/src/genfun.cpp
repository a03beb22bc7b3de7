#include "invmaj/genfun.hpp"

#include <algorithm>
#include <numeric>

#include "invmaj/errors.hpp"
#include "invmaj/statistics.hpp"

namespace invmaj {

QTPolynomial macdonald_coefficient(const Partition& mu, const std::vector<int>& alpha) {
  if (std::accumulate(alpha.begin(), alpha.end(), 0) != mu.size())
    throw precondition_error("content does not sum to the size of the shape");
  QTPolynomial out;
  enumerate_fillings(mu, alpha, [&](const Filling& f) {
    out.add_term(inv_relative(f), maj(f), 1);
  });
  return out;
}

QPolynomial hall_littlewood_coefficient(const Partition& mu, const std::vector<int>& alpha) {
  if (std::accumulate(alpha.begin(), alpha.end(), 0) != mu.size())
    throw precondition_error("content does not sum to the size of the shape");
  QPolynomial out;
  enumerate_fillings(mu, alpha, [&](const Filling& f) {
    if (inv_relative(f) == 0) out.add_term(maj(f), 1);
  });
  return out;
}

bool check_symmetry(const Partition& mu, int alphabet_size) {
  if (alphabet_size < 1) throw precondition_error("alphabet_size must be >= 1");
  Partition conj = conjugate(mu);
  for (const auto& alpha : compositions_of(mu.size(), alphabet_size)) {
    QTPolynomial lhs = macdonald_coefficient(mu, alpha);
    QTPolynomial rhs = macdonald_coefficient(conj, alpha).with_swapped_variables();
    if (!(lhs == rhs)) return false;
  }
  return true;
}

int inv_over_base(const std::vector<int>& row, const std::vector<int>& base) {
  int count = 0;
  for (size_t i = 0; i < row.size(); ++i) {
    int b = i < base.size() ? base[i] : 0;
    for (size_t j = i + 1; j < row.size(); ++j)
      if (relative_inversion_triple(row[i], row[j], b)) ++count;
  }
  return count;
}

QPolynomial row_inversion_distribution(const std::vector<int>& letters,
                                       const std::vector<int>& base) {
  if (letters.size() > base.size())
    throw precondition_error("row cannot be longer than its base row");
  std::vector<int> row(letters);
  std::sort(row.begin(), row.end());
  QPolynomial out;
  do {
    out.add_term(inv_over_base(row, base), 1);
  } while (std::next_permutation(row.begin(), row.end()));
  return out;
}

}  // namespace invmaj
