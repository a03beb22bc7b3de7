#include "invmaj/statistics.hpp"

#include "invmaj/errors.hpp"

namespace invmaj {

int maj_word(const std::vector<int>& w) {
  int m = 0;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) m += static_cast<int>(i) + 1;
  return m;
}

int maj(const Filling& f) {
  int total = 0;
  int width = f.shape().rows() ? f.shape().parts()[0] : 0;
  for (int c = 1; c <= width; ++c) total += maj_word(f.column_word(c));
  return total;
}

bool is_descent(const Filling& f, int row, int col) {
  if (row <= 1) return false;
  return f.at(row, col) > f.at(row - 1, col);
}

int inv_attacking(const Filling& f) {
  const Partition& mu = f.shape();
  int attacks = 0;
  for (int r = 1; r <= mu.rows(); ++r) {
    int len = mu.row_length(r);
    // same row, larger entry on the left
    for (int c = 1; c <= len; ++c)
      for (int c2 = c + 1; c2 <= len; ++c2)
        if (f.at(r, c) > f.at(r, c2)) ++attacks;
    // u in the row above v and strictly to its right
    if (r > 1) {
      int below = mu.row_length(r - 1);
      for (int cu = 1; cu <= len; ++cu)
        for (int cv = 1; cv < cu && cv <= below; ++cv)
          if (f.at(r, cu) > f.at(r - 1, cv)) ++attacks;
    }
  }
  int arms = 0;
  for (int r = 2; r <= mu.rows(); ++r)
    for (int c = 1; c <= mu.row_length(r); ++c)
      if (is_descent(f, r, c)) arms += mu.row_length(r) - c;
  return attacks - arms;
}

bool relative_inversion_triple(int u, int v, int b) {
  return (u <= b && b < v) || (b < v && v < u) || (v < u && u <= b);
}

int inv_relative(const Filling& f) {
  const Partition& mu = f.shape();
  int total = 0;
  for (int r = 1; r <= mu.rows(); ++r) {
    int len = mu.row_length(r);
    for (int c = 1; c <= len; ++c) {
      int b = (r > 1) ? f.at(r - 1, c) : 0;
      for (int c2 = c + 1; c2 <= len; ++c2)
        if (relative_inversion_triple(f.at(r, c), f.at(r, c2), b)) ++total;
    }
  }
  return total;
}

int cocharge_contribution(const Filling& f, Cell c) {
  const Partition& mu = f.shape();
  if (c.row < 1 || c.row > mu.rows() || c.col < 1 || c.col > mu.row_length(c.row))
    throw precondition_error("cocharge_contribution: cell outside shape");
  int count = 0;
  for (int r = 2; r <= c.row; ++r)
    if (is_descent(f, r, c.col)) ++count;
  return count;
}

}  // namespace invmaj
