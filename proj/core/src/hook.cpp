#include "invmaj/hook.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "invmaj/errors.hpp"
#include "invmaj/word_codes.hpp"

namespace invmaj {

bool is_hook(const Partition& mu) {
  if (mu.rows() == 0) return false;
  for (int r = 2; r <= mu.rows(); ++r)
    if (mu.parts()[r - 1] != 1) return false;
  return true;
}

int HookCodePair::corner_position() const {
  for (int i = 0; i < size; ++i)
    if (in_row[i] && in_column[i]) return i;
  return -1;
}

std::string HookCodePair::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < size; ++i) {
    if (i) os << ' ';
    char kind = in_row[i] ? (in_column[i] ? 'B' : 'R') : 'C';
    os << '(' << kind << ',' << letters[i] << ',' << value[i] << ')';
  }
  return os.str();
}

namespace {
void require_hook(const Partition& mu, const char* who) {
  if (!is_hook(mu)) throw precondition_error(std::string(who) + ": shape must be a hook");
}

void condition_violation(int number) {
  throw not_in_image_error("hook codes violate condition " + std::to_string(number));
}
}  // namespace

HookCodePair hook_codes(const Filling& f) {
  require_hook(f.shape(), "hook_codes");
  int m = f.shape().parts()[0];
  int h = f.shape().rows();
  int n = m + h - 1;

  std::vector<int> row_word = f.row(1);
  std::vector<int> col_word = f.column_word(1);  // top to bottom, corner last

  // Standardization order: values ascending; within a value the column
  // copies come first (ordered by the column labeling, which puts the corner
  // last among them), then the row copies left to right.
  std::vector<int> col_std = standardize_column_word(col_word);

  struct Pos {
    int letter;
    int group;  // 0 column, 1 row (corner counts as column)
    int tie;
    bool row_member;
    bool col_member;
    int code_value;
  };
  std::vector<Pos> pos;
  Code inv_code = invcode_word(row_word);
  Code maj_code = majcode_column_word(col_word);

  // column cells: global tie key is the standardized column value; the
  // k-th largest gets majcode entry k (written backwards onto positions)
  for (int p = 0; p < h; ++p) {
    bool corner = (p == h - 1);
    pos.push_back({col_word[p], 0, col_std[p], corner, true, maj_code[h - col_std[p]]});
  }
  // row cells except the corner, in appearance order
  for (int c = 2; c <= m; ++c)
    pos.push_back({row_word[c - 1], 1, c, true, false, 0});
  std::sort(pos.begin(), pos.end(), [](const Pos& a, const Pos& b) {
    return std::tie(a.letter, a.group, a.tie) < std::tie(b.letter, b.group, b.tie);
  });

  // invcode entries attach to row positions in this same order
  int row_idx = 0;
  for (auto& p : pos)
    if (p.row_member) {
      if (p.col_member) {
        // the corner carries the shared zero; both codes place 0 here
        if (inv_code[row_idx] != p.code_value)
          throw std::logic_error("hook corner codes disagree");
      } else {
        p.code_value = inv_code[row_idx];
      }
      ++row_idx;
    }

  HookCodePair out;
  out.size = n;
  for (const Pos& p : pos) {
    out.letters.push_back(p.letter);
    out.in_row.push_back(p.row_member);
    out.in_column.push_back(p.col_member);
    out.value.push_back(p.code_value);
  }
  return out;
}

namespace {
// conditions 1-4 of the hook-code characterization
void validate_pair(const HookCodePair& p, const std::vector<int>& letters,
                   const Partition& shape) {
  int n = p.size;
  int m = shape.parts()[0];
  int h = shape.rows();
  if (n != shape.size() || static_cast<int>(letters.size()) != n)
    throw precondition_error("hook_codes_inverse: size mismatch");

  // condition 2: exactly one overlap, full coverage, correct part sizes
  int overlap = 0, rows = 0, cols = 0;
  for (int i = 0; i < n; ++i) {
    if (!p.in_row[i] && !p.in_column[i]) condition_violation(2);
    if (p.in_row[i] && p.in_column[i]) ++overlap;
    rows += p.in_row[i];
    cols += p.in_column[i];
  }
  if (overlap != 1 || rows != m || cols != h) condition_violation(2);

  // condition 1: leftmost 0 of X is the rightmost 0 of Y
  int leftmost_x0 = -1;
  for (int i = 0; i < n && leftmost_x0 < 0; ++i)
    if (p.in_row[i] && p.value[i] == 0) leftmost_x0 = i;
  int rightmost_y0 = -1;
  for (int i = n - 1; i >= 0 && rightmost_y0 < 0; --i)
    if (p.in_column[i] && p.value[i] == 0) rightmost_y0 = i;
  if (leftmost_x0 < 0 || leftmost_x0 != rightmost_y0) condition_violation(1);

  // condition 3: X a Carlitz code, A-weakly increasing on the row letters
  Code x;
  std::vector<int> xletters;
  for (int i = 0; i < n; ++i)
    if (p.in_row[i]) {
      x.push_back(p.value[i]);
      xletters.push_back(letters[i]);
    }
  if (!is_carlitz(x) || !is_a_weakly_increasing(x, xletters)) condition_violation(3);

  // condition 4: Y read backwards likewise on the column letters
  Code y;
  std::vector<int> yletters;
  for (int i = n - 1; i >= 0; --i)
    if (p.in_column[i]) {
      y.push_back(p.value[i]);
      yletters.push_back(letters[i]);
    }
  if (!is_carlitz(y) || !is_a_weakly_increasing(y, yletters)) condition_violation(4);
}
}  // namespace

Filling hook_codes_inverse(const HookCodePair& pair, const std::vector<int>& sorted_alphabet,
                           const Partition& shape) {
  require_hook(shape, "hook_codes_inverse");
  validate_pair(pair, sorted_alphabet, shape);
  int n = pair.size;
  int h = shape.rows();

  Code x, dseq;
  std::vector<int> xletters, cletters;
  for (int i = 0; i < n; ++i)
    if (pair.in_row[i]) {
      x.push_back(pair.value[i]);
      xletters.push_back(sorted_alphabet[i]);
    }
  for (int i = n - 1; i >= 0; --i)
    if (pair.in_column[i]) {
      dseq.push_back(pair.value[i]);
      cletters.push_back(sorted_alphabet[i]);
    }
  std::sort(cletters.begin(), cletters.end());

  std::vector<int> row_word = invcode_word_inverse(x, xletters);
  std::vector<int> col_word = majcode_column_word_inverse(dseq, cletters);
  if (row_word.front() != col_word.back())
    throw std::logic_error("hook reconstruction: corner mismatch");

  std::vector<std::vector<int>> rows;
  rows.push_back(row_word);
  for (int r = 2; r <= h; ++r) rows.push_back({col_word[h - r]});
  return Filling(shape, std::move(rows));
}

Filling hook_phi(const Filling& f) {
  require_hook(f.shape(), "hook_phi");
  HookCodePair p = hook_codes(f);
  int n = p.size;
  int M = p.letters.back();

  HookCodePair q;
  q.size = n;
  q.letters.assign(n, 0);
  q.in_row.assign(n, false);
  q.in_column.assign(n, false);
  q.value.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    int j = n - 1 - i;
    q.letters[j] = M + 1 - p.letters[i];
    q.in_row[j] = p.in_column[i];
    q.in_column[j] = p.in_row[i];
    q.value[j] = p.value[i];
  }
  Partition conj = conjugate(f.shape());
  return hook_codes_inverse(q, q.letters, conj);
}

}  // namespace invmaj
