#include "invmaj/hall_littlewood.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <sstream>

#include "invmaj/errors.hpp"
#include "invmaj/statistics.hpp"
#include "invmaj/word_codes.hpp"

namespace invmaj {

namespace {

// ---- tagged entries -------------------------------------------------------
//
// Standardization must track which original occurrence of a repeated letter
// sits where while rows are rearranged.  Tags are reading-order indices of
// the input; equal letters are always placed in tag order, which keeps their
// reading order stable across the whole removal process.

struct TE {
  int v = 0;
  int tag = 0;
};
using TRows = std::vector<std::vector<TE>>;

// first letter in cyclic order strictly above b; ties resolved by tag
bool cyclic_less(int b, const TE& x, const TE& y) {
  auto key = [b](const TE& e) {
    return std::tuple<int, int, int>(e.v > b ? 0 : 1, e.v, e.tag);
  };
  return key(x) < key(y);
}

std::vector<TE> arrange_row(std::vector<TE> letters, const std::vector<TE>& base) {
  if (letters.size() > base.size() + 1)
    throw precondition_error("row longer than its base row allows");
  std::vector<TE> out;
  out.reserve(letters.size());
  size_t supported = std::min(letters.size(), base.size());
  for (size_t pos = 0; pos < supported; ++pos) {
    int b = base[pos].v;
    size_t best = 0;
    for (size_t j = 1; j < letters.size(); ++j)
      if (cyclic_less(b, letters[j], letters[best])) best = j;
    out.push_back(letters[best]);
    letters.erase(letters.begin() + best);
  }
  if (!letters.empty()) out.push_back(letters.front());  // trailing overhang
  return out;
}

TRows arrange_rows(const TRows& multisets) {
  TRows out;
  out.reserve(multisets.size());
  std::vector<TE> base;
  for (const auto& row : multisets) {
    std::vector<TE> letters(row);
    if (out.empty()) {
      std::sort(letters.begin(), letters.end(),
                [](const TE& a, const TE& b) { return std::tie(a.v, a.tag) < std::tie(b.v, b.tag); });
      out.push_back(std::move(letters));
    } else {
      out.push_back(arrange_row(std::move(letters), out.back()));
    }
  }
  return out;
}

Filling project(const TRows& rows) {
  std::vector<std::vector<int>> vals;
  std::vector<int> parts;
  for (const auto& row : rows) {
    if (row.empty()) break;
    std::vector<int> r;
    for (const TE& e : row) r.push_back(e.v);
    parts.push_back(static_cast<int>(r.size()));
    vals.push_back(std::move(r));
  }
  return Filling(Partition(parts), std::move(vals));
}

TRows tag_by_reading_order(const Filling& f) {
  TRows rows(f.shape().rows());
  int tag = 0;
  for (int r = f.shape().rows(); r >= 1; --r)
    for (int c = 1; c <= f.shape().row_length(r); ++c)
      rows[r - 1].push_back({f.at(r, c), tag++});
  return rows;
}

int max_value(const TRows& rows) {
  int m = 0;
  for (const auto& row : rows)
    for (const TE& e : row) m = std::max(m, e.v);
  return m;
}

void erase_at(std::vector<TE>& row, int col1) { row.erase(row.begin() + (col1 - 1)); }

void drop_empty_tail(TRows& rows) {
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
}

// Remove the rightmost bottom-row maximum, shift its column down one row and
// rearrange.  Returns the tag of the removed entry.
int tagged_zero_bump(TRows& rows) {
  int m = max_value(rows);
  int w = static_cast<int>(rows[0].size());
  if (rows[0].back().v != m)
    throw precondition_error("zero_bump: the maximal entry is not in the bottom row");
  int T = 0;
  while (T < static_cast<int>(rows.size()) && static_cast<int>(rows[T].size()) == w) ++T;
  int removed = rows[0].back().tag;
  // column w entries shift down: row i inherits row i+1's last-column entry
  for (int i = 0; i < T - 1; ++i) {
    rows[i].back() = rows[i + 1].back();
  }
  rows[T - 1].pop_back();
  drop_empty_tail(rows);
  rows = arrange_rows(rows);
  return removed;
}

std::vector<int> row_values(const std::vector<TE>& row) {
  std::vector<int> out;
  out.reserve(row.size());
  for (const TE& e : row) out.push_back(e.v);
  return out;
}

Filling rect_subfilling(const TRows& rows, int width) {
  std::vector<std::vector<int>> vals;
  std::vector<int> parts;
  for (const auto& row : rows) {
    std::vector<int> r;
    for (int c = 0; c < width; ++c) r.push_back(row[c].v);
    parts.push_back(width);
    vals.push_back(std::move(r));
  }
  return Filling(Partition(parts), std::move(vals));
}

// Move one copy of value v between rows; `largest_tag` picks the copy that
// preserves the reading order of equal letters for the given direction.
void move_copy(std::vector<TE>& from, std::vector<TE>& to, int v, bool largest_tag) {
  int best = -1;
  for (int j = 0; j < static_cast<int>(from.size()); ++j) {
    if (from[j].v != v) continue;
    if (best < 0 || (largest_tag ? from[j].tag > from[best].tag : from[j].tag < from[best].tag))
      best = j;
  }
  if (best < 0) throw std::logic_error("move_copy: value not present");
  to.push_back(from[best]);
  from.erase(from.begin() + best);
}

struct PsiResult {
  TRows rows;
  int d = 0;
  int removed_tag = -1;
};

int maj_of(const TRows& rows) { return rows.empty() ? 0 : maj(project(rows)); }

// psi for shapes with at most three rows at a designated occurrence of the
// maximal entry (tagged, repeated letters allowed).
PsiResult tagged_psi(TRows rows, Cell occ) {
  int before = maj_of(rows);
  int nrows = static_cast<int>(rows.size());
  if (occ.row < 1 || occ.row > nrows || occ.col < 1 ||
      occ.col > static_cast<int>(rows[occ.row - 1].size()))
    throw precondition_error("psi: occurrence outside the shape");
  int m = max_value(rows);
  if (rows[occ.row - 1][occ.col - 1].v != m)
    throw precondition_error("psi: occurrence does not hold the maximal entry");
  int mu2 = nrows >= 2 ? static_cast<int>(rows[1].size()) : 0;
  int mu3 = nrows >= 3 ? static_cast<int>(rows[2].size()) : 0;

  PsiResult res;
  if (occ.row == 1) {
    res.removed_tag = tagged_zero_bump(rows);
    res.rows = std::move(rows);
  } else if (occ.col > mu3) {
    // right of the 3 x mu3 rectangle: plain removal from the second row
    res.removed_tag = rows[occ.row - 1][occ.col - 1].tag;
    erase_at(rows[occ.row - 1], occ.col);
    drop_empty_tail(rows);
    res.rows = arrange_rows(rows);
  } else if (occ.row == 2) {
    std::vector<int> seq = bumping_sequence_at_row(rect_subfilling(rows, mu3), 2);
    int a2 = seq[1];
    int b = (mu2 > mu3) ? rows[1][mu3].v : INT_MAX;
    res.removed_tag = rows[1][occ.col - 1].tag;
    erase_at(rows[1], occ.col);
    if (b >= a2) move_copy(rows[2], rows[1], a2, /*largest_tag=*/true);
    drop_empty_tail(rows);
    res.rows = arrange_rows(rows);
  } else {
    std::vector<int> seq = bumping_sequence_at_row(rect_subfilling(rows, mu3), 3);
    int a1 = seq[0], a2 = seq[1];
    res.removed_tag = rows[2][occ.col - 1].tag;
    erase_at(rows[2], occ.col);
    if (!(a2 > a1 || mu2 == mu3)) move_copy(rows[1], rows[2], a2, /*largest_tag=*/false);
    drop_empty_tail(rows);
    res.rows = arrange_rows(rows);
  }
  res.d = before - maj_of(res.rows);
  return res;
}

void require_inversion_free(const Filling& f, const char* who) {
  if (inv_relative(f) != 0)
    throw precondition_error(std::string(who) + ": filling must be inversion-free");
}

void require_leq3_rows(const Filling& f, const char* who) {
  if (f.shape().rows() > 3)
    throw precondition_error(std::string(who) + ": shapes with more than three rows are not supported");
}

Cell unique_max_cell(const Filling& f, const char* who) {
  int m = f.max_entry();
  Cell found{0, 0};
  int count = 0;
  for (int r = 1; r <= f.shape().rows(); ++r)
    for (int c = 1; c <= f.shape().row_length(r); ++c)
      if (f.at(r, c) == m) {
        found = {r, c};
        ++count;
      }
  if (count != 1)
    throw precondition_error(std::string(who) + ": maximal entry is repeated; pass an occurrence");
  return found;
}

}  // namespace

std::vector<int> rearrange_row_no_inversions(std::vector<int> letters,
                                             const std::vector<int>& base_row) {
  if (base_row.empty()) {  // bottom row: every cell sits over the sentinel
    std::sort(letters.begin(), letters.end());
    return letters;
  }
  std::vector<TE> tl, tb;
  for (size_t i = 0; i < letters.size(); ++i) tl.push_back({letters[i], static_cast<int>(i)});
  for (size_t i = 0; i < base_row.size(); ++i) tb.push_back({base_row[i], 0});
  return row_values(arrange_row(std::move(tl), tb));
}

Filling arrange_filling(const std::vector<std::vector<int>>& row_multisets) {
  TRows rows;
  int tag = 0;
  for (const auto& row : row_multisets) {
    if (row.empty()) continue;
    if (!rows.empty() && rows.back().size() < row.size())
      throw precondition_error("arrange_filling: row sizes must be weakly decreasing");
    std::vector<TE> r;
    for (int v : row) r.push_back({v, tag++});
    rows.push_back(std::move(r));
  }
  return project(arrange_rows(rows));
}

Filling zero_bump(const Filling& f) {
  require_inversion_free(f, "zero_bump");
  TRows rows = tag_by_reading_order(f);
  tagged_zero_bump(rows);
  return project(rows);
}

int pull_up_index(const std::vector<int>& word) {
  int n = static_cast<int>(word.size());
  int zeros = 0;
  for (int x : word) {
    if (x != 0 && x != 1) throw precondition_error("pull_up: word must be over {0,1}");
    zeros += (x == 0);
  }
  if (zeros != n - zeros + 1)
    throw precondition_error("pull_up: need exactly one more 0 than 1");
  int found = -1;
  for (int p = 0; p < n; ++p) {
    if (word[p] != 0) continue;
    // remaining sequence starting just after p, cyclically, must be 0-dominated
    int balance = 0;
    bool ok = true;
    for (int step = 1; step < n; ++step) {
      int q = (p + step) % n;
      balance += (word[q] == 0) ? 1 : -1;
      if (balance < 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      if (found >= 0) throw std::logic_error("pull_up: selection is not unique");
      found = p;
    }
  }
  if (found < 0) throw std::logic_error("pull_up: no admissible zero");
  return found;
}

int pull_up(const std::vector<int>& bottom_letters, const std::vector<int>& top_letters) {
  if (bottom_letters.size() != top_letters.size() + 1)
    throw precondition_error("pull_up: bottom row must be one longer than the top row");
  // sort by magnitude; equal values put top letters first so that an equal
  // letter is never treated as strictly above its base
  std::vector<std::pair<int, int>> seq;  // (value, kind): top = 0 sorts first
  for (int v : bottom_letters) seq.push_back({v, 1});
  for (int v : top_letters) seq.push_back({v, 0});
  std::sort(seq.begin(), seq.end());
  std::vector<int> word;
  for (auto& [v, kind] : seq) word.push_back(kind == 1 ? 0 : 1);
  int idx = pull_up_index(word);
  return seq[idx].first;
}

std::vector<int> bumping_sequence_at_row(const Filling& rectangle, int max_row) {
  const Partition& mu = rectangle.shape();
  int h = mu.rows();
  int w = h ? mu.parts()[0] : 0;
  for (int p : mu.parts())
    if (p != w) throw precondition_error("bumping_sequence: shape must be a rectangle");
  if (h == 0) return {};
  if (max_row < 1 || max_row > h)
    throw precondition_error("bumping_sequence: bad row for the maximal entry");

  // rho = psi applied at max_row: split, rearrange the top block, bump the
  // max out of it, restack
  std::vector<std::vector<int>> block(rectangle.rows().begin() + (max_row - 1),
                                      rectangle.rows().end());
  Filling top = arrange_filling(block);
  Filling bumped = zero_bump(top);
  // keep h rows even when the bumped top row came out empty (width 1)
  std::vector<std::vector<int>> cur(h);
  for (int r = 1; r < max_row; ++r) cur[r - 1] = rectangle.row(r);
  for (int r = 1; r <= bumped.shape().rows(); ++r) cur[max_row - 2 + r] = bumped.row(r);
  // pull the short top column back up; the pulled letters are the sequence
  std::vector<int> seq(h > 0 ? h - 1 : 0, 0);
  for (int t = h; t >= 2; --t) {
    int v = pull_up(cur[t - 2], cur[t - 1]);
    seq[t - 2] = v;
    auto it = std::find(cur[t - 2].begin(), cur[t - 2].end(), v);
    cur[t - 1].push_back(v);
    cur[t - 2].erase(it);
  }
  return seq;
}

std::vector<int> bumping_sequence(const Filling& rectangle) {
  require_inversion_free(rectangle, "bumping_sequence");
  Cell occ = unique_max_cell(rectangle, "bumping_sequence");
  return bumping_sequence_at_row(rectangle, occ.row);
}

namespace {
std::pair<Filling, int> run_psi(const Filling& f, Cell occ, const char* who) {
  require_inversion_free(f, who);
  PsiResult res = tagged_psi(tag_by_reading_order(f), occ);
  return {project(res.rows), res.d};
}
}  // namespace

std::pair<Filling, int> rect_psi(const Filling& rectangle) {
  for (int p : rectangle.shape().parts())
    if (p != rectangle.shape().parts()[0])
      throw precondition_error("rect_psi: shape must be a rectangle");
  Cell occ = unique_max_cell(rectangle, "rect_psi");
  return run_psi(rectangle, occ, "rect_psi");
}

std::pair<Filling, int> two_row_psi(const Filling& f) {
  if (f.shape().rows() > 2) throw precondition_error("two_row_psi: shape has more than two rows");
  return run_psi(f, unique_max_cell(f, "two_row_psi"), "two_row_psi");
}

std::pair<Filling, int> two_row_psi(const Filling& f, Cell occurrence) {
  if (f.shape().rows() > 2) throw precondition_error("two_row_psi: shape has more than two rows");
  return run_psi(f, occurrence, "two_row_psi");
}

std::pair<Filling, int> three_row_psi(const Filling& f, Cell occurrence) {
  require_leq3_rows(f, "three_row_psi");
  return run_psi(f, occurrence, "three_row_psi");
}

std::pair<Filling, int> psi_leq3(const Filling& f, Cell occurrence) {
  require_leq3_rows(f, "psi");
  return run_psi(f, occurrence, "psi");
}

namespace {

std::vector<Cell> max_occurrences_reading_order(const TRows& rows) {
  int m = max_value(rows);
  std::vector<Cell> occs;
  for (int r = static_cast<int>(rows.size()); r >= 1; --r)
    for (int c = 1; c <= static_cast<int>(rows[r - 1].size()); ++c)
      if (rows[r - 1][c - 1].v == m) occs.push_back({r, c});
  return occs;
}

// Greedy removal: minimal maj drop, last occurrence in reading order among
// the minimizers.  Returns removal order (tags) and the drop sequence.
std::pair<std::vector<int>, Code> removal_process(const Filling& f) {
  TRows rows = tag_by_reading_order(f);
  std::vector<int> order;
  Code drops;
  while (!rows.empty()) {
    std::vector<Cell> occs = max_occurrences_reading_order(rows);
    int best_d = INT_MAX;
    for (const Cell& occ : occs) best_d = std::min(best_d, tagged_psi(rows, occ).d);
    Cell chosen{0, 0};
    for (const Cell& occ : occs)
      if (tagged_psi(rows, occ).d == best_d) chosen = occ;  // last in reading order
    PsiResult res = tagged_psi(rows, chosen);
    order.push_back(res.removed_tag);
    drops.push_back(res.d);
    rows = std::move(res.rows);
  }
  return {order, drops};
}

Filling relabel_by_tag_rank(const Filling& f, const std::vector<int>& value_of_tag) {
  std::vector<std::vector<int>> rows = f.rows();
  int tag = 0;
  for (int r = f.shape().rows(); r >= 1; --r)
    for (int c = 1; c <= f.shape().row_length(r); ++c) rows[r - 1][c - 1] = value_of_tag[tag++];
  return Filling(f.shape(), std::move(rows));
}

bool is_column_shape(const Partition& mu) {
  return mu.rows() > 0 && mu.parts()[0] == 1;
}

}  // namespace

Filling standardize_filling(const Filling& f) {
  require_inversion_free(f, "standardize_filling");
  require_leq3_rows(f, "standardize_filling");
  int n = f.size();
  if (f.shape().rows() <= 2) {
    // ties broken by reading order
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> vals(n);
    int tag = 0;
    for (int r = f.shape().rows(); r >= 1; --r)
      for (int c = 1; c <= f.shape().row_length(r); ++c) vals[tag++] = f.at(r, c);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
    std::vector<int> value_of_tag(n);
    for (int i = 0; i < n; ++i) value_of_tag[order[i]] = i + 1;
    return relabel_by_tag_rank(f, value_of_tag);
  }
  auto [order, drops] = removal_process(f);
  std::vector<int> value_of_tag(n);
  for (int i = 0; i < n; ++i) value_of_tag[order[i]] = n - i;
  // the relabeled row multisets rearranged into the inversion-free order
  return arrange_filling(relabel_by_tag_rank(f, value_of_tag).rows());
}

Code majcode_filling(const Filling& f) {
  require_inversion_free(f, "majcode_filling");
  if (is_column_shape(f.shape())) return majcode_column(f);
  require_leq3_rows(f, "majcode_filling");
  return removal_process(f).second;
}

namespace {

Filling insert_into_row(const Filling& f, int row, int v, int target_rows) {
  std::vector<std::vector<int>> rows = f.rows();
  while (static_cast<int>(rows.size()) < std::max(row, target_rows)) rows.emplace_back();
  rows[row - 1].push_back(v);
  return arrange_filling(rows);
}

// One inverse psi step: insert the new maximal entry m into zeta so that the
// drop of the forward map is exactly d and the shape becomes lambda.
Filling invert_psi_step(const Filling& zeta, int m, const Partition& lambda, int d) {
  int r = lambda.rows();
  auto fail = [] { throw not_in_image_error("majcode inverse: code is not in the image"); };
  Filling sigma;
  if (d == 0) {
    sigma = zero_bump_inverse(zeta, m, lambda);
  } else if (d == 1 && r >= 2) {
    int l2 = lambda.row_length(2), l3 = lambda.row_length(3);
    if (r == 2 || l2 > l3) {
      Filling rho = insert_into_row(zeta, 2, m, r);
      if (r == 2) {
        sigma = rho;
      } else {
        Cell mc = unique_max_cell(rho, "majcode inverse");
        if (mc.col > l3) {
          sigma = rho;
        } else {
          int b = rho.at(2, l3 + 1);
          int a2 = bumping_sequence_at_row(
              arrange_filling({std::vector<int>(rho.row(1).begin(), rho.row(1).begin() + l3),
                               std::vector<int>(rho.row(2).begin(), rho.row(2).begin() + l3),
                               rho.row(3)}),
              2)[1];
          if (b < a2) {
            sigma = rho;
          } else {
            auto [tau, dd] = three_row_psi(rho, mc);
            if (dd != 2) fail();
            sigma = insert_into_row(tau, 3, m, r);
          }
        }
      }
    } else {
      // l2 == l3: the rectangle fiber; the two candidate insertions have
      // distinct drops, pick the one matching d
      sigma = Filling();
      for (int into : {3, 2}) {
        std::vector<std::vector<int>> rows = zeta.rows();
        while (static_cast<int>(rows.size()) < 3) rows.emplace_back();
        if (into == 2) {
          int v = pull_up(rows[1], rows[2]);
          auto it = std::find(rows[1].begin(), rows[1].end(), v);
          rows[2].push_back(v);
          rows[1].erase(it);
        }
        rows[into - 1].push_back(m);
        Filling cand = arrange_filling(rows);
        if (maj(cand) - maj(zeta) == d) {
          sigma = cand;
          break;
        }
      }
      if (sigma.size() == 0) fail();
    }
  } else if (d == 2 && r == 3) {
    int l2 = lambda.row_length(2), l3 = lambda.row_length(3);
    if (l2 == l3) {
      sigma = Filling();
      for (int into : {3, 2}) {
        std::vector<std::vector<int>> rows = zeta.rows();
        while (static_cast<int>(rows.size()) < 3) rows.emplace_back();
        if (into == 2) {
          int v = pull_up(rows[1], rows[2]);
          auto it = std::find(rows[1].begin(), rows[1].end(), v);
          rows[2].push_back(v);
          rows[1].erase(it);
        }
        rows[into - 1].push_back(m);
        Filling cand = arrange_filling(rows);
        if (maj(cand) - maj(zeta) == d) {
          sigma = cand;
          break;
        }
      }
      if (sigma.size() == 0) fail();
    } else {
      Filling rho = insert_into_row(zeta, 3, m, r);
      std::vector<int> seq = bumping_sequence_at_row(
          arrange_filling({std::vector<int>(rho.row(1).begin(), rho.row(1).begin() + l3),
                           std::vector<int>(rho.row(2).begin(), rho.row(2).begin() + l3),
                           rho.row(3)}),
          3);
      if (seq[1] > seq[0]) {
        sigma = rho;
      } else {
        std::vector<std::vector<int>> rows = rho.rows();
        auto mit = std::find(rows[2].begin(), rows[2].end(), m);
        rows[2].erase(mit);
        auto ait = std::find(rows[1].begin(), rows[1].end(), seq[1]);
        rows[2].push_back(seq[1]);
        rows[1].erase(ait);
        rows[1].push_back(m);
        sigma = arrange_filling(rows);
      }
    }
  } else {
    fail();
  }
  // verify the step: the forward map must reproduce (zeta, d)
  if (!(sigma.shape() == lambda)) fail();
  Cell occ = unique_max_cell(sigma, "majcode inverse");
  auto [back, dd] = psi_leq3(sigma, occ);
  if (dd != d || !(back == zeta)) fail();
  return sigma;
}

}  // namespace

Filling majcode_filling_inverse(const Code& code, const Partition& mu,
                                const std::vector<int>& sorted_alphabet) {
  int n = mu.size();
  if (static_cast<int>(code.size()) != n || static_cast<int>(sorted_alphabet.size()) != n)
    throw precondition_error("majcode_filling_inverse: size mismatch");
  if (!std::is_sorted(sorted_alphabet.begin(), sorted_alphabet.end()))
    throw precondition_error("majcode_filling_inverse: alphabet must be sorted");
  if (is_column_shape(mu)) return majcode_column_inverse(code, sorted_alphabet);
  if (mu.rows() > 3)
    throw precondition_error("majcode_filling_inverse: shapes with more than three rows are not supported");

  // blocks pair with letters largest first
  std::vector<int> rev(sorted_alphabet.rbegin(), sorted_alphabet.rend());
  for (size_t i = 0; i + 1 < rev.size(); ++i)
    if (rev[i] == rev[i + 1] && code[i] > code[i + 1])
      throw not_in_image_error("majcode inverse: code is not weakly increasing on letter blocks");

  // shape chain determined by the code
  std::vector<Partition> shapes{mu};
  for (int i = 0; i < n; ++i) {
    const Partition& cur = shapes.back();
    if (code[i] < 0 || code[i] + 1 > cur.rows())
      throw not_in_image_error("majcode inverse: code is not mu-sub-Yamanouchi");
    shapes.push_back(corner_removal(cur, code[i] + 1));
  }

  Filling cur;  // empty
  for (int k = n; k >= 1; --k)
    cur = invert_psi_step(cur, n - k + 1, shapes[k - 1], code[k - 1]);

  // un-standardize: order-preserving relabel of the row multisets onto A,
  // rearranged into the unique inversion-free filling
  std::vector<std::vector<int>> rows = cur.rows();
  for (auto& row : rows)
    for (int& v : row) v = sorted_alphabet[v - 1];
  return arrange_filling(rows);
}

Filling zero_bump_inverse(const Filling& f, int m, const Partition& target) {
  if (m <= f.max_entry())
    throw precondition_error("zero_bump_inverse: new entry must exceed all existing entries");
  if (!(corner_removal(target, 1) == f.shape()))
    throw precondition_error("zero_bump_inverse: shape is not target^(1)");
  int T = 0;
  while (T < target.rows() && target.parts()[T] == target.parts()[0]) ++T;
  std::vector<std::vector<int>> rows = f.rows();
  while (static_cast<int>(rows.size()) < target.rows()) rows.emplace_back();
  for (int t = T; t >= 2; --t) {
    int v = pull_up(rows[t - 2], rows[t - 1]);
    auto it = std::find(rows[t - 2].begin(), rows[t - 2].end(), v);
    rows[t - 1].push_back(v);
    rows[t - 2].erase(it);
  }
  rows[0].push_back(m);
  return arrange_filling(rows);
}

std::vector<int> inversion_word(const Filling& f) {
  if (maj(f) != 0) throw precondition_error("inversion_word: filling must be descent-free");
  std::vector<Cell> cells = f.reading_order_cells();
  std::stable_sort(cells.begin(), cells.end(),
                   [&](const Cell& a, const Cell& b) { return f.at(a) < f.at(b); });
  std::vector<int> w;
  w.reserve(cells.size());
  for (const Cell& c : cells) w.push_back(c.col);
  return w;
}

std::vector<int> InversionDiagram::labels() const {
  std::vector<int> seen(shape.rows(), 0);
  std::vector<int> out;
  out.reserve(heights.size());
  for (int h : heights) {
    out.push_back(shape.parts()[h - 1] - seen[h - 1]);
    ++seen[h - 1];
  }
  return out;
}

long long InversionDiagram::inversions() const {
  std::vector<int> lab = labels();
  long long count = 0;
  for (size_t p = 0; p < heights.size(); ++p)
    for (size_t q = p + 1; q < heights.size(); ++q) {
      if (lab[p] == lab[q] && heights[p] > heights[q]) ++count;           // type I
      if (lab[q] == lab[p] + 1 && heights[q] > heights[p]) ++count;      // type II
    }
  return count;
}

std::string InversionDiagram::to_string() const {
  std::vector<int> lab = labels();
  std::ostringstream os;
  for (size_t p = 0; p < heights.size(); ++p) {
    if (p) os << ' ';
    os << '(' << letters[p] << ',' << heights[p] << ',' << lab[p] << ')';
  }
  return os.str();
}

InversionDiagram inv_plot(const Filling& f) {
  InversionDiagram d;
  d.heights = inversion_word(f);
  std::vector<Cell> cells = f.reading_order_cells();
  std::stable_sort(cells.begin(), cells.end(),
                   [&](const Cell& a, const Cell& b) { return f.at(a) < f.at(b); });
  for (const Cell& c : cells) d.letters.push_back(f.at(c));
  d.shape = conjugate(f.shape());
  return d;
}

bool InversionDiagram::is_inversion_word_type() const {
  std::vector<int> lab = labels();
  size_t i = 0;
  while (i < letters.size()) {
    size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    // within a constant-letter run: labels weakly decrease, and equal labels
    // climb from bottom to top
    for (size_t p = i; p + 1 < j; ++p) {
      if (lab[p] < lab[p + 1]) return false;
      if (lab[p] == lab[p + 1] && heights[p] >= heights[p + 1]) return false;
    }
    i = j;
  }
  return true;
}

Filling inv_plot_inverse(const InversionDiagram& d) {
  int n = d.shape.size();
  if (static_cast<int>(d.heights.size()) != n || static_cast<int>(d.letters.size()) != n)
    throw precondition_error("inv_plot_inverse: malformed diagram");
  if (!d.is_inversion_word_type())
    throw precondition_error("inv_plot_inverse: diagram is not of inversion word type");
  Partition target = conjugate(d.shape);
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= target.rows(); ++r) rows.emplace_back(target.row_length(r), 0);
  std::vector<int> lab = d.labels();
  for (int p = 0; p < n; ++p) {
    int col = d.heights[p];
    int row = lab[p];
    if (row < 1 || row > target.rows() || col < 1 || col > target.row_length(row))
      throw precondition_error("inv_plot_inverse: malformed diagram");
    rows[row - 1][col - 1] = d.letters[p];
  }
  return Filling(target, std::move(rows));
}

Code invcode_filling(const Filling& f) {
  if (maj(f) != 0) throw precondition_error("invcode_filling: filling must be descent-free");
  std::vector<Cell> cells = f.reading_order_cells();
  std::stable_sort(cells.begin(), cells.end(),
                   [&](const Cell& a, const Cell& b) { return f.at(a) < f.at(b); });
  int n = f.size();
  std::vector<std::vector<int>> index(f.shape().rows() + 1);
  for (int r = 1; r <= f.shape().rows(); ++r)
    index[r].assign(f.shape().row_length(r), 0);
  for (int i = 0; i < n; ++i) index[cells[i].row][cells[i].col - 1] = i;

  Code code(n, 0);
  const Partition& mu = f.shape();
  for (int r = 1; r <= mu.rows(); ++r) {
    int len = mu.row_length(r);
    for (int c = 1; c <= len; ++c) {
      for (int c2 = c + 1; c2 <= len; ++c2)
        if (f.at(r, c) > f.at(r, c2)) ++code[index[r][c2 - 1]];
      if (r > 1) {
        for (int cv = 1; cv < c && cv <= mu.row_length(r - 1); ++cv)
          if (f.at(r, c) > f.at(r - 1, cv)) ++code[index[r - 1][cv - 1]];
      }
    }
  }
  return code;
}

Filling invcode_filling_inverse(const Code& code, const Partition& mu,
                                const std::vector<int>& sorted_alphabet) {
  int n = mu.size();
  if (static_cast<int>(code.size()) != n || static_cast<int>(sorted_alphabet.size()) != n)
    throw precondition_error("invcode_filling_inverse: size mismatch");
  if (!std::is_sorted(sorted_alphabet.begin(), sorted_alphabet.end()))
    throw precondition_error("invcode_filling_inverse: alphabet must be sorted");
  if (!is_sub_yamanouchi(code, mu) || !is_a_weakly_increasing(code, sorted_alphabet))
    throw not_in_image_error("invcode inverse: code is outside C_{mu,A}");

  // place dots left to right; the code number determines a unique height
  std::vector<int> placed(mu.rows(), 0);
  std::vector<int> heights(n, 0);
  for (int t = 0; t < n; ++t) {
    int chosen = 0, matches = 0;
    for (int h = 1; h <= mu.rows(); ++h) {
      if (placed[h - 1] >= mu.parts()[h - 1]) continue;
      int lab = mu.parts()[h - 1] - placed[h - 1];
      int c = 0;
      for (int j = 1; j <= mu.rows(); ++j) {
        if (j == h) continue;
        int cap = mu.parts()[j - 1] - placed[j - 1];
        if (j < h && cap >= lab) ++c;
        if (j > h && cap >= lab + 1) ++c;
      }
      if (c == code[t]) {
        chosen = h;
        ++matches;
      }
    }
    if (matches == 0)
      throw not_in_image_error("invcode inverse: no compatible height for the code");
    if (matches > 1) throw std::logic_error("invcode inverse: height is not unique");
    heights[t] = chosen;
    ++placed[chosen - 1];
  }
  InversionDiagram d;
  d.shape = mu;
  d.heights = std::move(heights);
  d.letters = sorted_alphabet;
  return inv_plot_inverse(d);
}

Filling hl_symmetry_map(const Filling& f) {
  Code code = majcode_filling(f);
  std::vector<int> comp = complement_alphabet(alphabet_of(f));
  return invcode_filling_inverse(code, f.shape(), comp);
}

int crossing_number(const std::vector<int>& word, const std::vector<int>& zero_order) {
  int n = static_cast<int>(word.size());
  int zeros = 0;
  for (int x : word) {
    if (x != 0 && x != 1) throw precondition_error("crossing_number: word must be over {0,1}");
    zeros += (x == 0);
  }
  if (2 * zeros != n)
    throw precondition_error("crossing_number: word must be balanced");
  if (static_cast<int>(zero_order.size()) != zeros)
    throw precondition_error("crossing_number: ordering must list every zero once");
  std::vector<bool> used(n, false);
  int crossings = 0;
  for (int a : zero_order) {
    if (a < 0 || a >= n || word[a] != 0)
      throw precondition_error("crossing_number: ordering must list zero positions");
    int b = -1;
    for (int step = 1; step <= n; ++step) {
      int q = (a + step) % n;
      if (word[q] == 1 && !used[q]) {
        b = q;
        break;
      }
    }
    used[b] = true;
    if (b < a) ++crossings;
  }
  return crossings;
}

}  // namespace invmaj
