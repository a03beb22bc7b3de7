#include "invmaj/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "invmaj/errors.hpp"
#include "invmaj/hall_littlewood.hpp"

namespace invmaj {

void enumerate_fillings(const Partition& shape, const std::vector<int>& content,
                        const std::function<void(const Filling&)>& visit) {
  int n = shape.size();
  std::vector<int> letters;
  for (size_t i = 0; i < content.size(); ++i) {
    if (content[i] < 0) throw precondition_error("content entries must be nonnegative");
    letters.insert(letters.end(), content[i], static_cast<int>(i) + 1);
  }
  if (static_cast<int>(letters.size()) != n)
    throw precondition_error("content size does not match shape");

  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= shape.rows(); ++r)
    rows.emplace_back(shape.row_length(r), 0);
  do {
    int k = 0;
    for (auto& row : rows)
      for (int& v : row) v = letters[k++];
    visit(Filling(shape, rows));
  } while (std::next_permutation(letters.begin(), letters.end()));
}

std::vector<Filling> all_fillings(const Partition& shape, const std::vector<int>& content) {
  std::vector<Filling> out;
  enumerate_fillings(shape, content, [&](const Filling& f) { out.push_back(f); });
  return out;
}

void enumerate_inversion_free_fillings(const Partition& shape, const std::vector<int>& content,
                                       const std::function<void(const Filling&)>& visit) {
  int n = shape.size();
  if (std::accumulate(content.begin(), content.end(), 0) != n)
    throw precondition_error("content size does not match shape");
  int k = static_cast<int>(content.size());
  // distribute the letters over the rows, then take the unique
  // inversion-free arrangement of each split
  std::vector<std::vector<int>> rows(shape.rows());
  std::vector<int> left(content);
  std::function<void(int)> fill_row = [&](int r) {
    if (r > shape.rows()) {
      visit(arrange_filling(rows));
      return;
    }
    int want = shape.row_length(r);
    std::vector<int> take(k, 0);
    std::function<void(int, int)> choose = [&](int letter, int remaining) {
      if (letter == k) {
        if (remaining) return;
        rows[r - 1].clear();
        for (int v = 0; v < k; ++v) {
          rows[r - 1].insert(rows[r - 1].end(), take[v], v + 1);
          left[v] -= take[v];
        }
        fill_row(r + 1);
        for (int v = 0; v < k; ++v) left[v] += take[v];
        return;
      }
      int cap = std::min(left[letter], remaining);
      for (int t = 0; t <= cap; ++t) {
        take[letter] = t;
        choose(letter + 1, remaining - t);
      }
      take[letter] = 0;
    };
    choose(0, want);
  };
  fill_row(1);
}

namespace {
void compositions_rec(int n, int max_parts, std::vector<int>& acc,
                      std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(acc);
    return;
  }
  if (max_parts == 0) return;
  for (int p = 1; p <= n; ++p) {
    acc.push_back(p);
    compositions_rec(n - p, max_parts - 1, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<std::vector<int>> compositions_of(int n, int max_parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  compositions_rec(n, max_parts, acc, out);
  return out;
}

std::vector<std::vector<int>> weak_compositions_of(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc(k, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == k) {
      if (left == 0) out.push_back(acc);
      return;
    }
    for (int p = 0; p <= left; ++p) {
      acc[pos] = p;
      rec(pos + 1, left - p);
    }
  };
  rec(0, n);
  return out;
}

long long multinomial(const std::vector<int>& parts) {
  long long result = 1;
  long long total = 0;
  for (int p : parts) {
    for (int j = 1; j <= p; ++j) {
      ++total;
      result = result * total / j;  // exact: result*total is divisible by j here
    }
  }
  return result;
}

}  // namespace invmaj
