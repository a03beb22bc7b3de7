#include "invmaj/codes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "invmaj/errors.hpp"

namespace invmaj {

long long code_sum(const Code& c) {
  return std::accumulate(c.begin(), c.end(), 0LL);
}

std::string code_to_string(const Code& c) {
  bool digits = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0 && x < 10; });
  std::ostringstream os;
  for (size_t i = 0; i < c.size(); ++i) {
    if (!digits && i) os << ',';
    os << c[i];
  }
  return os.str();
}

bool is_carlitz(const Code& code) {
  int n = static_cast<int>(code.size());
  for (int i = 1; i <= n; ++i)
    if (code[i - 1] < 0 || code[i - 1] > n - i) return false;
  return true;
}

bool is_yamanouchi(const std::vector<int>& word) {
  std::vector<int> counts;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int v = *it;
    if (v < 0) return false;
    if (v >= static_cast<int>(counts.size())) counts.resize(v + 1, 0);
    ++counts[v];
    if (v > 0 && counts[v] > counts[v - 1]) return false;
  }
  return true;
}

namespace {
// Build Yamanouchi words right to left; a letter v may be prepended when the
// suffix still has room for it under the count chain.
void yamanouchi_rec(const Partition& mu, std::vector<int>& used, int remaining,
                    std::vector<int>& acc, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.emplace_back(acc.rbegin(), acc.rend());
    return;
  }
  for (int v = 0; v < mu.rows(); ++v) {
    if (used[v] >= mu.parts()[v]) continue;
    if (v > 0 && used[v] + 1 > used[v - 1]) continue;
    ++used[v];
    acc.push_back(v);
    yamanouchi_rec(mu, used, remaining - 1, acc, out);
    acc.pop_back();
    --used[v];
  }
}
}  // namespace

std::vector<std::vector<int>> enumerate_yamanouchi(const Partition& mu) {
  std::vector<std::vector<int>> out;
  std::vector<int> used(mu.rows(), 0), acc;
  yamanouchi_rec(mu, used, mu.size(), acc, out);
  return out;
}

bool is_sub_yamanouchi(const Code& code, const Partition& mu) {
  int n = mu.size();
  if (static_cast<int>(code.size()) != n)
    throw precondition_error("is_sub_yamanouchi: code length must equal |mu|");
  for (int c : code)
    if (c < 0) return false;
  // Search for a dominating Yamanouchi witness from the right, memoized on
  // the multiset of letters already used in the suffix.
  std::map<std::vector<int>, bool> memo;
  std::function<bool(int, std::vector<int>&)> rec = [&](int pos, std::vector<int>& used) -> bool {
    if (pos == 0) return true;
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (int v = code[pos - 1]; v < mu.rows() && !ok; ++v) {
      if (used[v] >= mu.parts()[v]) continue;
      if (v > 0 && used[v] + 1 > used[v - 1]) continue;
      ++used[v];
      ok = rec(pos - 1, used);
      --used[v];
    }
    memo[used] = ok;
    return ok;
  };
  std::vector<int> used(mu.rows(), 0);
  return rec(n, used);
}

bool is_a_weakly_increasing(const Code& code, const std::vector<int>& sorted_alphabet) {
  if (code.size() != sorted_alphabet.size())
    throw precondition_error("is_a_weakly_increasing: code/alphabet length mismatch");
  for (size_t i = 0; i + 1 < code.size(); ++i)
    if (sorted_alphabet[i] == sorted_alphabet[i + 1] && code[i] > code[i + 1]) return false;
  return true;
}

namespace {
void check_sorted(const std::vector<int>& a) {
  if (!std::is_sorted(a.begin(), a.end()))
    throw precondition_error("alphabet must be sorted ascending");
}
}  // namespace

std::set<Code> enumerate_codes(const Partition& mu, const std::vector<int>& sorted_alphabet) {
  check_sorted(sorted_alphabet);
  if (static_cast<int>(sorted_alphabet.size()) != mu.size())
    throw precondition_error("enumerate_codes: |A| must equal |mu|");

  // General recursion: split on the first letter i-1, recurse on mu^(i) with
  // the smallest alphabet letter removed; when a_1 = a_2 the sub-code must
  // start at i-1 or above.  Memoized on (shape, alphabet suffix).
  std::map<std::pair<std::vector<int>, int>, std::set<Code>> memo;
  std::function<const std::set<Code>&(const Partition&, int)> rec =
      [&](const Partition& shape, int depth) -> const std::set<Code>& {
    auto key = std::make_pair(shape.parts(), depth);
    auto found = memo.find(key);
    if (found != memo.end()) return found->second;
    std::set<Code> out;
    if (shape.size() == 0) {
      out.insert(Code{});
    } else {
      size_t a0 = depth;
      bool tied = a0 + 1 < sorted_alphabet.size() &&
                  sorted_alphabet[a0] == sorted_alphabet[a0 + 1];
      for (int i = 1; i <= shape.rows(); ++i) {
        Partition down = corner_removal(shape, i);
        for (const Code& d : rec(down, depth + 1)) {
          if (tied && !d.empty() && d.front() < i - 1) continue;
          Code c;
          c.reserve(d.size() + 1);
          c.push_back(i - 1);
          c.insert(c.end(), d.begin(), d.end());
          out.insert(std::move(c));
        }
      }
    }
    return memo.emplace(std::move(key), std::move(out)).first->second;
  };
  return rec(mu, 0);
}

std::set<Code> enumerate_codes_bruteforce(const Partition& mu,
                                          const std::vector<int>& sorted_alphabet) {
  check_sorted(sorted_alphabet);
  if (static_cast<int>(sorted_alphabet.size()) != mu.size())
    throw precondition_error("enumerate_codes_bruteforce: |A| must equal |mu|");
  // Straight from the definition: the union over Yamanouchi witnesses v of
  // all componentwise-dominated words, filtered by the block condition.
  std::set<Code> out;
  int n = mu.size();
  for (const auto& v : enumerate_yamanouchi(mu)) {
    Code c(n, 0);
    std::function<void(int)> boxes = [&](int pos) {
      if (pos == n) {
        if (is_a_weakly_increasing(c, sorted_alphabet)) out.insert(c);
        return;
      }
      for (int x = 0; x <= v[pos]; ++x) {
        c[pos] = x;
        boxes(pos + 1);
      }
      c[pos] = 0;
    };
    boxes(0);
  }
  return out;
}

std::vector<int> code_monomial(const Code& code) {
  int n = static_cast<int>(code.size());
  std::vector<int> exps(n, 0);
  for (int i = 1; i <= n; ++i) exps[n - i] = code[i - 1];
  return exps;
}

}  // namespace invmaj
