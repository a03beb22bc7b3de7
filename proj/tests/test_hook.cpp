#include <doctest.h>

#include <set>
#include <string>

#include "invmaj/enumerate.hpp"
#include "invmaj/errors.hpp"
#include "invmaj/hook.hpp"
#include "invmaj/statistics.hpp"
#include "invmaj/word_codes.hpp"

using namespace invmaj;

TEST_CASE("hook predicates") {
  CHECK(is_hook(Partition({4, 1, 1})));
  CHECK(is_hook(Partition({3})));
  CHECK(is_hook(Partition({1, 1, 1})));
  CHECK_FALSE(is_hook(Partition({3, 2})));
  CHECK_THROWS_AS(hook_codes(parse_filling("[[1,2],[1,2]]")), precondition_error);
}

TEST_CASE("degenerate hooks reduce to the word codes") {
  // single row: Y is the trivial zero at the corner, X is the invcode
  Filling row = row_filling({4, 1, 3, 2});
  HookCodePair p = hook_codes(row);
  Code x;
  for (int i = 0; i < p.size; ++i)
    if (p.in_row[i]) x.push_back(p.value[i]);
  CHECK(x == invcode_word({4, 1, 3, 2}));
  CHECK(p.value[p.corner_position()] == 0);

  // single column: X trivial, Y backwards is the majcode
  Filling col = column_filling({3, 2, 4, 1});
  HookCodePair q = hook_codes(col);
  Code d;
  for (int i = q.size - 1; i >= 0; --i)
    if (q.in_column[i]) d.push_back(q.value[i]);
  CHECK(d == majcode_column_word({3, 2, 4, 1}));
}

TEST_CASE("hook code roundtrip and statistics") {
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& mu : partitions_of(n)) {
      if (!is_hook(mu)) continue;
      for (const auto& alpha : compositions_of(n, 3)) {
        enumerate_fillings(mu, alpha, [&](const Filling& f) {
          HookCodePair p = hook_codes(f);
          long long sum_x = 0, sum_y = 0;
          for (int i = 0; i < p.size; ++i) {
            if (p.in_row[i]) sum_x += p.value[i];
            if (p.in_column[i]) sum_y += p.value[i];
          }
          CHECK(sum_x == inv_relative(f));
          CHECK(sum_y == maj(f));
          CHECK(hook_codes_inverse(p, p.letters, mu) == f);
        });
      }
    }
  }
}

TEST_CASE("rejection reports the violated condition") {
  Filling f = parse_filling("[[1,2],[2]]");
  HookCodePair p = hook_codes(f);
  // move the shared zero off the corner: misaligned zeros
  HookCodePair bad = p;
  int corner = bad.corner_position();
  bad.value[corner] = 1;
  try {
    hook_codes_inverse(bad, bad.letters, f.shape());
    CHECK(false);
  } catch (const not_in_image_error& e) {
    CHECK(std::string(e.what()).find("condition") != std::string::npos);
  }

  HookCodePair overlap = p;
  overlap.in_column[corner] = false;
  try {
    hook_codes_inverse(overlap, overlap.letters, f.shape());
    CHECK(false);
  } catch (const not_in_image_error& e) {
    CHECK(std::string(e.what()).find("condition 2") != std::string::npos);
  }
}

TEST_CASE("phi is a statistic-swapping involution") {
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& mu : partitions_of(n)) {
      if (!is_hook(mu)) continue;
      Partition conj = conjugate(mu);
      for (const auto& alpha : compositions_of(n, 3)) {
        std::set<Filling> image;
        long long count = 0;
        enumerate_fillings(mu, alpha, [&](const Filling& f) {
          ++count;
          Filling g = hook_phi(f);
          image.insert(g);
          CHECK(g.shape() == conj);
          CHECK(maj(g) == inv_relative(f));
          CHECK(inv_relative(g) == maj(f));
          CHECK(content_of(g, alpha.size()) == reverse_content(alpha));
          CHECK(hook_phi(g) == f);
        });
        CHECK(static_cast<long long>(image.size()) == count);
      }
    }
  }
}

TEST_CASE("phi on single rows and columns") {
  Filling row = row_filling({2, 1, 3});
  Filling col = hook_phi(row);
  CHECK(col.shape() == Partition({1, 1, 1}));
  CHECK(maj(col) == inv_relative(row));
  CHECK(hook_phi(col) == row);
}

TEST_CASE("phi over an alphabet with a gap") {
  // letters {1,3,3}: the reversed content (2,0,1) keeps its interior zero
  for (const Partition& mu : {Partition({2, 1}), Partition({3})}) {
    enumerate_fillings(mu, {1, 0, 2}, [&](const Filling& f) {
      Filling g = hook_phi(f);
      CHECK(content_of(g, 3) == std::vector<int>{2, 0, 1});
      CHECK(maj(g) == inv_relative(f));
      CHECK(inv_relative(g) == maj(f));
      CHECK(hook_phi(g) == f);
    });
  }
}
