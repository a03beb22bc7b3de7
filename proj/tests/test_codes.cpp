#include <doctest.h>

#include <functional>

#include "invmaj/codes.hpp"
#include "invmaj/enumerate.hpp"
#include "invmaj/errors.hpp"
#include "invmaj/statistics.hpp"

using namespace invmaj;

TEST_CASE("carlitz codes") {
  CHECK(is_carlitz({1, 2, 1, 0}));
  CHECK(is_carlitz({0, 0, 0, 0}));
  CHECK_FALSE(is_carlitz({4, 0, 0, 0}));
  CHECK_FALSE(is_carlitz({0, 0, 0, 1}));
  // exactly n! codes of length n
  for (int n = 1; n <= 6; ++n) {
    long long count = 0;
    Code c(n, 0);
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        CHECK(is_carlitz(c));
        ++count;
        return;
      }
      for (int v = 0; v <= n - (i + 1); ++v) {
        c[i] = v;
        rec(i + 1);
      }
      c[i] = 0;
    };
    rec(0);
    long long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(count == fact);
  }
}

TEST_CASE("yamanouchi words") {
  CHECK(is_yamanouchi({1, 0, 1, 0}));
  CHECK_FALSE(is_yamanouchi({0, 1}));
  CHECK(is_yamanouchi({4, 3, 0, 4, 2, 2, 1, 3, 0, 0, 2, 1, 1, 0, 0}));
}

TEST_CASE("sub-yamanouchi words") {
  // the worked 15-letter witness: its digit strings are authoritative, with
  // content (5,3,3,2,2)
  Partition mu({5, 3, 3, 2, 2});
  Code c{1, 2, 0, 4, 1, 2, 1, 3, 0, 0, 1, 0, 1, 0, 0};
  CHECK(is_sub_yamanouchi(c, mu));

  Partition small({2, 1});
  CHECK(is_sub_yamanouchi({0, 0, 0}, small));
  CHECK_FALSE(is_sub_yamanouchi({2, 0, 0}, small));
  CHECK_THROWS_AS(is_sub_yamanouchi({0, 0}, small), precondition_error);

  // for one-column shapes they are exactly the Carlitz codes
  for (int n = 1; n <= 6; ++n) {
    Partition col(std::vector<int>(n, 1));
    Code code(n, 0);
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        CHECK(is_sub_yamanouchi(code, col) == is_carlitz(code));
        return;
      }
      for (int v = 0; v < n; ++v) {
        code[i] = v;
        rec(i + 1);
      }
      code[i] = 0;
    };
    if (n <= 5) rec(0);
  }
}

TEST_CASE("a-weakly increasing") {
  CHECK(is_a_weakly_increasing({2, 3, 7, 1, 1, 2, 1, 3}, {1, 1, 2, 3, 3, 3, 4, 4}));
  CHECK(is_a_weakly_increasing({5, 3, 1}, {1, 2, 3}));
  CHECK_FALSE(is_a_weakly_increasing({1, 0}, {2, 2}));
}

TEST_CASE("code monomial") {
  CHECK(code_monomial({1, 0}) == std::vector<int>{0, 1});
  CHECK(code_monomial({0, 0, 0}) == std::vector<int>{0, 0, 0});
  CHECK(code_monomial({2, 1, 0}) == std::vector<int>{0, 1, 2});
}

TEST_CASE("code text form") {
  CHECK(code_to_string({0, 4, 0, 0, 0, 0}) == "040000");
  CHECK(code_to_string({11, 0}) == "11,0");
}

TEST_CASE("enumerate_codes counts") {
  std::vector<int> a4{1, 2, 3, 4};
  CHECK(enumerate_codes(Partition({1, 1, 1, 1}), a4).size() == 24);
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> A(n);
    for (int i = 0; i < n; ++i) A[i] = i + 1;
    for (const Partition& mu : partitions_of(n)) {
      CHECK(static_cast<long long>(enumerate_codes(mu, A).size()) ==
            multinomial(mu.parts()));
    }
  }
}

TEST_CASE("the three codes of the column example") {
  // codes of columns over {2,2,1,1,1,1} restricted to sum 4; the alphabet is
  // listed largest first, so in the ascending convention the block pattern
  // is that of the complement {1,1,2,2,2,2}
  std::vector<int> blocks{1, 1, 2, 2, 2, 2};
  std::set<Code> sum4;
  for (const Code& c : enumerate_codes(Partition({1, 1, 1, 1, 1, 1}), blocks))
    if (code_sum(c) == 4) sum4.insert(c);
  std::set<Code> expected{{0, 4, 0, 0, 0, 0}, {1, 3, 0, 0, 0, 0}, {2, 2, 0, 0, 0, 0}};
  CHECK(sum4 == expected);
  // descending-run blocks match directly
  for (const Code& c : expected)
    CHECK(is_a_weakly_increasing(c, {2, 2, 1, 1, 1, 1}));
}

TEST_CASE("recursion equals the definitional enumeration") {
  for (int n = 1; n <= 5; ++n) {
    for (const Partition& mu : partitions_of(n)) {
      for (const auto& alpha : compositions_of(n, 3)) {
        std::vector<int> A;
        for (size_t i = 0; i < alpha.size(); ++i)
          A.insert(A.end(), alpha[i], static_cast<int>(i) + 1);
        std::set<Code> rec = enumerate_codes(mu, A);
        std::set<Code> brute = enumerate_codes_bruteforce(mu, A);
        CHECK(rec == brute);
        // cross-check the membership predicate against the enumeration
        for (const Code& c : brute) {
          CHECK(is_sub_yamanouchi(c, mu));
          CHECK(is_a_weakly_increasing(c, A));
        }
      }
    }
  }
}

TEST_CASE("code sets count the descent-free fillings of the conjugate") {
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& mu : partitions_of(n)) {
      Partition conj = conjugate(mu);
      for (const auto& alpha : compositions_of(n, 3)) {
        std::vector<int> A;
        for (size_t i = 0; i < alpha.size(); ++i)
          A.insert(A.end(), alpha[i], static_cast<int>(i) + 1);
        long long codes = static_cast<long long>(enumerate_codes(mu, A).size());
        long long fillings = 0;
        std::vector<int> ralpha(alpha.rbegin(), alpha.rend());
        enumerate_fillings(conj, ralpha, [&](const Filling& f) {
          if (maj(f) == 0) ++fillings;
        });
        CHECK(codes == fillings);
      }
    }
  }
}

TEST_CASE("digit filter oracle agrees at small sizes") {
  for (int n = 1; n <= 5; ++n) {
    for (const Partition& mu : partitions_of(n)) {
      std::vector<int> A(n);
      for (int i = 0; i < n; ++i) A[i] = i + 1;
      std::set<Code> filtered;
      Code c(n, 0);
      std::function<void(int)> rec = [&](int i) {
        if (i == n) {
          if (is_sub_yamanouchi(c, mu) && is_a_weakly_increasing(c, A)) filtered.insert(c);
          return;
        }
        for (int v = 0; v < mu.rows(); ++v) {
          c[i] = v;
          rec(i + 1);
        }
        c[i] = 0;
      };
      rec(0);
      CHECK(filtered == enumerate_codes_bruteforce(mu, A));
    }
  }
}
