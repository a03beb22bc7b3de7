#include <doctest.h>

#include "invmaj/enumerate.hpp"
#include "invmaj/errors.hpp"
#include "invmaj/genfun.hpp"
#include "invmaj/statistics.hpp"

using namespace invmaj;

namespace {
QTPolynomial qt(std::initializer_list<std::array<int, 3>> terms) {
  QTPolynomial p;
  for (auto [a, b, c] : terms) p.add_term(a, b, c);
  return p;
}
}  // namespace

TEST_CASE("macdonald coefficients of tiny shapes") {
  CHECK(macdonald_coefficient(Partition({1}), {1}) == qt({{0, 0, 1}}));
  CHECK(macdonald_coefficient(Partition({2}), {1, 1}) == qt({{0, 0, 1}, {1, 0, 1}}));
  CHECK(macdonald_coefficient(Partition({1, 1}), {1, 1}) == qt({{0, 0, 1}, {0, 1, 1}}));
  CHECK_THROWS_AS(macdonald_coefficient(Partition({2}), {1}), precondition_error);
}

TEST_CASE("hall-littlewood coefficients") {
  QPolynomial one_plus_t;
  one_plus_t.add_term(0, 1);
  one_plus_t.add_term(1, 1);
  CHECK(hall_littlewood_coefficient(Partition({1, 1}), {1, 1}) == one_plus_t);
  CHECK(hall_littlewood_coefficient(Partition({2}), {1, 1}) == QPolynomial::one());
  CHECK(hall_littlewood_coefficient(Partition({1}), {1}) == QPolynomial::one());

  // the q = 0 slice of the full coefficient
  for (const Partition& mu : partitions_of(5)) {
    for (const auto& alpha : compositions_of(5, 3)) {
      CHECK(macdonald_coefficient(mu, alpha).at_q_zero() ==
            hall_littlewood_coefficient(mu, alpha));
    }
  }
}

TEST_CASE("symmetry spot checks") {
  CHECK(check_symmetry(Partition({1}), 3));
  CHECK(check_symmetry(Partition({2, 1}), 3));
  CHECK(check_symmetry(Partition({3, 2, 1}), 3));
}

TEST_CASE("t=1 identity: maj over mu matches inv over the conjugate") {
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& mu : partitions_of(n)) {
      Partition conj = conjugate(mu);
      for (const auto& alpha : compositions_of(n, 3)) {
        CHECK(macdonald_coefficient(mu, alpha).at_q_one() ==
              macdonald_coefficient(conj, alpha).at_t_one());
      }
    }
  }
}

TEST_CASE("q-multinomials") {
  QPolynomial one_plus_q;
  one_plus_q.add_term(0, 1);
  one_plus_q.add_term(1, 1);
  CHECK(q_multinomial(2, {1, 1}) == one_plus_q);
  CHECK(q_multinomial(2, {2}) == QPolynomial::one());

  QPolynomial expect;  // 1 + 2q + 2q^2 + q^3
  expect.add_term(0, 1);
  expect.add_term(1, 2);
  expect.add_term(2, 2);
  expect.add_term(3, 1);
  CHECK(q_multinomial(3, {1, 1, 1}) == expect);
  CHECK(q_factorial(3) == expect);
  CHECK_THROWS_AS(q_multinomial(3, {1, 1}), precondition_error);

  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(q_binomial(n, k).evaluate_at_one() == multinomial({k, n - k}));
}

TEST_CASE("polynomial printing") {
  CHECK(macdonald_coefficient(Partition({2}), {1, 1}).to_string() == "1 + q");
  CHECK(macdonald_coefficient(Partition({1, 1}), {1, 1}).to_string() == "1 + t");
  CHECK(macdonald_coefficient(Partition({1}), {1}).to_string() == "1");
  CHECK(QTPolynomial().to_string() == "0");
  QTPolynomial p;
  p.add_term(2, 1, 3);
  p.add_term(0, 1, 1);
  p.add_term(1, 0, 1);
  CHECK(p.to_string() == "t + q + 3*q^2*t");
}

TEST_CASE("specialization at q=t=1 counts fillings") {
  for (const Partition& mu : partitions_of(6)) {
    for (const auto& alpha : compositions_of(6, 3)) {
      CHECK(macdonald_coefficient(mu, alpha).evaluate_at_one_one() == multinomial(alpha));
    }
  }
}

TEST_CASE("row inversion distribution matches the q-multinomial") {
  // base rows of length up to 4 over three letters
  for (int L = 1; L <= 4; ++L) {
    std::vector<int> base(L, 1);
    while (true) {
      for (int k = 1; k <= L; ++k) {
        for (const auto& mult : compositions_of(k, 3)) {
          std::vector<int> letters;
          for (size_t i = 0; i < mult.size(); ++i)
            letters.insert(letters.end(), mult[i], static_cast<int>(i) + 1);
          CHECK(row_inversion_distribution(letters, base) == q_multinomial(k, mult));
        }
      }
      int p = L - 1;
      while (p >= 0 && base[p] == 3) base[p--] = 1;
      if (p < 0) break;
      ++base[p];
    }
  }
}
