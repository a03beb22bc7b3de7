#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace invmaj {

// Sparse polynomial in one formal variable with exact integer coefficients.
class QPolynomial {
 public:
  QPolynomial() = default;
  static QPolynomial one() { return constant(1); }
  static QPolynomial constant(long long c);
  static QPolynomial monomial(int degree, long long c = 1);

  void add_term(int degree, long long c);
  long long coefficient(int degree) const;
  const std::map<int, long long>& terms() const { return terms_; }

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial operator*(const QPolynomial& o) const;
  bool operator==(const QPolynomial&) const = default;

  long long evaluate_at_one() const;
  bool is_zero() const { return terms_.empty(); }

  // "1 + 2*q^2" style; unit coefficients and exponents are omitted.
  std::string to_string(const std::string& var = "q") const;

 private:
  std::map<int, long long> terms_;  // degree -> nonzero coefficient
};

// Sparse exact-integer polynomial in the two formal variables q, t.
class QTPolynomial {
 public:
  QTPolynomial() = default;

  void add_term(int qdeg, int tdeg, long long c);
  long long coefficient(int qdeg, int tdeg) const;
  const std::map<std::pair<int, int>, long long>& terms() const { return terms_; }

  QTPolynomial& operator+=(const QTPolynomial& o);
  bool operator==(const QTPolynomial&) const = default;

  QTPolynomial with_swapped_variables() const;  // q <-> t
  QPolynomial at_q_zero() const;                // t-polynomial slice
  QPolynomial at_t_one() const;                 // collapse t, keep q
  QPolynomial at_q_one() const;                 // collapse q, keep t
  long long evaluate_at_one_one() const;
  bool is_zero() const { return terms_.empty(); }

  // Canonical graded-lex order of (q-degree, t-degree); "1 + q" style.
  std::string to_string() const;
  // Triples [qdeg, tdeg, coeff] in the same canonical order.
  std::vector<std::array<long long, 3>> to_triples() const;

 private:
  std::map<std::pair<int, int>, long long> terms_;
};

QPolynomial q_factorial(int n);
QPolynomial q_binomial(int n, int k);

// Gaussian multinomial (n; parts)_q as an exact polynomial.
QPolynomial q_multinomial(int n, const std::vector<int>& parts);

}  // namespace invmaj
