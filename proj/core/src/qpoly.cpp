#include "invmaj/qpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "invmaj/errors.hpp"

namespace invmaj {

QPolynomial QPolynomial::constant(long long c) {
  QPolynomial p;
  p.add_term(0, c);
  return p;
}

QPolynomial QPolynomial::monomial(int degree, long long c) {
  QPolynomial p;
  p.add_term(degree, c);
  return p;
}

void QPolynomial::add_term(int degree, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

long long QPolynomial::coefficient(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? 0 : it->second;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  for (auto [d, c] : o.terms_) add_term(d, c);
  return *this;
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  QPolynomial out;
  for (auto [d1, c1] : terms_)
    for (auto [d2, c2] : o.terms_) out.add_term(d1 + d2, c1 * c2);
  return out;
}

long long QPolynomial::evaluate_at_one() const {
  long long s = 0;
  for (auto [d, c] : terms_) s += c;
  return s;
}

namespace {
std::string format_term(long long c, const std::vector<std::pair<std::string, int>>& vars) {
  std::ostringstream os;
  bool printed = false;
  if (c != 1 || std::all_of(vars.begin(), vars.end(),
                            [](const auto& v) { return v.second == 0; })) {
    os << c;
    printed = true;
  }
  for (const auto& [name, deg] : vars) {
    if (deg == 0) continue;
    if (printed) os << '*';
    os << name;
    if (deg != 1) os << '^' << deg;
    printed = true;
  }
  return os.str();
}
}  // namespace

std::string QPolynomial::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [d, c] : terms_) {
    if (!first) os << " + ";
    os << format_term(c, {{var, d}});
    first = false;
  }
  return os.str();
}

void QTPolynomial::add_term(int qdeg, int tdeg, long long c) {
  if (c == 0) return;
  auto key = std::make_pair(qdeg, tdeg);
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

long long QTPolynomial::coefficient(int qdeg, int tdeg) const {
  auto it = terms_.find({qdeg, tdeg});
  return it == terms_.end() ? 0 : it->second;
}

QTPolynomial& QTPolynomial::operator+=(const QTPolynomial& o) {
  for (auto [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

QTPolynomial QTPolynomial::with_swapped_variables() const {
  QTPolynomial out;
  for (auto [k, c] : terms_) out.add_term(k.second, k.first, c);
  return out;
}

QPolynomial QTPolynomial::at_q_zero() const {
  QPolynomial out;
  for (auto [k, c] : terms_)
    if (k.first == 0) out.add_term(k.second, c);
  return out;
}

QPolynomial QTPolynomial::at_t_one() const {
  QPolynomial out;
  for (auto [k, c] : terms_) out.add_term(k.first, c);
  return out;
}

QPolynomial QTPolynomial::at_q_one() const {
  QPolynomial out;
  for (auto [k, c] : terms_) out.add_term(k.second, c);
  return out;
}

long long QTPolynomial::evaluate_at_one_one() const {
  long long s = 0;
  for (auto [k, c] : terms_) s += c;
  return s;
}

namespace {
// graded-lex on (q-degree, t-degree)
std::vector<std::pair<std::pair<int, int>, long long>> canonical_order(
    const std::map<std::pair<int, int>, long long>& terms) {
  std::vector<std::pair<std::pair<int, int>, long long>> v(terms.begin(), terms.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    int ga = a.first.first + a.first.second;
    int gb = b.first.first + b.first.second;
    if (ga != gb) return ga < gb;
    return a.first < b.first;
  });
  return v;
}
}  // namespace

std::string QTPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : canonical_order(terms_)) {
    if (!first) os << " + ";
    os << format_term(c, {{"q", k.first}, {"t", k.second}});
    first = false;
  }
  return os.str();
}

std::vector<std::array<long long, 3>> QTPolynomial::to_triples() const {
  std::vector<std::array<long long, 3>> out;
  for (const auto& [k, c] : canonical_order(terms_))
    out.push_back({static_cast<long long>(k.first), static_cast<long long>(k.second), c});
  return out;
}

QPolynomial q_factorial(int n) {
  QPolynomial out = QPolynomial::one();
  for (int m = 2; m <= n; ++m) {
    QPolynomial bracket;  // 1 + q + ... + q^{m-1}
    for (int d = 0; d < m; ++d) bracket.add_term(d, 1);
    out = out * bracket;
  }
  return out;
}

QPolynomial q_binomial(int n, int k) {
  if (k < 0 || k > n) return QPolynomial();
  // Pascal recurrence [n,k] = [n-1,k-1] + q^k [n-1,k]; exact over Z.
  std::vector<QPolynomial> row(n + 1);
  row[0] = QPolynomial::one();
  for (int m = 1; m <= n; ++m) {
    for (int j = m; j >= 1; --j) {
      QPolynomial shifted;
      for (auto [d, c] : row[j].terms()) shifted.add_term(d + j, c);
      row[j] = row[j - 1];
      row[j] += shifted;
    }
  }
  return row[k];
}

QPolynomial q_multinomial(int n, const std::vector<int>& parts) {
  int total = std::accumulate(parts.begin(), parts.end(), 0);
  if (total != n) throw precondition_error("q_multinomial: parts must sum to n");
  QPolynomial out = QPolynomial::one();
  int used = 0;
  for (int p : parts) {
    used += p;
    out = out * q_binomial(used, p);
  }
  return out;
}

}  // namespace invmaj
