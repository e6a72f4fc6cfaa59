#include "fishbij/qpoly.hpp"

#include <map>

#include "fishbij/errors.hpp"

namespace fishbij {

QPolynomial::QPolynomial(std::vector<BigCount> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial QPolynomial::one() { return QPolynomial({BigCount(1)}); }

QPolynomial QPolynomial::q_bracket(int k) {
  if (k < 0) fail(ErrorKind::Range, "q_bracket needs k >= 0");
  return QPolynomial(std::vector<BigCount>(k, BigCount(1)));
}

int QPolynomial::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

BigCount QPolynomial::coefficient(int d) const {
  if (d < 0 || d > degree()) return 0;
  return coeffs_[d];
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  std::vector<BigCount> out(std::max(coeffs_.size(), o.coeffs_.size()), BigCount(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return QPolynomial();
  std::vector<BigCount> out(coeffs_.size() + o.coeffs_.size() - 1, BigCount(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::shifted(int by) const {
  if (by < 0) fail(ErrorKind::Range, "negative shift");
  if (coeffs_.empty()) return QPolynomial();
  std::vector<BigCount> out(coeffs_.size() + by, BigCount(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i + by] = coeffs_[i];
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::exact_div(const QPolynomial& d) const {
  if (d.coeffs_.empty()) fail(ErrorKind::InexactDivision, "division by zero polynomial");
  std::vector<BigCount> rem = coeffs_;
  const int dd = d.degree();
  const BigCount& lead = d.coeffs_.back();
  int qd = static_cast<int>(rem.size()) - 1 - dd;
  if (qd < 0) {
    if (coeffs_.empty()) return QPolynomial();
    fail(ErrorKind::InexactDivision, "degree too small for exact division");
  }
  std::vector<BigCount> quot(qd + 1, BigCount(0));
  for (int i = qd; i >= 0; --i) {
    BigCount c = rem[i + dd];
    if (c % lead != 0)
      fail(ErrorKind::InexactDivision, "leading coefficient does not divide");
    c /= lead;
    quot[i] = c;
    for (int j = 0; j <= dd; ++j) rem[i + j] -= c * d.coeffs_[j];
  }
  for (const BigCount& c : rem)
    if (c != 0) fail(ErrorKind::InexactDivision, "polynomial division left a remainder");
  return QPolynomial(std::move(quot));
}

BigCount QPolynomial::evaluate(long long q) const {
  BigCount acc = 0, big_q = q;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * big_q + coeffs_[i];
  return acc;
}

std::string QPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ' ';
    out += coeffs_[i].str();
  }
  return out;
}

QPolynomial q_binomial(int m, int k) {
  if (k < 0 || m < 0 || k > m) return QPolynomial();
  // q-Pascal: [m,k] = [m-1,k-1] + q^k [m-1,k]; row by row keeps it exact
  // without any division.
  std::vector<QPolynomial> row{QPolynomial::one()};  // row 0
  for (int i = 1; i <= m; ++i) {
    std::vector<QPolynomial> next(std::min(i, k) + 1);
    next[0] = QPolynomial::one();
    for (int j = 1; j < static_cast<int>(next.size()); ++j) {
      QPolynomial up = (j < static_cast<int>(row.size())) ? row[j] : QPolynomial();
      next[j] = row[j - 1] + up.shifted(j);
    }
    row = std::move(next);
  }
  return row[k];
}

QPolynomial g_polynomial(int n) {
  if (n < 1) fail(ErrorKind::Range, "g_polynomial needs n >= 1");
  QPolynomial num = QPolynomial::q_bracket(2) * q_binomial(3 * n, n);
  QPolynomial den = QPolynomial::q_bracket(n + 1) * QPolynomial::q_bracket(2 * n + 1);
  return num.exact_div(den);
}

}  // namespace fishbij
