#pragma once

#include <string>
#include <vector>

#include "fishbij/bigcount.hpp"

namespace fishbij {

// Dense polynomial in q over arbitrary-precision integers, coefficients from
// degree 0 up.  Exact arithmetic only.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigCount> coeffs);
  static QPolynomial one();
  // [k] = 1 + q + ... + q^(k-1)
  static QPolynomial q_bracket(int k);

  int degree() const;  // -1 for the zero polynomial
  const std::vector<BigCount>& coefficients() const { return coeffs_; }
  BigCount coefficient(int d) const;

  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial operator*(const QPolynomial& o) const;
  QPolynomial shifted(int by) const;  // multiply by q^by
  // Exact polynomial division; throws InexactDivision on a remainder.
  QPolynomial exact_div(const QPolynomial& d) const;

  BigCount evaluate(long long q) const;
  // "c0 c1 c2 ..." from degree 0 up (export format).
  std::string to_string() const;

  bool operator==(const QPolynomial& o) const { return coeffs_ == o.coeffs_; }

 private:
  void trim();
  std::vector<BigCount> coeffs_;
};

// Gaussian binomial [m choose k]_q.
QPolynomial q_binomial(int m, int k);

// q-analogue of the fish counting formula:
// G_n(q) = [2] * qbinom(3n, n) / ([n+1][2n+1]); G_n(1) = |F_n|, and at
// q = -1 the values 1,0,2,0,7,0,30,... recover the symmetric-fish counts
// on odd n (vanishing on even n).
QPolynomial g_polynomial(int n);

}  // namespace fishbij
