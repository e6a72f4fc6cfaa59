#include <string>
#include <vector>

#include "doctest.h"
#include "fishbij/enumerate.hpp"
#include "fishbij/qpoly.hpp"

using namespace fishbij;

TEST_CASE("q-brackets and basic arithmetic") {
  CHECK(QPolynomial::q_bracket(0).degree() == -1);
  CHECK(QPolynomial::q_bracket(1) == QPolynomial::one());
  CHECK(QPolynomial::q_bracket(3).to_string() == "1 1 1");

  QPolynomial a({BigCount(1), BigCount(2)});
  QPolynomial b({BigCount(3)});
  CHECK((a + b).to_string() == "4 2");
  CHECK((a * a).to_string() == "1 4 4");
  CHECK(a.shifted(2).to_string() == "0 0 1 2");
  CHECK(a.coefficient(1) == BigCount(2));
  CHECK(a.coefficient(7) == BigCount(0));
  CHECK(a.evaluate(-1) == BigCount(-1));
  CHECK(a.evaluate(10) == BigCount(21));
}

TEST_CASE("exact division checks the remainder") {
  QPolynomial num = QPolynomial::q_bracket(6);
  QPolynomial den = QPolynomial::q_bracket(3);
  // (1+...+q^5) = (1+q+q^2)(1+q^3)
  CHECK(num.exact_div(den).to_string() == "1 0 0 1");
  CHECK_THROWS_AS(num.exact_div(QPolynomial::q_bracket(4)), Error);
  try {
    num.exact_div(QPolynomial::q_bracket(4));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InexactDivision);
  }
}

TEST_CASE("gaussian binomials") {
  CHECK(q_binomial(4, 2).to_string() == "1 1 2 1 1");
  CHECK(q_binomial(5, 0) == QPolynomial::one());
  CHECK(q_binomial(5, 5) == QPolynomial::one());
  CHECK(q_binomial(5, 7).degree() == -1);
  for (int m = 0; m <= 12; ++m) {
    for (int k = 0; k <= m; ++k) {
      QPolynomial p = q_binomial(m, k);
      CHECK(p == q_binomial(m, m - k));
      CHECK(p.evaluate(1) == binomial(m, k));
      // Coefficients are palindromic.
      int d = p.degree();
      for (int i = 0; i <= d; ++i) {
        CHECK(p.coefficient(i) == p.coefficient(d - i));
      }
    }
  }
}

TEST_CASE("the q-counting polynomial at small sizes") {
  CHECK(g_polynomial(1).to_string() == "1");
  CHECK(g_polynomial(2).to_string() == "1 0 0 1");
  CHECK(g_polynomial(3).to_string() == "1 0 0 1 1 0 1 1 0 0 1");
  CHECK(g_polynomial(4).to_string() ==
        "1 0 0 1 1 1 1 1 2 2 1 1 2 2 1 1 1 1 1 0 0 1");
  CHECK_THROWS_AS(g_polynomial(0), Error);
}

TEST_CASE("evaluations recover fish and symmetric-fish counts") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(g_polynomial(n).evaluate(1) == count_fish(n));
  }
  std::vector<BigCount> at_minus_one;
  for (int n = 1; n <= 9; ++n) {
    at_minus_one.push_back(g_polynomial(n).evaluate(-1));
  }
  std::vector<BigCount> expected = {BigCount(1),  BigCount(0), BigCount(2),
                                    BigCount(0),  BigCount(7), BigCount(0),
                                    BigCount(30), BigCount(0), BigCount(143)};
  CHECK(at_minus_one == expected);
  for (int n = 1; n <= 9; n += 2) {
    CHECK(g_polynomial(n).evaluate(-1) == count_symmetric_of_size(n));
  }
}
