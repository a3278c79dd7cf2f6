#include <catch_amalgamated.hpp>

#include <cmath>

#include <subword/chebyshev.hpp>

using namespace subword;

namespace {

double evaluate(const IntPolynomial& p, double x) {
  double value = 0;
  for (std::size_t k = p.coefficients().size(); k-- > 0;) value = value * x + static_cast<double>(p.coefficients()[k]);
  return value;
}

}  // namespace

TEST_CASE("small Chebyshev polynomials", "[chebyshev]") {
  CHECK(chebyshev_T(0).to_string() == "1");
  CHECK(chebyshev_T(1).to_string() == "x");
  CHECK(chebyshev_T(2).to_string() == "2x^2 - 1");
  CHECK(chebyshev_T(3).to_string() == "4x^3 - 3x");
  CHECK(chebyshev_T(4).coefficients() == std::vector<std::int64_t>{1, 0, -8, 0, 8});
  CHECK(IntPolynomial{}.to_string() == "0");
  CHECK(chebyshev_T(5).coeff(7) == 0);
  CHECK_THROWS_AS(chebyshev_T(-1), DomainError);
}

TEST_CASE("closed form, parity and cos(n theta)", "[chebyshev][property]") {
  for (int n = 0; n <= 20; ++n) {
    const auto t = chebyshev_T(n);
    REQUIRE(t == chebyshev_T_closed(n));
    REQUIRE(t.degree() == n);
    for (std::size_t k = 0; k < t.coefficients().size(); ++k)
      if ((k + static_cast<std::size_t>(n)) % 2 == 1) REQUIRE(t.coefficients()[k] == 0);
    for (double theta : {0.1, 0.7, 1.3, 2.9})
      REQUIRE(evaluate(t, std::cos(theta)) == Catch::Approx(std::cos(n * theta)).margin(1e-6));
  }
}

TEST_CASE("generalized Chebyshev polynomials", "[chebyshev]") {
  for (int s = 1; s <= 5; ++s) CHECK(tomie_T(s, 0) == IntPolynomial::monomial(1, 0));
  for (int n = 0; n <= 12; ++n) CHECK(tomie_T(2, n) == chebyshev_T(n));
  for (int s = 1; s <= 5; ++s)
    for (int j = 1; j <= 8; ++j)
      for (int i = 0; i <= j; ++i)
        REQUIRE(tomie_T(s, i + j).coeff(static_cast<std::size_t>(j - i)) == tomie_coefficient_closed(s, i, j));
  for (int j = 1; j <= 10; ++j)
    for (int i = 0; i <= j; ++i) REQUIRE(mobius_lambda_closed(i, j) == tomie_coefficient_closed(2, i, j));
}

TEST_CASE("Möbius values against polynomial coefficients", "[chebyshev][mobius]") {
  CHECK(verify_chebyshev(2, 1, 2).mu == -3);
  CHECK(verify_chebyshev(2, 1, 2).equal);
  CHECK(verify_chebyshev(2, 0, 0).mu == 1);
  CHECK(verify_chebyshev(2, 0, 0).coeff == 1);
  CHECK(verify_chebyshev(2, 1, 1).mu == -1);
  CHECK(verify_chebyshev(2, 2, 3).mu == mobius_lambda_closed(2, 3));
  for (int s = 1; s <= 4; ++s)
    for (int j = 0; j <= 4; ++j)
      for (int i = 0; i <= j; ++i) REQUIRE(verify_chebyshev(s, i, j).equal);
  CHECK_THROWS_AS(verify_chebyshev(2, 3, 2), DomainError);
  CHECK_THROWS_AS(verify_chebyshev(0, 0, 1), DomainError);
}

TEST_CASE("binomial convention", "[chebyshev]") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(60, 30) == 118264581564861424LL);
  CHECK_THROWS_AS(require_integral(Rational(1, 2), "half"), std::logic_error);
}
