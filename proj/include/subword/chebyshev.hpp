#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "errors.hpp"
#include "mobius.hpp"
#include "poset.hpp"
#include "words.hpp"

namespace subword {

/// Dense integer polynomial; coeffs[m] is the coefficient of x^m.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static IntPolynomial monomial(std::int64_t c, std::size_t m) {
    std::vector<std::int64_t> v(m + 1, 0);
    v[m] = c;
    return IntPolynomial(std::move(v));
  }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(std::size_t m) const { return m < coeffs_.size() ? coeffs_[m] : 0; }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

  IntPolynomial operator+(const IntPolynomial& o) const {
    std::vector<std::int64_t> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t m = 0; m < v.size(); ++m) v[m] = checked_add(coeff(m), o.coeff(m));
    return IntPolynomial(std::move(v));
  }
  IntPolynomial operator-(const IntPolynomial& o) const {
    std::vector<std::int64_t> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t m = 0; m < v.size(); ++m) v[m] = checked_sub(coeff(m), o.coeff(m));
    return IntPolynomial(std::move(v));
  }
  IntPolynomial operator*(const IntPolynomial& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return {};
    std::vector<std::int64_t> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t a = 0; a < coeffs_.size(); ++a)
      for (std::size_t b = 0; b < o.coeffs_.size(); ++b)
        v[a + b] = checked_add(v[a + b], checked_mul(coeffs_[a], o.coeffs_[b]));
    return IntPolynomial(std::move(v));
  }

  bool operator==(const IntPolynomial&) const = default;

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int m = degree(); m >= 0; --m) {
      const auto c = coeffs_[m];
      if (c == 0) continue;
      const auto mag = c < 0 ? -c : c;
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      if (mag != 1 || m == 0) out += std::to_string(mag);
      if (m >= 1) out += "x";
      if (m >= 2) out += "^" + std::to_string(m);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<std::int64_t> coeffs_;
};

/// C(n, k), zero whenever n < 0, k < 0 or k > n.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

using Rational = boost::rational<std::int64_t>;

inline Rational rational_power(std::int64_t base, std::int64_t e) {
  Rational r(1);
  const Rational b = e >= 0 ? Rational(base) : Rational(1, base);
  for (std::int64_t i = 0; i < (e >= 0 ? e : -e); ++i) r *= b;
  return r;
}

inline std::int64_t require_integral(const Rational& r, const std::string& what) {
  if (r.denominator() != 1) throw std::logic_error(what + " produced a non-integral coefficient");
  return r.numerator();
}

/// T_n by T_n = 2x T_{n-1} - T_{n-2}, T_0 = 1, T_1 = x.
inline IntPolynomial chebyshev_T(int n) {
  if (n < 0) throw DomainError("chebyshev_T needs n >= 0");
  IntPolynomial prev({1});
  if (n == 0) return prev;
  IntPolynomial cur({0, 1});
  const IntPolynomial two_x({0, 2});
  for (int k = 2; k <= n; ++k) {
    auto next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// T_n = (n/2) sum_k (-1)^k / (n-k) C(n-k, k) (2x)^(n-2k).
inline IntPolynomial chebyshev_T_closed(int n) {
  if (n < 0) throw DomainError("chebyshev_T_closed needs n >= 0");
  if (n <= 1) return chebyshev_T(n);
  std::vector<std::int64_t> v(n + 1, 0);
  for (int k = 0; 2 * k <= n; ++k) {
    Rational term = Rational(n, 2) * Rational(k % 2 == 0 ? 1 : -1, n - k) * Rational(binomial(n - k, k)) *
                    rational_power(2, n - 2 * k);
    v[n - 2 * k] = require_integral(term, "chebyshev_T_closed");
  }
  return IntPolynomial(std::move(v));
}

/// T^s_n = sum_k (-1)^k s^(n-2k-1) (C(n-k, k) s - C(n-k-1, k)) x^(n-2k).
inline IntPolynomial tomie_T(int s, int n) {
  if (s < 1) throw DomainError("tomie_T needs s >= 1");
  if (n < 0) throw DomainError("tomie_T needs n >= 0");
  std::vector<std::int64_t> v(n + 1, 0);
  for (int k = 0; 2 * k <= n; ++k) {
    const std::int64_t bracket = checked_sub(checked_mul(binomial(n - k, k), s), binomial(n - k - 1, k));
    Rational term = Rational(k % 2 == 0 ? 1 : -1) * rational_power(s, n - 2 * k - 1) * Rational(bracket);
    v[n - 2 * k] = require_integral(term, "tomie_T");
  }
  return IntPolynomial(std::move(v));
}

/// (-1)^i 2^(j-i-1) ((i+j)/j) C(j, i), for 1 <= j.
inline std::int64_t mobius_lambda_closed(int i, int j) {
  if (j < 1 || i < 0 || i > j) throw DomainError("mobius_lambda_closed needs 0 <= i <= j, j >= 1");
  const Rational r = Rational(i % 2 == 0 ? 1 : -1) * rational_power(2, j - i - 1) * Rational(i + j, j) *
                     Rational(binomial(j, i));
  return require_integral(r, "mobius_lambda_closed");
}

/// (-1)^i s^(j-i-1) (C(j, i) s - C(j-1, i)), for 1 <= j.
inline std::int64_t tomie_coefficient_closed(int s, int i, int j) {
  if (j < 1 || i < 0 || i > j) throw DomainError("tomie_coefficient_closed needs 0 <= i <= j, j >= 1");
  const std::int64_t bracket = checked_sub(checked_mul(binomial(j, i), s), binomial(j - 1, i));
  const Rational r = Rational(i % 2 == 0 ? 1 : -1) * rational_power(s, j - i - 1) * Rational(bracket);
  return require_integral(r, "tomie_coefficient_closed");
}

inline Word repeated(Element x, int count) { return Word(std::vector<Element>(static_cast<std::size_t>(count), x)); }

struct ChebyshevCheck {
  std::int64_t mu = 0;
  std::int64_t coeff = 0;
  bool equal = false;
};

/// mu(1^i, (s+1)^j) over lambda:s against the x^(j-i) coefficient of
/// T_{i+j} (s = 2) or T^s_{i+j}.
inline ChebyshevCheck verify_chebyshev(int s, int i, int j) {
  if (i < 0 || i > j) throw DomainError("verify_chebyshev needs 0 <= i <= j");
  if (s < 1) throw DomainError("verify_chebyshev needs s >= 1");
  const AugmentedPoset p0(lambda_poset(s));
  ChebyshevCheck r;
  r.mu = mobius_main(p0, repeated(0, i), repeated(s, j)).value;
  const auto poly = s == 2 ? chebyshev_T(i + j) : tomie_T(s, i + j);
  r.coeff = poly.coeff(static_cast<std::size_t>(j - i));
  r.equal = r.mu == r.coeff;
  return r;
}

}  // namespace subword
