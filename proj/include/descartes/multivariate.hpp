#pragma once

#include "descartes/numeric.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace descartes {

inline constexpr int kMaxVariables = 16;

// Sparse polynomial with integer coefficients in a0, ..., a15. Terms are kept
// in descending graded-lex order with no zero coefficients.
class MultivariatePolynomial {
 public:
  using Exponents = std::array<std::uint8_t, kMaxVariables>;
  struct Term {
    Exponents exponents{};
    Integer coefficient;
    friend bool operator==(const Term&, const Term&) = default;
  };

  MultivariatePolynomial() = default;
  MultivariatePolynomial(long c);  // NOLINT: constants convert implicitly
  MultivariatePolynomial(const Integer& c);  // NOLINT

  static MultivariatePolynomial variable(int index, int power = 1);
  static MultivariatePolynomial monomial(const Exponents& e, const Integer& c);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  int total_degree() const;
  // Highest variable index that occurs, plus one.
  int variable_count() const;
  Integer coefficient(const Exponents& e) const;

  MultivariatePolynomial operator-() const;
  MultivariatePolynomial& operator+=(const MultivariatePolynomial& o);
  MultivariatePolynomial& operator-=(const MultivariatePolynomial& o);
  MultivariatePolynomial& operator*=(const MultivariatePolynomial& o);
  friend MultivariatePolynomial operator+(MultivariatePolynomial a, const MultivariatePolynomial& b) { return a += b; }
  friend MultivariatePolynomial operator-(MultivariatePolynomial a, const MultivariatePolynomial& b) { return a -= b; }
  friend MultivariatePolynomial operator*(const MultivariatePolynomial& a, const MultivariatePolynomial& b);
  friend bool operator==(const MultivariatePolynomial&, const MultivariatePolynomial&) = default;

  // Exact division; throws std::domain_error when b does not divide a.
  friend MultivariatePolynomial divide_exact(const MultivariatePolynomial& a, const MultivariatePolynomial& b);
  MultivariatePolynomial divide_exact(const Integer& c) const;

  // point[i] is the value of a_i; missing variables must not occur.
  Rational evaluate(const std::vector<Rational>& point) const;

  // Replaces a_i by values[i] where set; used to specialise symbols.
  MultivariatePolynomial substitute(int index, const Integer& value) const;

  // "coef * a0^e0 a1^e1 ..." per term, zero exponents omitted.
  static std::string term_string(const Term& t);
  std::vector<std::string> term_strings() const;
  std::string str() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

// Descending graded-lex comparison of exponent vectors.
bool grlex_greater(const MultivariatePolynomial::Exponents& a, const MultivariatePolynomial::Exponents& b);

}  // namespace descartes
