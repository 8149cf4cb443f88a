#pragma once

#include "descartes/numeric.hpp"
#include "descartes/patterns.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace descartes {

// Nonzero signed rational roots; a negative value is a negative root.
struct RootConfiguration {
  std::vector<Rational> roots;

  int degree() const { return static_cast<int>(roots.size()); }
  friend bool operator==(const RootConfiguration&, const RootConfiguration&) = default;
};

// Monic polynomial sum a_j x^j; coefficients[j] = a_j, coefficients.back() == 1.
struct RationalPolynomial {
  std::vector<Rational> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  const Rational& operator[](int j) const { return coefficients[static_cast<std::size_t>(j)]; }
  Rational evaluate(const Rational& x) const;
  std::string str() const;
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;
};

class RealizationError : public std::runtime_error {
 public:
  enum class Kind { modulus_tie, zero_coefficient, zero_root, not_achievable, budget_exhausted };

  RealizationError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// prod (x - r_i), exact.
RationalPolynomial expand_from_roots(const RootConfiguration& rc);

// Sign pattern of a monic polynomial; throws zero_coefficient if some a_j == 0.
SignPattern sign_pattern_of(const RationalPolynomial& poly);

// Positive/negative letters of the roots sorted by ascending modulus.
// Throws modulus_tie or zero_root.
ModuliOrder order_of(const RootConfiguration& rc);

// The couple a root configuration realizes.
Couple couple_of(const RootConfiguration& rc);

// Images of a configuration under the two involutions: mirror negates every
// root, reverse inverts every root.
RootConfiguration apply(const RootConfiguration& rc, Involution kind);

}  // namespace descartes
