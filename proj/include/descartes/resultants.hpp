#pragma once

#include "descartes/matrix.hpp"
#include "descartes/multivariate.hpp"
#include "descartes/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace descartes {

using Poly = MultivariatePolynomial;

inline constexpr int kDefaultSymbolicBound = 8;
inline constexpr int kMaxNumericDegree = 64;

// Symbol a_j.
Poly coefficient_symbol(int j);

// Sylvester matrix of f and g given by descending coefficient lists at the
// stated formal degrees: deg_g shifted copies of f, then deg_f copies of g.
template <class T>
Matrix<T> sylvester_matrix(const std::vector<T>& f, const std::vector<T>& g, int deg_f, int deg_g) {
  if (deg_f < 0 || deg_g < 0) throw std::invalid_argument("sylvester: degrees must be >= 0");
  if (deg_f + deg_g == 0) throw std::invalid_argument("sylvester: deg_f + deg_g must be > 0");
  if (static_cast<int>(f.size()) != deg_f + 1 || static_cast<int>(g.size()) != deg_g + 1)
    throw std::invalid_argument("sylvester: coefficient count must be formal degree + 1");
  const int n = deg_f + deg_g;
  Matrix<T> m(n, n);
  for (int r = 0; r < deg_g; ++r)
    for (int j = 0; j <= deg_f; ++j) m(r, r + j) = f[static_cast<std::size_t>(j)];
  for (int r = 0; r < deg_f; ++r)
    for (int j = 0; j <= deg_g; ++j) m(deg_g + r, r + j) = g[static_cast<std::size_t>(j)];
  return m;
}

// Q = x^d + a_{d-1} x^{d-1} + ... + a_0 and (-1)^d Q(-x), descending.
std::vector<Poly> q_coefficients(int d);
std::vector<Poly> q_mirror_coefficients(int d);

struct EvenOddSplit {
  std::vector<Poly> q1;  // x^{[d/2]} + a_{d-2} x^{[d/2]-1} + ..., descending
  std::vector<Poly> q2;  // a_{d-1} x^{[(d-1)/2]} + a_{d-3} ..., descending
  int deg1 = 0;
  int deg2 = 0;
};
EvenOddSplit even_odd_split(int d);

// R0 = Res(Q1, Q2) at formal degrees ([d/2], [(d-1)/2]); R0 = 1 for d = 1.
Poly r0_symbolic(int d, int symbolic_bound = kDefaultSymbolicBound);
// R = Res(Q, (-1)^d Q(-x)) from the 2d x 2d Sylvester matrix.
Poly r_full_symbolic(int d, int symbolic_bound = kDefaultSymbolicBound);

// Point evaluations; a[j] is the value of a_j, a.size() = d.
Rational r_full_at(const std::vector<Rational>& a);
Rational r0_at(const std::vector<Rational>& a);

// prod over ordered pairs (i, j) of (r_i + r_j); the root-side oracle for R
// when Q = prod (x - r_i).
Rational r_from_roots(const std::vector<Rational>& roots);

// Constant stated by the theorem: (-1)^{[d/2]+1} 2^{d-[(d+1)/2]+1}.
Integer theorem_constant(int d);

struct FactorizationReport {
  int degree = 0;
  int trials = 0;
  int degenerate = 0;  // samples with a0 R0 = 0, resampled
  std::optional<Rational> constant;
  bool single_constant = false;
  bool power_of_two = false;
  int sign = 0;
  int exponent = 0;
  Integer theorem;
  bool matches_theorem = false;
  bool symbolic_checked = false;
  bool symbolic_identity = false;

  // The theorem-constant mismatch is informational unless strict.
  bool ok(bool strict = false) const {
    const bool core = single_constant && power_of_two && (!symbolic_checked || symbolic_identity);
    return core && (!strict || matches_theorem);
  }
};

FactorizationReport verify_factorization(int d, int trials, std::uint64_t seed,
                                         int symbolic_bound = kDefaultSymbolicBound, int jobs = 0);

struct StructuralReport {
  int degree = 0;
  int weight = 0;                  // d0 = [(d-1)/2][d/2]
  std::vector<int> monomial_weights;  // distinct weights found
  bool quasi_homogeneous = false;
  std::string extremal_a;  // a0^{[(d-1)/2]} a_{d-1}^{[d/2]} (even) / a1^{[(d-1)/2]} a_{d-1}^{[d/2]} (odd)
  std::string extremal_b;  // a1^{[d/2]} (even) / a0^{[d/2]} (odd)
  bool extremal_a_present = false;
  bool extremal_b_present = false;
  bool caps_respected = false;
  std::size_t terms = 0;
  bool ok() const { return quasi_homogeneous && extremal_a_present && extremal_b_present && caps_respected; }
};

StructuralReport structural_checks(int d, int symbolic_bound = kDefaultSymbolicBound);

// Row/column operations of the block reduction applied literally to the
// symbolic Sylvester matrix of Q and (-1)^d Q(-x).
struct BlockReductionTrace {
  int degree = 0;
  PolynomialMatrix a;  // Sylvester matrix
  PolynomialMatrix b;  // after adding row j+d to row j, then subtracting half of row k from row d+k
  PolynomialMatrix c;  // after the row and column permutations
  std::vector<int> row_order;     // 0-based source row for each position
  std::vector<int> column_order;  // 0-based source column for each position
  int permutation_sign = 1;       // sign of row permutation times column permutation
  bool block_diagonal = false;    // c splits into two d x d blocks
  Poly pivot_factor;              // product of the two pivots taken in the development
  Poly expected_factor;           // -4 a0 (even d) or -2 a0 (odd d)
  PolynomialMatrix delta;         // (2d-2)-square remainder
  PolynomialMatrix sylvester_block;  // Sylvester(2 Q1, -Q2)
  bool delta_blocks_match = false;
  bool det_b_equals_det_a = false;
  bool det_c_equals_sign_det_b = false;
  bool det_c_equals_factor_delta = false;
  bool equals_r_full = false;     // permutation_sign * pivot_factor * det(delta) == R
  bool symbolic_determinants = false;  // step checks done symbolically (else at random points)

  // The stated factor and the claim that the permutations keep the sign are
  // reported separately; only the sign of the factor may disagree.
  bool factor_matches() const { return pivot_factor == expected_factor; }
  bool ok() const {
    return block_diagonal && (factor_matches() || pivot_factor == -expected_factor) && delta_blocks_match &&
           det_b_equals_det_a && det_c_equals_sign_det_b && det_c_equals_factor_delta && equals_r_full;
  }
};

BlockReductionTrace block_reduction_trace(int d, int symbolic_bound = kDefaultSymbolicBound);

std::vector<std::vector<std::string>> render(const PolynomialMatrix& m);

}  // namespace descartes
