#include "descartes/resultants.hpp"

#include <random>
#include <stdexcept>

namespace descartes {

namespace {

// Sign of a permutation given as a list of distinct indices 0..n-1.
int permutation_sign(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

// The unique nonzero entry of a column; -1 when there is none or several.
int lone_entry(const PolynomialMatrix& m, int col) {
  int row = -1;
  for (int r = 0; r < m.rows(); ++r) {
    if (m(r, col).is_zero()) continue;
    if (row >= 0) return -1;
    row = r;
  }
  return row;
}

bool zero_block(const PolynomialMatrix& m, int r0, int c0, int rows, int cols) {
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (!m(r0 + i, c0 + j).is_zero()) return false;
  return true;
}

RationalMatrix at(const PolynomialMatrix& m, const std::vector<Rational>& a) {
  RationalMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(a);
  return out;
}

}  // namespace

BlockReductionTrace block_reduction_trace(int d, int symbolic_bound) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  if (d > symbolic_bound || d > kMaxVariables)
    throw std::invalid_argument("degree " + std::to_string(d) + " exceeds the symbolic bound " + std::to_string(symbolic_bound));
  BlockReductionTrace t;
  t.degree = d;
  const int n = 2 * d;
  t.a = sylvester_matrix(q_coefficients(d), q_mirror_coefficients(d), d, d);

  // Step B: row j += row j+d, then row d+k -= row k / 2. The halving is exact:
  // every entry of the summed rows is even.
  t.b = t.a;
  for (int j = 0; j < d; ++j)
    for (int c = 0; c < n; ++c) t.b(j, c) += t.b(j + d, c);
  for (int k = 0; k < d; ++k)
    for (int c = 0; c < n; ++c) t.b(d + k, c) -= t.b(k, c).divide_exact(2);

  // Step C: rows 1,3,5,..., then d+2,d+4,..., then 2,4,..., then d+1,d+3,...
  // (1-based); columns odd first, then even.
  const int half = d / 2;
  for (int i = 0; i < d - half; ++i) t.row_order.push_back(2 * i);
  for (int i = 0; i < half; ++i) t.row_order.push_back(d + 1 + 2 * i);
  for (int i = 0; i < half; ++i) t.row_order.push_back(1 + 2 * i);
  for (int i = 0; i < d - half; ++i) t.row_order.push_back(d + 2 * i);
  for (int c = 0; c < n; c += 2) t.column_order.push_back(c);
  for (int c = 1; c < n; c += 2) t.column_order.push_back(c);
  t.permutation_sign = permutation_sign(t.row_order) * permutation_sign(t.column_order);
  t.c = PolynomialMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.c(i, j) = t.b(t.row_order[i], t.column_order[j]);
  t.block_diagonal = zero_block(t.c, 0, d, d, d) && zero_block(t.c, d, 0, d, d);

  // Step D: develop along the first column, then along the last one.
  t.expected_factor = Poly(d % 2 == 0 ? -4 : -2) * coefficient_symbol(0);
  const int r1 = lone_entry(t.c, 0);
  PolynomialMatrix rest;
  if (r1 >= 0) {
    Poly f = t.c(r1, 0);
    if (r1 % 2 != 0) f = -f;
    rest = t.c.minor(r1, 0);
    const int last = rest.cols() - 1;
    const int r2 = last >= 0 ? lone_entry(rest, last) : -1;
    if (r2 >= 0) {
      Poly g = rest(r2, last);
      if ((r2 + last) % 2 != 0) g = -g;
      t.pivot_factor = f * g;
      t.delta = rest.minor(r2, last);
    }
  }

  const auto split = even_odd_split(d);
  if (d >= 2) {
    std::vector<Poly> f2, g2;
    for (const auto& x : split.q1) f2.push_back(Poly(2) * x);
    for (const auto& x : split.q2) g2.push_back(-x);
    t.sylvester_block = sylvester_matrix(f2, g2, split.deg1, split.deg2);
  }
  const int m = d - 1;
  t.delta_blocks_match = t.delta.rows() == 2 * m && zero_block(t.delta, 0, m, m, m) && zero_block(t.delta, m, 0, m, m) &&
                         t.delta.block(0, 0, m, m) == t.sylvester_block && t.delta.block(m, m, m, m) == t.sylvester_block;

  const Poly det_delta = t.delta_blocks_match ? Poly(det_fraction_free(t.sylvester_block)) : Poly();
  const Poly r = r_full_symbolic(d, symbolic_bound);
  t.equals_r_full = t.delta_blocks_match && Poly(t.permutation_sign) * t.pivot_factor * det_delta * det_delta == r;

  // Step determinants: symbolic while cheap, else at seeded random points.
  t.symbolic_determinants = d <= 4;
  if (t.symbolic_determinants) {
    const Poly db = det_fraction_free(t.b);
    const Poly dc = det_fraction_free(t.c);
    t.det_b_equals_det_a = db == r;
    t.det_c_equals_sign_det_b = dc == Poly(t.permutation_sign) * db;
    t.det_c_equals_factor_delta = t.delta_blocks_match && dc == t.pivot_factor * det_delta * det_delta;
  } else {
    std::mt19937_64 rng(0x5eed0000ULL + static_cast<std::uint64_t>(d));
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    bool ab = true, bc = true, cd = t.delta_blocks_match;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> a;
      for (int j = 0; j < d; ++j) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        a.push_back(q);
      }
      const Rational da = det_fraction_free(at(t.a, a));
      const Rational db = det_fraction_free(at(t.b, a));
      const Rational dc = det_fraction_free(at(t.c, a));
      ab = ab && da == db;
      bc = bc && dc == t.permutation_sign * db;
      if (cd) {
        const Rational dd = det_fraction_free(at(t.delta, a));
        cd = dc == t.pivot_factor.evaluate(a) * dd;
      }
    }
    t.det_b_equals_det_a = ab;
    t.det_c_equals_sign_det_b = bc;
    t.det_c_equals_factor_delta = cd;
  }
  return t;
}

}  // namespace descartes
