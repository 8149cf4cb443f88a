#pragma once

// Hand-computed intermediate matrices of the block reduction for d = 2, 3 and
// the two diagonal blocks for d = 4. Entry (2,4) of the d = 2 matrix after
// step B is 2a0: row 2 of the Sylvester matrix plus row 4 doubles a0.

#include "descartes/resultants.hpp"

#include <vector>

namespace reference {

using descartes::Poly;
using descartes::PolynomialMatrix;

inline Poly a(int j) { return descartes::coefficient_symbol(j); }

inline PolynomialMatrix rows(const std::vector<std::vector<Poly>>& r) {
  PolynomialMatrix m(static_cast<int>(r.size()), static_cast<int>(r.front().size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

struct Steps {
  PolynomialMatrix a, b, c;
};

inline Steps degree2() {
  const Poly _0(0), _1(1), _2(2);
  const Poly a0 = a(0), a1 = a(1);
  return {rows({{_1, a1, a0, _0}, {_0, _1, a1, a0}, {_1, -a1, a0, _0}, {_0, _1, -a1, a0}}),
          rows({{_2, _0, _2 * a0, _0}, {_0, _2, _0, _2 * a0}, {_0, -a1, _0, _0}, {_0, _0, -a1, _0}}),
          rows({{_2, _2 * a0, _0, _0}, {_0, -a1, _0, _0}, {_0, _0, _2, _2 * a0}, {_0, _0, -a1, _0}})};
}

inline Steps degree3() {
  const Poly _0(0), _1(1), _2(2);
  const Poly a0 = a(0), a1 = a(1), a2 = a(2);
  return {rows({{_1, a2, a1, a0, _0, _0},
                {_0, _1, a2, a1, a0, _0},
                {_0, _0, _1, a2, a1, a0},
                {_1, -a2, a1, -a0, _0, _0},
                {_0, _1, -a2, a1, -a0, _0},
                {_0, _0, _1, -a2, a1, -a0}}),
          rows({{_2, _0, _2 * a1, _0, _0, _0},
                {_0, _2, _0, _2 * a1, _0, _0},
                {_0, _0, _2, _0, _2 * a1, _0},
                {_0, -a2, _0, -a0, _0, _0},
                {_0, _0, -a2, _0, -a0, _0},
                {_0, _0, _0, -a2, _0, -a0}}),
          rows({{_2, _2 * a1, _0, _0, _0, _0},
                {_0, _2, _2 * a1, _0, _0, _0},
                {_0, -a2, -a0, _0, _0, _0},
                {_0, _0, _0, _2, _2 * a1, _0},
                {_0, _0, _0, -a2, -a0, _0},
                {_0, _0, _0, _0, -a2, -a0}})};
}

// Upper-left and lower-right d x d blocks after step C for d = 4.
inline std::pair<PolynomialMatrix, PolynomialMatrix> degree4_blocks() {
  const Poly _0(0), _2(2);
  const Poly a0 = a(0), a1 = a(1), a2 = a(2), a3 = a(3);
  return {rows({{_2, _2 * a2, _2 * a0, _0}, {_0, _2, _2 * a2, _2 * a0}, {_0, -a3, -a1, _0}, {_0, _0, -a3, -a1}}),
          rows({{_2, _2 * a2, _2 * a0, _0}, {_0, _2, _2 * a2, _2 * a0}, {-a3, -a1, _0, _0}, {_0, -a3, -a1, _0}})};
}

}  // namespace reference
