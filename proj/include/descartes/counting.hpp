#pragma once

#include "descartes/numeric.hpp"
#include "descartes/patterns.hpp"

namespace descartes {

// Exact counts; never narrowed to machine integers.
using BigCount = Integer;

// Brute-force oracles refuse degrees above this bound.
inline constexpr int kEnumerationBound = 16;
// Walking all 4^d (pattern, order) pairs is only done up to here.
inline constexpr int kCoupleEnumerationBound = 12;

// Number of compatible couples in degree d: sum_c C(d,c)^2 = C(2d,d).
BigCount chi(int d);

// Number of compatible couples found by walking every (pattern, order) pair.
BigCount chi_by_enumeration(int d);

BigCount catalan(int k);

// c <= p and, pairing the j-th largest positive modulus with the j-th largest
// negative one, every positive modulus is the smaller of its pair.
bool satisfies_interlacing(const ModuliOrder& order);

// T_d^c three ways. Defined for 0 <= c and 2c <= d + 1.
BigCount t_dc_closed(int d, int c);
BigCount t_dc_catalan_sum(int d, int c);
BigCount t_dc_bruteforce(int d, int c, int bound = kEnumerationBound);

// Couples whose order interlaces and whose pattern starts with c (a_{d-1} < 0):
// sum over c <= d/2 of T_d^c * C(d-1, c-1). Tabulated only.
BigCount leading_sum_excluded(int d);

}  // namespace descartes
