#include "descartes/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace descartes {

Rational RationalPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string RationalPolynomial::str() const {
  std::string out;
  for (int j = degree(); j >= 0; --j) {
    const Rational& a = (*this)[j];
    if (a == 0) continue;
    const bool neg = a < 0;
    const Rational mag = abs(a);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const bool unit = mag == 1 && j > 0;
    if (!unit) out += to_string(mag);
    if (j > 0) out += j == 1 ? "x" : "x^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

RationalPolynomial expand_from_roots(const RootConfiguration& rc) {
  // coefficients in ascending powers; multiply by (x - r) one root at a time.
  std::vector<Rational> c{Rational(1)};
  for (const auto& r : rc.roots) {
    c.push_back(0);
    for (std::size_t j = c.size() - 1; j > 0; --j) c[j] = c[j - 1] - r * c[j];
    c[0] = -r * c[0];
  }
  return {std::move(c)};
}

SignPattern sign_pattern_of(const RationalPolynomial& poly) {
  const int d = poly.degree();
  std::uint32_t negative = 0;
  for (int i = 0; i <= d; ++i) {
    const int s = sgn(poly[d - i]);
    if (s == 0)
      throw RealizationError(RealizationError::Kind::zero_coefficient,
                             "coefficient of x^" + std::to_string(d - i) + " vanishes; sign pattern undefined");
    if (s < 0) negative |= 1U << i;
  }
  return SignPattern(d, negative);
}

ModuliOrder order_of(const RootConfiguration& rc) {
  const int d = rc.degree();
  std::vector<std::size_t> idx(static_cast<std::size_t>(d));
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Rational> moduli;
  moduli.reserve(idx.size());
  for (const auto& r : rc.roots) {
    if (r == 0) throw RealizationError(RealizationError::Kind::zero_root, "root at 0 has no sign");
    moduli.push_back(abs(r));
  }
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return moduli[a] < moduli[b]; });
  std::uint32_t bits = 0;
  for (int k = 0; k < d; ++k) {
    const auto i = idx[static_cast<std::size_t>(k)];
    if (k > 0 && moduli[i] == moduli[idx[static_cast<std::size_t>(k - 1)]])
      throw RealizationError(RealizationError::Kind::modulus_tie, "two roots share modulus " + to_string(moduli[i]));
    if (rc.roots[i] > 0) bits |= 1U << k;
  }
  return ModuliOrder(d, bits);
}

Couple couple_of(const RootConfiguration& rc) {
  const auto order = order_of(rc);
  return {to_change_preservation(sign_pattern_of(expand_from_roots(rc))), order};
}

RootConfiguration apply(const RootConfiguration& rc, Involution kind) {
  RootConfiguration out;
  out.roots.reserve(rc.roots.size());
  for (const auto& r : rc.roots) out.roots.push_back(kind == Involution::mirror ? Rational(-r) : Rational(1 / r));
  return out;
}

}  // namespace descartes
