#include "descartes/resultants.hpp"

#include "descartes/parallel.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace descartes {

Poly coefficient_symbol(int j) { return Poly::variable(j); }

std::vector<Poly> q_coefficients(int d) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  std::vector<Poly> u{Poly(1)};
  for (int j = d - 1; j >= 0; --j) u.push_back(coefficient_symbol(j));
  return u;
}

std::vector<Poly> q_mirror_coefficients(int d) {
  auto w = q_coefficients(d);
  // (-1)^d Q(-x): the coefficient of x^{d-i} picks up (-1)^i.
  for (std::size_t i = 1; i < w.size(); i += 2) w[i] = -w[i];
  return w;
}

EvenOddSplit even_odd_split(int d) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  EvenOddSplit s;
  s.deg1 = d / 2;
  s.deg2 = (d - 1) / 2;
  s.q1.push_back(Poly(1));
  for (int i = 1; i <= s.deg1; ++i) s.q1.push_back(coefficient_symbol(d - 2 * i));
  for (int i = 0; i <= s.deg2; ++i) s.q2.push_back(coefficient_symbol(d - 1 - 2 * i));
  return s;
}

namespace {

void check_symbolic(int d, int bound) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  if (d > bound || d > kMaxVariables)
    throw std::invalid_argument("degree " + std::to_string(d) + " exceeds the symbolic bound " + std::to_string(bound));
}

std::vector<Rational> values(const std::vector<Poly>& coeffs, const std::vector<Rational>& a) {
  std::vector<Rational> out;
  for (const auto& c : coeffs) out.push_back(c.evaluate(a));
  return out;
}

}  // namespace

Poly r0_symbolic(int d, int symbolic_bound) {
  check_symbolic(d, symbolic_bound);
  if (d == 1) return Poly(1);
  const auto s = even_odd_split(d);
  return det_fraction_free(sylvester_matrix(s.q1, s.q2, s.deg1, s.deg2));
}

Poly r_full_symbolic(int d, int symbolic_bound) {
  check_symbolic(d, symbolic_bound);
  return det_fraction_free(sylvester_matrix(q_coefficients(d), q_mirror_coefficients(d), d, d));
}

Rational r_full_at(const std::vector<Rational>& a) {
  const int d = static_cast<int>(a.size());
  if (d < 1 || d > kMaxNumericDegree) throw std::invalid_argument("numeric resultant: degree must be in [1, 64]");
  return det_fraction_free(sylvester_matrix(values(q_coefficients(d), a), values(q_mirror_coefficients(d), a), d, d));
}

Rational r0_at(const std::vector<Rational>& a) {
  const int d = static_cast<int>(a.size());
  if (d < 1 || d > kMaxNumericDegree) throw std::invalid_argument("numeric resultant: degree must be in [1, 64]");
  if (d == 1) return 1;
  const auto s = even_odd_split(d);
  return det_fraction_free(sylvester_matrix(values(s.q1, a), values(s.q2, a), s.deg1, s.deg2));
}

Rational r_from_roots(const std::vector<Rational>& roots) {
  Rational acc = 1;
  for (const auto& x : roots)
    for (const auto& y : roots) acc *= x + y;
  return acc;
}

Integer theorem_constant(int d) {
  Integer out = Integer(1) << (d - (d + 1) / 2 + 1);
  if ((d / 2 + 1) % 2 != 0) out = -out;
  return out;
}

namespace {

bool is_power_of_two(const Integer& z) { return z > 0 && mpz_popcount(z.get_mpz_t()) == 1; }

std::vector<Rational> random_point(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> a;
  for (int j = 0; j < d; ++j) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    a.push_back(q);
  }
  return a;
}

}  // namespace

FactorizationReport verify_factorization(int d, int trials, std::uint64_t seed, int symbolic_bound, int jobs) {
  if (d < 1 || d > kMaxNumericDegree) throw std::invalid_argument("factorization: degree must be in [1, 64]");
  if (trials < 0) throw std::invalid_argument("trials must be >= 0");
  FactorizationReport rep;
  rep.degree = d;
  rep.trials = trials;
  rep.theorem = theorem_constant(d);

  struct Sample {
    Rational q;
    int degenerate = 0;
  };
  std::vector<Sample> samples(static_cast<std::size_t>(trials));
  parallel_for(samples.size(), jobs, [&](std::size_t t) {
    // Each trial owns a seed stream; resampling stays inside it.
    for (std::uint64_t attempt = 0;; ++attempt) {
      const auto a = random_point(d, mix_seed(seed, (static_cast<std::uint64_t>(d) << 40) ^ (t << 16) ^ attempt));
      const Rational r0 = r0_at(a);
      if (a[0] == 0 || r0 == 0) {
        ++samples[t].degenerate;
        continue;
      }
      samples[t].q = r_full_at(a) / (a[0] * r0 * r0);
      return;
    }
  });

  std::set<Rational> constants;
  for (const auto& s : samples) {
    rep.degenerate += s.degenerate;
    constants.insert(s.q);
  }
  rep.single_constant = constants.size() == 1;
  if (rep.single_constant) {
    const Rational q = *constants.begin();
    rep.constant = q;
    rep.sign = sgn(q);
    const Integer num = abs(q.get_num());
    const Integer den = q.get_den();
    rep.power_of_two = q != 0 && is_power_of_two(num) && is_power_of_two(den) && (num == 1 || den == 1);
    if (rep.power_of_two)
      rep.exponent = num == 1 ? -static_cast<int>(mpz_sizeinbase(den.get_mpz_t(), 2) - 1)
                              : static_cast<int>(mpz_sizeinbase(num.get_mpz_t(), 2) - 1);
    rep.matches_theorem = q == Rational(rep.theorem);
  }

  if (d <= symbolic_bound && d <= kMaxVariables && rep.single_constant && rep.constant->get_den() == 1) {
    rep.symbolic_checked = true;
    const Poly r0 = r0_symbolic(d, symbolic_bound);
    const Poly rhs = Poly(rep.constant->get_num()) * coefficient_symbol(0) * r0 * r0;
    rep.symbolic_identity = r_full_symbolic(d, symbolic_bound) == rhs;
  } else if (d <= symbolic_bound && rep.single_constant) {
    rep.symbolic_checked = true;  // non-integer constant cannot satisfy an integer identity
    rep.symbolic_identity = false;
  }
  return rep;
}

StructuralReport structural_checks(int d, int symbolic_bound) {
  check_symbolic(d, symbolic_bound);
  StructuralReport rep;
  rep.degree = d;
  const int h = d / 2, k = (d - 1) / 2;
  rep.weight = k * h;
  const Poly r0 = r0_symbolic(d, symbolic_bound);
  rep.terms = r0.size();

  std::set<int> weights;
  for (const auto& t : r0.terms()) {
    int w = 0;
    for (int j = 0; j < d; ++j) w += t.exponents[j] * ((d - j) / 2);
    weights.insert(w);
  }
  rep.monomial_weights.assign(weights.begin(), weights.end());
  rep.quasi_homogeneous = weights.size() == 1 && *weights.begin() == rep.weight;

  Poly::Exponents ea{}, eb{};
  int cap0 = 0, cap1 = 0;  // exponent caps for a0 and a1 on the other monomials
  auto bump = [d](Poly::Exponents& e, int j, int by) {
    if (j < d) e[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(e[static_cast<std::size_t>(j)] + by);
  };
  if (d % 2 == 0) {
    bump(ea, 0, k);
    bump(ea, d - 1, h);
    bump(eb, 1, h);
    cap0 = k;
    cap1 = h;
  } else {
    bump(ea, 1, k);
    bump(ea, d - 1, h);
    bump(eb, 0, h);
    cap0 = h;
    cap1 = k;
  }
  auto monomial = [](const Poly::Exponents& e) {
    const auto s = Poly::term_string({e, 1});
    return s.size() > 4 ? s.substr(4) : s;  // drop the "1 * " prefix
  };
  rep.extremal_a = monomial(ea);
  rep.extremal_b = monomial(eb);
  rep.extremal_a_present = r0.coefficient(ea) != 0;
  rep.extremal_b_present = r0.coefficient(eb) != 0;
  rep.caps_respected = true;
  for (const auto& t : r0.terms()) {
    if (t.exponents == ea || t.exponents == eb) continue;
    const int e0 = t.exponents[0];
    const int e1 = d > 1 ? t.exponents[1] : 0;
    if (e0 >= cap0 || e1 >= cap1) rep.caps_respected = false;
  }
  return rep;
}

std::vector<std::vector<std::string>> render(const PolynomialMatrix& m) {
  std::vector<std::vector<std::string>> out;
  for (int r = 0; r < m.rows(); ++r) {
    out.emplace_back();
    for (int c = 0; c < m.cols(); ++c) out.back().push_back(m(r, c).str());
  }
  return out;
}

}  // namespace descartes
