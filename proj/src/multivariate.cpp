#include "descartes/multivariate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace descartes {

namespace {

using Exponents = MultivariatePolynomial::Exponents;
using Term = MultivariatePolynomial::Term;

int degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool divides(const Exponents& small, const Exponents& big) {
  for (int i = 0; i < kMaxVariables; ++i)
    if (small[i] > big[i]) return false;
  return true;
}

// Merges two descending term lists, b scaled by sign.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].exponents, b[j].exponents))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].exponents, a[i].exponents)) {
      out.push_back(b[j]);
      if (subtract) out.back().coefficient = -out.back().coefficient;
      ++j;
    } else {
      Integer c = subtract ? Integer(a[i].coefficient - b[j].coefficient) : Integer(a[i].coefficient + b[j].coefficient);
      if (c != 0) out.push_back({a[i].exponents, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool grlex_greater(const Exponents& a, const Exponents& b) {
  const int da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

MultivariatePolynomial::MultivariatePolynomial(long c) : MultivariatePolynomial(Integer(c)) {}

MultivariatePolynomial::MultivariatePolynomial(const Integer& c) {
  if (c != 0) terms_.push_back({Exponents{}, c});
}

MultivariatePolynomial MultivariatePolynomial::variable(int index, int power) {
  if (index < 0 || index >= kMaxVariables) throw std::out_of_range("variable index out of range");
  if (power < 0 || power > 255) throw std::out_of_range("exponent out of range");
  Exponents e{};
  e[static_cast<std::size_t>(index)] = static_cast<std::uint8_t>(power);
  return monomial(e, 1);
}

MultivariatePolynomial MultivariatePolynomial::monomial(const Exponents& e, const Integer& c) {
  MultivariatePolynomial p;
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

int MultivariatePolynomial::total_degree() const { return terms_.empty() ? -1 : degree_of(terms_.front().exponents); }

int MultivariatePolynomial::variable_count() const {
  int n = 0;
  for (const auto& t : terms_)
    for (int i = 0; i < kMaxVariables; ++i)
      if (t.exponents[i] != 0) n = std::max(n, i + 1);
  return n;
}

Integer MultivariatePolynomial::coefficient(const Exponents& e) const {
  for (const auto& t : terms_)
    if (t.exponents == e) return t.coefficient;
  return 0;
}

void MultivariatePolynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.exponents, b.exponents); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exponents == t.exponents)
      out.back().coefficient += t.coefficient;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.coefficient == 0; }), out.end());
  terms_ = std::move(out);
}

MultivariatePolynomial MultivariatePolynomial::operator-() const {
  MultivariatePolynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

MultivariatePolynomial& MultivariatePolynomial::operator+=(const MultivariatePolynomial& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MultivariatePolynomial& MultivariatePolynomial::operator-=(const MultivariatePolynomial& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MultivariatePolynomial& MultivariatePolynomial::operator*=(const MultivariatePolynomial& o) {
  *this = *this * o;
  return *this;
}

MultivariatePolynomial operator*(const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
  MultivariatePolynomial p;
  if (a.is_zero() || b.is_zero()) return p;
  p.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Term t;
      for (int i = 0; i < kMaxVariables; ++i) {
        const int e = x.exponents[i] + y.exponents[i];
        if (e > 255) throw std::overflow_error("exponent overflow");
        t.exponents[i] = static_cast<std::uint8_t>(e);
      }
      t.coefficient = x.coefficient * y.coefficient;
      p.terms_.push_back(std::move(t));
    }
  }
  p.normalize();
  return p;
}

MultivariatePolynomial divide_exact(const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (b.terms_.size() == 1) {
    // Monomial divisor: divide term by term.
    const auto& lb = b.terms_.front();
    MultivariatePolynomial q;
    q.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) {
      if (!divides(lb.exponents, t.exponents) || !mpz_divisible_p(t.coefficient.get_mpz_t(), lb.coefficient.get_mpz_t()))
        throw std::domain_error("inexact polynomial division");
      Term r;
      for (int i = 0; i < kMaxVariables; ++i) r.exponents[i] = static_cast<std::uint8_t>(t.exponents[i] - lb.exponents[i]);
      mpz_divexact(r.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), lb.coefficient.get_mpz_t());
      q.terms_.push_back(std::move(r));
    }
    return q;  // order is preserved when dividing by a monomial
  }
  MultivariatePolynomial rem = a;
  std::vector<Term> quotient;
  const auto& lb = b.terms_.front();
  while (!rem.is_zero()) {
    const auto& lr = rem.terms_.front();
    if (!divides(lb.exponents, lr.exponents) || !mpz_divisible_p(lr.coefficient.get_mpz_t(), lb.coefficient.get_mpz_t()))
      throw std::domain_error("inexact polynomial division");
    Term t;
    for (int i = 0; i < kMaxVariables; ++i) t.exponents[i] = static_cast<std::uint8_t>(lr.exponents[i] - lb.exponents[i]);
    mpz_divexact(t.coefficient.get_mpz_t(), lr.coefficient.get_mpz_t(), lb.coefficient.get_mpz_t());
    rem -= MultivariatePolynomial::monomial(t.exponents, t.coefficient) * b;
    quotient.push_back(std::move(t));
  }
  MultivariatePolynomial q;
  q.terms_ = std::move(quotient);  // produced in descending order
  return q;
}

MultivariatePolynomial MultivariatePolynomial::divide_exact(const Integer& c) const {
  if (c == 0) throw std::domain_error("division by zero");
  MultivariatePolynomial q = *this;
  for (auto& t : q.terms_) {
    if (!mpz_divisible_p(t.coefficient.get_mpz_t(), c.get_mpz_t())) throw std::domain_error("inexact integer division");
    mpz_divexact(t.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), c.get_mpz_t());
  }
  return q;
}

Rational MultivariatePolynomial::evaluate(const std::vector<Rational>& point) const {
  Rational acc = 0;
  for (const auto& t : terms_) {
    Rational v = t.coefficient;
    for (int i = 0; i < kMaxVariables; ++i) {
      if (t.exponents[i] == 0) continue;
      if (static_cast<std::size_t>(i) >= point.size()) throw std::out_of_range("evaluation point misses a" + std::to_string(i));
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), point[i].get_num_mpz_t(), t.exponents[i]);
      mpz_pow_ui(pw.get_den_mpz_t(), point[i].get_den_mpz_t(), t.exponents[i]);
      v *= pw;
    }
    acc += v;
  }
  return acc;
}

MultivariatePolynomial MultivariatePolynomial::substitute(int index, const Integer& value) const {
  MultivariatePolynomial p;
  for (const auto& t : terms_) {
    Term r = t;
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), value.get_mpz_t(), t.exponents[index]);
    r.coefficient *= pw;
    r.exponents[index] = 0;
    p.terms_.push_back(std::move(r));
  }
  p.normalize();
  return p;
}

std::string MultivariatePolynomial::term_string(const Term& t) {
  std::string out = to_string(t.coefficient);
  bool first = true;
  for (int i = 0; i < kMaxVariables; ++i) {
    if (t.exponents[i] == 0) continue;
    out += first ? " * " : " ";
    first = false;
    out += "a" + std::to_string(i) + "^" + std::to_string(t.exponents[i]);
  }
  return out;
}

std::vector<std::string> MultivariatePolynomial::term_strings() const {
  std::vector<std::string> out;
  for (const auto& t : terms_) out.push_back(term_string(t));
  return out;
}

std::string MultivariatePolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& s : term_strings()) {
    if (out.empty()) {
      out = s;
    } else if (s[0] == '-') {
      out += " - " + s.substr(1);
    } else {
      out += " + " + s;
    }
  }
  return out;
}

}  // namespace descartes
