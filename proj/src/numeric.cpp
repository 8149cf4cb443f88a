#include "descartes/numeric.hpp"

#include <stdexcept>

namespace descartes {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  if (s.empty()) throw std::invalid_argument("empty rational");

  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const auto scale = s.size() - dot - 1;
    if (digits == "-" || digits == "+" || digits.empty()) throw std::invalid_argument("bad decimal: " + s);
    Integer num;
    if (num.set_str(digits[0] == '+' ? digits.substr(1) : digits, 10) != 0)
      throw std::invalid_argument("bad decimal: " + s);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Rational q;
  if (q.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace descartes
