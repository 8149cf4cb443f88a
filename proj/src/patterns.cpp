#include "descartes/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace descartes {

namespace detail {

void check_word(std::uint32_t bits, int length, const char* what) {
  if (length < 1 || length > kMaxPatternDegree)
    throw std::invalid_argument(std::string(what) + ": length must be in [1, 30]");
  if (bits >> length) throw std::invalid_argument(std::string(what) + ": bits beyond word length");
}

std::uint32_t parse_word(std::string_view text, char one, char zero, const char* what) {
  if (text.empty() || static_cast<int>(text.size()) > kMaxPatternDegree)
    throw std::invalid_argument(std::string(what) + ": length must be in [1, 30]");
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == one)
      bits |= 1U << i;
    else if (text[i] != zero)
      throw std::invalid_argument(std::string(what) + ": unexpected letter '" + text[i] + "' in \"" +
                                  std::string(text) + "\"");
  }
  return bits;
}

std::string format_word(std::uint32_t bits, int length, char one, char zero) {
  std::string out(static_cast<std::size_t>(length), zero);
  for (int i = 0; i < length; ++i)
    if ((bits >> i) & 1U) out[static_cast<std::size_t>(i)] = one;
  return out;
}

}  // namespace detail

SignPattern::SignPattern(int degree, std::uint32_t negative)
    : negative_(negative), degree_(static_cast<std::uint8_t>(degree)) {
  if (degree < 1 || degree > kMaxPatternDegree) throw std::invalid_argument("sign pattern: degree must be in [1, 30]");
  if (negative & 1U) throw std::invalid_argument("sign pattern must start with '+' (monic convention)");
  if (degree + 1 < 32 && (negative >> (degree + 1))) throw std::invalid_argument("sign pattern: bits beyond length");
}

SignPattern SignPattern::parse(std::string_view text) {
  if (text.size() < 2 || text.size() > kMaxPatternDegree + 1)
    throw std::invalid_argument("sign pattern: length must be in [2, 31]");
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '-')
      bits |= 1U << i;
    else if (text[i] != '+')
      throw std::invalid_argument("sign pattern: unexpected letter '" + std::string(1, text[i]) + "' in \"" +
                                  std::string(text) + "\"");
  }
  return SignPattern(static_cast<int>(text.size()) - 1, bits);
}

std::string SignPattern::str() const { return detail::format_word(negative_, size(), '-', '+'); }

std::string Couple::str() const { return "(" + pattern.str() + ", " + order.str() + ")"; }

std::strong_ordering operator<=>(const Couple& a, const Couple& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.pattern.count() <=> b.pattern.count(); c != 0) return c;
  if (auto c = to_sign_pattern(a.pattern) <=> to_sign_pattern(b.pattern); c != 0) return c;
  return a.order <=> b.order;
}

ChangePreservationPattern parse_pattern(std::string_view text) {
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) return to_change_preservation(SignPattern::parse(text));
  return ChangePreservationPattern::parse(text);
}

ChangePreservationPattern to_change_preservation(const SignPattern& sp) {
  std::uint32_t bits = 0;
  for (int j = 0; j < sp.degree(); ++j)
    if (sp.negative(j) != sp.negative(j + 1)) bits |= 1U << j;
  return ChangePreservationPattern(sp.degree(), bits);
}

SignPattern to_sign_pattern(const ChangePreservationPattern& cpp) {
  std::uint32_t negative = 0;
  bool current = false;
  for (int j = 0; j < cpp.size(); ++j) {
    if (cpp.test(j)) current = !current;
    if (current) negative |= 1U << (j + 1);
  }
  return SignPattern(cpp.size(), negative);
}

ModuliOrder canonical_order(const ChangePreservationPattern& cpp) {
  return ModuliOrder(cpp.size(), cpp.reversed().bits());
}

bool is_canonical(const SignPattern& sp) {
  for (int i = 0; i + 3 < sp.size(); ++i) {
    const bool s0 = sp.negative(i), s1 = sp.negative(i + 1), s2 = sp.negative(i + 2), s3 = sp.negative(i + 3);
    // (+,+,-,-), (-,-,+,+), (+,-,-,+), (-,+,+,-)
    if (s0 == s1 && s2 == s3 && s0 != s2) return false;
    if (s1 == s2 && s0 == s3 && s0 != s1) return false;
  }
  return true;
}

bool is_canonical(const ChangePreservationPattern& cpp) {
  for (int i = 0; i + 2 < cpp.size(); ++i)
    if (cpp.test(i) == cpp.test(i + 2) && cpp.test(i) != cpp.test(i + 1)) return false;
  return true;
}

bool is_alternating(const ModuliOrder& order) {
  for (int i = 0; i + 1 < order.size(); ++i)
    if (order.test(i) == order.test(i + 1)) return false;
  return true;
}

bool is_rigid(const ModuliOrder& order) {
  return order.count() == 0 || order.zeros() == 0 || is_alternating(order);
}

SignPattern forced_pattern(const ModuliOrder& order) {
  const int d = order.size();
  if (order.zeros() == 0) return to_sign_pattern(ChangePreservationPattern(d, (1U << d) - 1U));
  if (order.count() == 0) return SignPattern(d, 0);
  if (!is_alternating(order)) throw std::invalid_argument("order " + order.str() + " is not rigid");
  // The largest modulus decides the sign of a_{d-1}: N gives (+,+,-,-,...),
  // P gives (+,-,-,+,+,...).
  const bool plus_phase = !order.test(d - 1);
  std::uint32_t negative = 0;
  for (int i = 0; i <= d; ++i) {
    const int r = i % 4;
    const bool neg = plus_phase ? (r == 2 || r == 3) : (r == 1 || r == 2);
    if (neg) negative |= 1U << i;
  }
  return SignPattern(d, negative);
}

ChangePreservationPattern apply(const ChangePreservationPattern& cpp, Involution kind) {
  return kind == Involution::mirror ? cpp.complemented() : cpp.reversed();
}

ModuliOrder apply(const ModuliOrder& order, Involution kind) {
  return kind == Involution::mirror ? order.complemented() : order.reversed();
}

SignPattern apply(const SignPattern& sp, Involution kind) {
  return to_sign_pattern(apply(to_change_preservation(sp), kind));
}

Couple apply(const Couple& couple, Involution kind) {
  return {apply(couple.pattern, kind), apply(couple.order, kind)};
}

std::vector<Couple> orbit(const Couple& couple) {
  const Couple m = apply(couple, Involution::mirror);
  std::vector<Couple> out{couple, m, apply(couple, Involution::reverse), apply(m, Involution::reverse)};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void split(const ModuliOrder& order, int i, std::uint32_t first, std::uint32_t second, int last_first,
           int last_second, std::vector<Superposition>& out) {
  const int n = order.size();
  if (i == n) {
    if (second == 0) return;
    Superposition s;
    s.first_positions = first;
    s.second_positions = second;
    std::uint32_t fb = 0, sb = 0;
    int fl = 0, sl = 0;
    for (int k = 0; k < n; ++k) {
      if ((first >> k) & 1U) {
        if (order.test(k)) fb |= 1U << fl;
        ++fl;
      } else {
        if (order.test(k)) sb |= 1U << sl;
        ++sl;
      }
    }
    s.first = ModuliOrder(fl, fb);
    s.second = ModuliOrder(sl, sb);
    out.push_back(s);
    return;
  }
  const int letter = order.test(i) ? 1 : 0;
  if (last_first != letter) split(order, i + 1, first | (1U << i), second, letter, last_second, out);
  if (last_second != letter) split(order, i + 1, first, second | (1U << i), last_first, letter, out);
}

}  // namespace

std::vector<Superposition> superpositions(const ModuliOrder& order) {
  std::vector<Superposition> out;
  if (order.size() < 2) return out;
  split(order, 1, 1U, 0U, order.test(0) ? 1 : 0, -1, out);
  return out;
}

ModuliOrder reassemble(const Superposition& s, int length) {
  std::uint32_t bits = 0;
  int fi = 0, si = 0;
  for (int k = 0; k < length; ++k) {
    if ((s.first_positions >> k) & 1U) {
      if (s.first.test(fi)) bits |= 1U << k;
      ++fi;
    } else if ((s.second_positions >> k) & 1U) {
      if (s.second.test(si)) bits |= 1U << k;
      ++si;
    } else {
      throw std::invalid_argument("superposition does not cover position " + std::to_string(k));
    }
  }
  if (fi != s.first.size() || si != s.second.size()) throw std::invalid_argument("superposition size mismatch");
  return ModuliOrder(length, bits);
}

namespace {

template <class W>
std::vector<W> words_with(int length, int ones) {
  if (length < 1 || length > kMaxPatternDegree) throw std::invalid_argument("word length must be in [1, 30]");
  std::vector<W> out;
  if (ones < 0 || ones > length) return out;
  if (ones == 0) return {W(length, 0)};
  // Gosper's hack over all masks with `ones` bits.
  std::uint64_t v = (1ULL << ones) - 1ULL;
  const std::uint64_t limit = 1ULL << length;
  while (v < limit) {
    out.emplace_back(length, static_cast<std::uint32_t>(v));
    const std::uint64_t t = v | (v - 1);
    v = (t + 1) | (((~t & -~t) - 1) >> (__builtin_ctzll(v) + 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<ChangePreservationPattern> patterns_with_changes(int degree, int changes) {
  return words_with<ChangePreservationPattern>(degree, changes);
}

std::vector<ModuliOrder> orders_with_positives(int degree, int positives) {
  return words_with<ModuliOrder>(degree, positives);
}

std::vector<Couple> compatible_couples(int degree) {
  std::vector<Couple> out;
  for (int c = 0; c <= degree; ++c) {
    const auto orders = orders_with_positives(degree, c);
    for (const auto& p : patterns_with_changes(degree, c))
      for (const auto& o : orders) out.push_back({p, o});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace descartes
