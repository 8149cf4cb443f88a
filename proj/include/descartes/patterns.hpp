#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace descartes {

// Largest degree representable by the packed words below.
inline constexpr int kMaxPatternDegree = 30;

namespace detail {

std::uint32_t parse_word(std::string_view text, char one, char zero, const char* what);
std::string format_word(std::uint32_t bits, int length, char one, char zero);
void check_word(std::uint32_t bits, int length, const char* what);

}  // namespace detail

// A word over a two-letter alphabet, packed as bits: bit i is set iff letter i
// (counted from the left) is the "one" letter. Orders and patterns share this
// layout but are distinct types.
template <class Alphabet>
class Word {
 public:
  Word() = default;
  Word(int length, std::uint32_t bits) : bits_(bits), length_(static_cast<std::uint8_t>(length)) {
    detail::check_word(bits, length, Alphabet::name);
  }

  static Word parse(std::string_view text) {
    const auto bits = detail::parse_word(text, Alphabet::one, Alphabet::zero, Alphabet::name);
    return Word(static_cast<int>(text.size()), bits);
  }

  int size() const { return length_; }
  std::uint32_t bits() const { return bits_; }
  bool test(int i) const { return (bits_ >> i) & 1U; }
  int count() const { return __builtin_popcount(bits_); }
  int zeros() const { return size() - count(); }

  Word reversed() const {
    std::uint32_t out = 0;
    for (int i = 0; i < size(); ++i)
      if (test(i)) out |= 1U << (size() - 1 - i);
    return Word(size(), out);
  }

  Word complemented() const { return Word(size(), ~bits_ & mask()); }

  std::string str() const { return detail::format_word(bits_, length_, Alphabet::one, Alphabet::zero); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    for (int i = 0; i < a.size(); ++i) {
      const char x = a.test(i) ? Alphabet::one : Alphabet::zero;
      const char y = b.test(i) ? Alphabet::one : Alphabet::zero;
      if (x != y) return x <=> y;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::uint32_t mask() const { return length_ >= 32 ? ~0U : ((1U << length_) - 1U); }

  std::uint32_t bits_ = 0;
  std::uint8_t length_ = 0;
};

struct ChangePreservationAlphabet {
  static constexpr char one = 'c';
  static constexpr char zero = 'p';
  static constexpr const char* name = "change-preservation pattern";
};

struct ModuliOrderAlphabet {
  static constexpr char one = 'P';
  static constexpr char zero = 'N';
  static constexpr const char* name = "order of moduli";
};

// c = sign change between consecutive coefficients, p = preservation.
using ChangePreservationPattern = Word<ChangePreservationAlphabet>;
// Ascending moduli; P = positive root, N = negative root.
using ModuliOrder = Word<ModuliOrderAlphabet>;

// Signs of (a_d, ..., a_0) of a monic polynomial. Always starts with '+'.
class SignPattern {
 public:
  SignPattern() = default;
  // Bit i of `negative` is set iff sign i (from the leading one) is '-'.
  SignPattern(int degree, std::uint32_t negative);

  static SignPattern parse(std::string_view text);

  int degree() const { return degree_; }
  int size() const { return degree_ + 1; }
  bool negative(int i) const { return (negative_ >> i) & 1U; }
  // +1 / -1 for sign i counted from the leading coefficient.
  int sign(int i) const { return negative(i) ? -1 : 1; }
  std::uint32_t negative_mask() const { return negative_; }
  std::string str() const;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;
  friend std::strong_ordering operator<=>(const SignPattern& a, const SignPattern& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    for (int i = 0; i < a.size(); ++i)
      if (a.negative(i) != b.negative(i)) return a.negative(i) ? std::strong_ordering::greater : std::strong_ordering::less;
    return std::strong_ordering::equal;
  }

 private:
  std::uint32_t negative_ = 0;
  std::uint8_t degree_ = 0;
};

struct Couple {
  ChangePreservationPattern pattern;
  ModuliOrder order;

  int degree() const { return pattern.size(); }
  bool compatible() const { return pattern.size() == order.size() && pattern.count() == order.count(); }
  std::string str() const;

  friend bool operator==(const Couple&, const Couple&) = default;
  friend std::strong_ordering operator<=>(const Couple& a, const Couple& b);
};

// Parses either a sign pattern ("++-+") or a change-preservation pattern ("pcc").
ChangePreservationPattern parse_pattern(std::string_view text);

ChangePreservationPattern to_change_preservation(const SignPattern& sp);
SignPattern to_sign_pattern(const ChangePreservationPattern& cpp);

// Read the pattern from the right, c -> P and p -> N.
ModuliOrder canonical_order(const ChangePreservationPattern& cpp);

// Canonical sign patterns are realizable only with their canonical order.
// Two characterisations: forbidden sign windows, and forbidden cpc/pcp factors.
bool is_canonical(const SignPattern& sp);
bool is_canonical(const ChangePreservationPattern& cpp);

// Constant words and the two strictly alternating words.
bool is_rigid(const ModuliOrder& order);
bool is_alternating(const ModuliOrder& order);
// The unique sign pattern realizable with a rigid order; throws otherwise.
SignPattern forced_pattern(const ModuliOrder& order);

enum class Involution { mirror, reverse };

ChangePreservationPattern apply(const ChangePreservationPattern& cpp, Involution kind);
ModuliOrder apply(const ModuliOrder& order, Involution kind);
SignPattern apply(const SignPattern& sp, Involution kind);
Couple apply(const Couple& couple, Involution kind);

// Closure under both involutions, sorted.
std::vector<Couple> orbit(const Couple& couple);

// One way of splitting an order into two strictly alternating subwords
// (single letters included). `first` always holds the leftmost letter.
struct Superposition {
  std::uint32_t first_positions = 0;
  std::uint32_t second_positions = 0;
  ModuliOrder first;
  ModuliOrder second;
};

std::vector<Superposition> superpositions(const ModuliOrder& order);

// Re-interleaves a decomposition; used to validate `superpositions`.
ModuliOrder reassemble(const Superposition& s, int length);

// All words of the given length with `ones` letters equal to c (resp. P).
std::vector<ChangePreservationPattern> patterns_with_changes(int degree, int changes);
std::vector<ModuliOrder> orders_with_positives(int degree, int positives);

// All compatible couples of a degree, sorted.
std::vector<Couple> compatible_couples(int degree);

}  // namespace descartes
