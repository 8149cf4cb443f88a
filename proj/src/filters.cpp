#include "descartes/filters.hpp"

#include "descartes/counting.hpp"

#include <array>

namespace descartes {

namespace {

constexpr std::array<std::pair<FilterId, std::string_view>, 7> kNames{{
    {FilterId::leading_sum, "leading-sum"},
    {FilterId::even_degree, "even-degree"},
    {FilterId::canonical, "canonical"},
    {FilterId::rigid, "rigid"},
    {FilterId::superposition, "superposition"},
    {FilterId::single_change, "single-change"},
    {FilterId::two_change, "two-change"},
}};

std::string power(int d, int i) { return "x^" + std::to_string(d - i); }

std::optional<std::string> leading_sum(const Couple& c) {
  if (!c.pattern.test(0) || !satisfies_interlacing(c.order)) return std::nullopt;
  return "order interlaces, so a_{d-1} = sum(neg moduli) - sum(pos moduli) > 0, but the pattern starts with c";
}

std::optional<std::string> even_degree(const Couple& c) {
  const int d = c.degree();
  if (d % 2 != 0) return std::nullopt;
  const auto sp = to_sign_pattern(c.pattern);
  if (sp.negative(d)) return std::nullopt;
  if (c.pattern.count() >= d) return std::nullopt;
  // Sign index i carries x^{d-i}; odd powers sit at odd i when d is even.
  for (int i = 1; i <= d; i += 2)
    if (!sp.negative(i)) return std::nullopt;
  int positives = 0;
  for (int k = 0; k < d; ++k) {
    if (c.order.test(k)) {
      ++positives;
    } else if (positives % 2 == 0) {
      return "even degree, a_0 > 0, all odd coefficients negative: a negative modulus at rank " +
             std::to_string(k + 1) + " follows " + std::to_string(positives) + " positive moduli (must be odd)";
    }
  }
  return std::nullopt;
}

std::optional<std::string> canonical(const Couple& c) {
  if (!is_canonical(c.pattern)) return std::nullopt;
  const auto want = canonical_order(c.pattern);
  if (want == c.order) return std::nullopt;
  return "pattern is canonical; its only order is " + want.str();
}

std::optional<std::string> rigid(const Couple& c) {
  if (!is_rigid(c.order)) return std::nullopt;
  const auto forced = forced_pattern(c.order);
  if (forced == to_sign_pattern(c.pattern)) return std::nullopt;
  return "order is rigid and forces " + forced.str();
}

std::optional<std::string> superposition(const Couple& c) {
  const int d = c.degree();
  const auto sp = to_sign_pattern(c.pattern);
  for (const auto& s : superpositions(c.order)) {
    const auto f1 = forced_pattern(s.first);
    const auto f2 = forced_pattern(s.second);
    const int d1 = s.first.size(), d2 = s.second.size();
    for (int m = 0; m <= d; ++m) {
      int sign = 0;
      bool determined = true;
      for (int i = std::max(0, m - d2); i <= std::min(m, d1); ++i) {
        const int t = f1.sign(i) * f2.sign(m - i);
        if (sign == 0) {
          sign = t;
        } else if (sign != t) {
          determined = false;
          break;
        }
      }
      if (determined && sign != sp.sign(m))
        return "superposition of " + s.first.str() + " and " + s.second.str() + " forces the sign of " + power(d, m) +
               " to be " + (sign > 0 ? "+" : "-");
    }
  }
  return std::nullopt;
}

// Runs of the sign pattern: Sigma_{m,n} has m leading '+' and n trailing '-'.
std::vector<int> runs(const SignPattern& sp) {
  std::vector<int> out{1};
  for (int i = 1; i < sp.size(); ++i) {
    if (sp.negative(i) == sp.negative(i - 1))
      ++out.back();
    else
      out.push_back(1);
  }
  return out;
}

std::optional<std::string> single_change(const Couple& c) {
  if (c.pattern.count() != 1) return std::nullopt;
  const auto r = runs(to_sign_pattern(c.pattern));
  const int m = r[0], n = r[1];
  int before = 0;
  while (!c.order.test(before)) ++before;
  const int after = c.degree() - 1 - before;
  if (n < m && before > 2 * n - 2)
    return std::to_string(before) + " negative moduli below the positive root; at most 2n-2 = " +
           std::to_string(2 * n - 2) + " allowed";
  if (n > m && after > 2 * m - 2)
    return std::to_string(after) + " negative moduli above the positive root; at most 2m-2 = " +
           std::to_string(2 * m - 2) + " allowed";
  return std::nullopt;
}

std::optional<std::string> two_change(const Couple& c) {
  const int d = c.degree();
  if (d < 10 || d % 8 != 2 || c.pattern.count() != 2) return std::nullopt;
  const int k = (d - 2) / 8;
  if (!c.order.test(4 * k) || !c.order.test(4 * k + 1)) return std::nullopt;
  const auto r = runs(to_sign_pattern(c.pattern));
  if (r[0] >= k + 1 && r[2] >= k + 1) return std::nullopt;
  return "order N^" + std::to_string(4 * k) + "PPN^" + std::to_string(4 * k) + " needs at least " +
         std::to_string(k + 1) + " leading and trailing '+'";
}

}  // namespace

std::string_view filter_name(FilterId id) {
  for (const auto& [k, name] : kNames)
    if (k == id) return name;
  return "unknown";
}

std::optional<FilterId> parse_filter_name(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  return std::nullopt;
}

bool is_cited_result(FilterId id) { return id == FilterId::single_change || id == FilterId::two_change; }

const std::vector<FilterId>& all_filters() {
  static const std::vector<FilterId> ids{FilterId::leading_sum, FilterId::even_degree,  FilterId::canonical,
                                         FilterId::rigid,       FilterId::superposition, FilterId::single_change,
                                         FilterId::two_change};
  return ids;
}

std::optional<std::string> check_filter(FilterId id, const Couple& couple) {
  switch (id) {
    case FilterId::leading_sum: return leading_sum(couple);
    case FilterId::even_degree: return even_degree(couple);
    case FilterId::canonical: return canonical(couple);
    case FilterId::rigid: return rigid(couple);
    case FilterId::superposition: return superposition(couple);
    case FilterId::single_change: return single_change(couple);
    case FilterId::two_change: return two_change(couple);
  }
  return std::nullopt;
}

std::optional<FilterVerdict> apply_filters(const Couple& couple) {
  for (auto id : all_filters())
    if (auto why = check_filter(id, couple)) return FilterVerdict{id, *why, std::nullopt};
  for (const auto& image : orbit(couple)) {
    if (image == couple) continue;
    for (auto id : all_filters())
      if (auto why = check_filter(id, image))
        return FilterVerdict{id, "via " + image.str() + ": " + *why, image};
  }
  return std::nullopt;
}

}  // namespace descartes
