#include "descartes/counting.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace descartes {

namespace {

void check_t_domain(int d, int c) {
  if (d < 1) throw std::invalid_argument("T_d^c: degree must be >= 1");
  if (c < 0 || 2 * c > d + 1)
    throw std::invalid_argument("T_d^c: need 0 <= c and 2c <= d+1, got d=" + std::to_string(d) +
                                " c=" + std::to_string(c));
}

}  // namespace

BigCount chi(int d) {
  if (d < 1) throw std::invalid_argument("chi: degree must be >= 1");
  return binomial(2L * d, d);
}

BigCount chi_by_enumeration(int d) {
  if (d < 1 || d > kCoupleEnumerationBound)
    throw std::invalid_argument("chi_by_enumeration: degree must be in [1, " + std::to_string(kCoupleEnumerationBound) + "]");
  const std::uint32_t words = 1U << d;
  unsigned long n = 0;
  for (std::uint32_t pattern = 0; pattern < words; ++pattern) {
    const ChangePreservationPattern cpp(d, pattern);
    for (std::uint32_t order = 0; order < words; ++order)
      if (Couple{cpp, ModuliOrder(d, order)}.compatible()) ++n;
  }
  return BigCount(n);
}

BigCount catalan(int k) {
  if (k < 0) throw std::invalid_argument("catalan: index must be >= 0");
  BigCount out = binomial(2L * k, k);
  out /= (k + 1);
  return out;
}

bool satisfies_interlacing(const ModuliOrder& order) {
  const int c = order.count();
  const int p = order.zeros();
  if (c > p) return false;
  std::vector<int> positive, negative;
  for (int i = 0; i < order.size(); ++i) (order.test(i) ? positive : negative).push_back(i + 1);
  for (int j = 1; j <= c; ++j)
    if (positive[static_cast<std::size_t>(c - j)] >= negative[static_cast<std::size_t>(p - j)]) return false;
  return true;
}

BigCount t_dc_closed(int d, int c) {
  check_t_domain(d, c);
  BigCount out = binomial(d, c) * (d - 2 * c + 1);
  out /= (d - c + 1);
  return out;
}

BigCount t_dc_catalan_sum(int d, int c) {
  check_t_domain(d, c);
  BigCount out = binomial(d, c);
  // k-th subtracted term: orders whose first 2k-1 letters hold k letters P for
  // the first time; C_{k-1} * C(d-2k+1, c-k).
  for (int k = 1; c - k >= 0; ++k) out -= catalan(k - 1) * binomial(d - 2 * k + 1, c - k);
  return out;
}

BigCount t_dc_bruteforce(int d, int c, int bound) {
  check_t_domain(d, c);
  if (d > bound) throw std::invalid_argument("t_dc_bruteforce: degree " + std::to_string(d) + " exceeds bound " +
                                             std::to_string(bound));
  unsigned long n = 0;
  for (const auto& order : orders_with_positives(d, c))
    if (satisfies_interlacing(order)) ++n;
  return BigCount(n);
}

BigCount leading_sum_excluded(int d) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  BigCount out = 0;
  for (int c = 1; 2 * c <= d; ++c) out += t_dc_closed(d, c) * binomial(d - 1, c - 1);
  return out;
}

}  // namespace descartes
