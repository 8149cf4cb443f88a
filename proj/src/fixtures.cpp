#include "descartes/fixtures.hpp"

#include "descartes/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace descartes {

namespace {

const std::vector<std::string> kAll5c1{"PNNNN", "NPNNN", "NNPNN", "NNNPN", "NNNNP"};
const std::vector<std::string> kAll5c2{"PPNNN", "PNPNN", "PNNPN", "PNNNP", "NPPNN",
                                       "NPNPN", "NPNNP", "NNPPN", "NNPNP", "NNNPP"};

// Image of a d=5, c=2 row under mirror followed by reverse.
std::vector<std::string> mirror_reverse(const std::vector<std::string>& orders) {
  std::vector<std::string> out;
  for (const auto& o : orders)
    out.push_back(apply(apply(ModuliOrder::parse(o), Involution::mirror), Involution::reverse).str());
  return out;
}

const std::vector<std::vector<FixtureRow>>& tables() {
  static const std::vector<std::vector<FixtureRow>> t = [] {
    std::vector<std::vector<FixtureRow>> v(kFixtureMaxDegree + 1);
    v[1] = {{"++", {"N"}}};
    v[2] = {{"+++", {"NN"}}, {"++-", {"PN"}}};
    v[3] = {
        {"+++-", {"PNN"}},
        {"++--", {"PNN", "NPN", "NNP"}},
        {"++++", {"NNN"}},
        {"++-+", {"PPN"}},
    };
    v[4] = {
        {"+++++", {"NNNN"}},
        {"++++-", {"PNNN"}},
        {"+++--", {"PNNN", "NPNN", "NNPN"}},
        {"++---", {"NPNN", "NNPN", "NNNP"}},
        {"++-++", {"NPPN"}},
        {"++--+", {"PNPN", "NPPN", "PPNN", "PNNP"}},
        {"+++-+", {"PPNN"}},
        {"++-+-", {"PPPN"}},
    };
    const std::vector<std::string> row_c2_5{"PPNNN", "PNPNN", "PNNPN", "PNNNP", "NPPNN"};
    const std::vector<std::string> row_c2_4{"PPNNN", "PNPNN", "PNNPN", "NPPNN"};
    v[5] = {
        // canonical patterns: only the canonical order
        {"++++++", {"NNNNN"}},
        {"+++++-", {"PNNNN"}},
        {"++-+++", {"NNPPN"}},
        {"+++-++", {"NPPNN"}},
        {"++++-+", {"PPNNN"}},
        {"++-+--", {"NPPPN"}},
        {"+++-+-", {"PPPNN"}},
        {"++-+-+", {"PPPPN"}},
        {"++++--", {"PNNNN", "NPNNN", "NNPNN"}},
        {"+++---", kAll5c1},
        {"++----", {"NNPNN", "NNNPN", "NNNNP"}},
        {"++---+", row_c2_5},
        {"+++--+", row_c2_4},
        {"++--++", kAll5c2},
        // the table gives only counts here; the sets follow from the two rows above
        {"++-++-", mirror_reverse(row_c2_5)},
        {"++--+-", mirror_reverse(row_c2_4)},
    };
    return v;
  }();
  return t;
}

}  // namespace

bool has_fixture(int d) { return d >= 1 && d <= kFixtureMaxDegree; }

const std::vector<FixtureRow>& fixture_rows(int d) {
  if (!has_fixture(d)) throw std::invalid_argument("no fixture table for degree " + std::to_string(d));
  return tables()[static_cast<std::size_t>(d)];
}

std::vector<Couple> fixture_realizable(int d) {
  std::vector<Couple> out;
  for (const auto& row : fixture_rows(d)) {
    const auto cpp = to_change_preservation(SignPattern::parse(row.pattern));
    for (const auto& o : row.orders) {
      const Couple c{cpp, ModuliOrder::parse(o)};
      if (!c.compatible()) throw std::logic_error("fixture couple " + c.str() + " is not compatible");
      out.push_back(c);
      out.push_back(apply(c, Involution::mirror));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational fixture_ratio(int d) {
  Rational r(Integer(static_cast<long>(fixture_realizable(d).size())), chi(d));
  r.canonicalize();
  return r;
}

}  // namespace descartes
