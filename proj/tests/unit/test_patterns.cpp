#include "descartes/counting.hpp"
#include "descartes/patterns.hpp"

#include "doctest.h"

#include <set>

using namespace descartes;

namespace {
ChangePreservationPattern cpp(const char* s) { return ChangePreservationPattern::parse(s); }
ModuliOrder ord(const char* s) { return ModuliOrder::parse(s); }
std::string cpp_of(const char* signs) { return to_change_preservation(SignPattern::parse(signs)).str(); }
}  // namespace

TEST_CASE("sign pattern to change-preservation pattern") {
  CHECK(cpp_of("++--+") == "pcpc");
  CHECK(cpp_of("+-+-") == "ccc");
  CHECK(cpp_of("++++") == "ppp");
  CHECK(to_sign_pattern(cpp("pcpc")).str() == "++--+");
  for (int d = 1; d <= 8; ++d)
    for (int c = 0; c <= d; ++c)
      for (const auto& p : patterns_with_changes(d, c)) CHECK(to_change_preservation(to_sign_pattern(p)) == p);
}

TEST_CASE("parsing") {
  CHECK(parse_pattern("++-") == cpp("pc"));
  CHECK(parse_pattern("pc") == cpp("pc"));
  CHECK_THROWS_AS(SignPattern::parse("-+"), std::invalid_argument);
  CHECK_THROWS_AS(SignPattern::parse("+"), std::invalid_argument);
  CHECK_THROWS_AS(ModuliOrder::parse("PXN"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern(""), std::invalid_argument);
}

TEST_CASE("canonical order reads the pattern backwards") {
  CHECK(canonical_order(cpp("pccp")).str() == "NPPN");
  CHECK(canonical_order(cpp("ppc")).str() == "PNN");
  CHECK(canonical_order(cpp("ccpcp")).str() == "NPNPP");
}

TEST_CASE("canonical sign patterns") {
  CHECK(is_canonical(SignPattern::parse("++-+++")));
  CHECK_FALSE(is_canonical(SignPattern::parse("++--+")));
  CHECK(is_canonical(SignPattern::parse("++++")));
  // Window and factor characterisations agree.
  for (int d = 1; d <= 10; ++d)
    for (int c = 0; c <= d; ++c)
      for (const auto& p : patterns_with_changes(d, c)) CHECK(is_canonical(p) == is_canonical(to_sign_pattern(p)));
}

TEST_CASE("rigid orders and their forced patterns") {
  CHECK(forced_pattern(ord("PPP")).str() == "+-+-");
  CHECK(forced_pattern(ord("NNN")).str() == "++++");
  CHECK(forced_pattern(ord("NPNP")).str() == "+--++");
  CHECK(is_rigid(ord("PNPN")));
  CHECK(is_alternating(ord("NPN")));
  CHECK_FALSE(is_rigid(ord("PPN")));
  CHECK_THROWS(forced_pattern(ord("PPN")));
}

TEST_CASE("involutions") {
  const Couple a{cpp("cp"), ord("PN")};
  CHECK(apply(a, Involution::mirror) == Couple{cpp("pc"), ord("NP")});
  const Couple b{cpp("ccpcp"), ord("NPNPP")};
  CHECK(apply(b, Involution::reverse) == Couple{cpp("pcpcc"), ord("PPNPN")});
  for (const auto& c : compatible_couples(5)) {
    CHECK(apply(apply(c, Involution::mirror), Involution::mirror) == c);
    CHECK(apply(apply(c, Involution::reverse), Involution::reverse) == c);
    CHECK(apply(c, Involution::mirror).compatible());
  }
}

TEST_CASE("orbits") {
  const auto o1 = orbit({cpp("cc"), ord("PP")});
  CHECK(o1.size() == 2);
  CHECK(std::set<Couple>(o1.begin(), o1.end()) == std::set<Couple>{{cpp("cc"), ord("PP")}, {cpp("pp"), ord("NN")}});
  CHECK(orbit({cpp("cp"), ord("PN")}).size() == 2);
  CHECK(orbit({cpp("ccp"), ord("PNN")}).size() == 4);
  // Orbits partition the couples.
  std::set<Couple> seen;
  std::size_t total = 0;
  for (const auto& c : compatible_couples(6)) {
    const auto o = orbit(c);
    if (seen.count(o.front())) continue;
    for (const auto& x : o) seen.insert(x);
    total += o.size();
  }
  CHECK(total == compatible_couples(6).size());
}

TEST_CASE("superpositions reassemble to their order") {
  for (int d = 2; d <= 9; ++d)
    for (int p = 0; p <= d; ++p)
      for (const auto& o : orders_with_positives(d, p))
        for (const auto& s : superpositions(o)) {
          CHECK(reassemble(s, d) == o);
          CHECK(is_alternating(s.first));
          CHECK(is_alternating(s.second));
          CHECK((s.first_positions & s.second_positions) == 0U);
        }
}

TEST_CASE("compatible couples count C(2d, d)") {
  for (int d = 1; d <= 7; ++d) {
    const auto all = compatible_couples(d);
    CHECK(Integer(static_cast<long>(all.size())) == binomial(2 * d, d));
    CHECK(std::is_sorted(all.begin(), all.end()));
  }
}
