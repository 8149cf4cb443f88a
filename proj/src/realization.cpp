#include "descartes/realization.hpp"

#include "descartes/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace descartes {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::realized: return "realized";
    case Status::impossible: return "impossible";
    case Status::unresolved: return "unresolved";
  }
  return "unknown";
}

bool validates(const Couple& couple, const RootConfiguration& rc) {
  if (rc.degree() != couple.degree()) return false;
  try {
    return couple_of(rc) == couple;
  } catch (const RealizationError&) {
    return false;
  }
}

RootConfiguration construct_canonical_witness(const ChangePreservationPattern& cpp, const Rational& base) {
  if (base <= 1) throw std::invalid_argument("canonical witness: base must be > 1");
  const auto order = canonical_order(cpp);
  const Couple target{cpp, order};
  Rational b = base;
  for (int attempt = 0; attempt < 6; ++attempt) {
    RootConfiguration rc;
    Rational m = 1;
    for (int k = 0; k < cpp.size(); ++k) {
      m *= b;
      rc.roots.push_back(order.test(k) ? m : Rational(-m));
    }
    if (validates(target, rc)) return rc;
    b *= b;
  }
  throw RealizationError(RealizationError::Kind::budget_exhausted,
                         "canonical construction failed for " + cpp.str() + " after squaring the base 6 times");
}

namespace {

struct Block {
  Rational modulus;
  int positives = 0;
  int negatives = 0;
  int size() const { return positives + negatives; }
};

std::vector<Block> blocks_of(const std::vector<RootCluster>& base) {
  std::vector<Block> blocks;
  for (const auto& cl : base) {
    if (cl.value == 0) throw RealizationError(RealizationError::Kind::zero_root, "cluster at 0");
    if (cl.multiplicity < 1) throw std::invalid_argument("cluster multiplicity must be >= 1");
    const Rational m = abs(cl.value);
    auto it = std::find_if(blocks.begin(), blocks.end(), [&](const Block& b) { return b.modulus == m; });
    if (it == blocks.end()) {
      blocks.push_back({m, 0, 0});
      it = blocks.end() - 1;
    }
    (cl.value > 0 ? it->positives : it->negatives) += cl.multiplicity;
  }
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.modulus < b.modulus; });
  return blocks;
}

// Offsets in [-1, 1], strictly increasing.
std::vector<Rational> layout(int n, int which, std::mt19937_64& rng) {
  std::vector<Rational> t(static_cast<std::size_t>(n));
  if (n == 1) {
    t[0] = 0;
    return t;
  }
  for (int i = 0; i < n; ++i) {
    switch (which) {
      case 0: t[i] = Rational(2 * i - (n - 1), n - 1); break;
      case 1: t[i] = Rational(i, n - 1); break;
      case 2: t[i] = Rational(i - (n - 1), n - 1); break;
      default: break;
    }
  }
  if (which >= 3) {
    std::uniform_int_distribution<int> pick(-1000, 1000);
    std::vector<int> v;
    while (static_cast<int>(v.size()) < n) {
      const int x = pick(rng);
      if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
    }
    std::sort(v.begin(), v.end());
    for (int i = 0; i < n; ++i) t[i] = Rational(v[i], 1000);
  }
  for (auto& x : t) x.canonicalize();
  return t;
}

}  // namespace

RootConfiguration perturb_multiple_roots(const std::vector<RootCluster>& base, const Couple& target,
                                         const PerturbConfig& cfg) {
  using Kind = RealizationError::Kind;
  const auto blocks = blocks_of(base);
  int d = 0;
  for (const auto& b : blocks) d += b.size();
  if (d != target.degree()) throw RealizationError(Kind::not_achievable, "base degree differs from target degree");

  // Each modulus block must receive a stretch of the order with its letter counts.
  int pos = 0;
  for (const auto& b : blocks) {
    int p = 0;
    for (int k = pos; k < pos + b.size(); ++k) p += target.order.test(k) ? 1 : 0;
    if (p != b.positives)
      throw RealizationError(Kind::not_achievable, "order " + target.order.str() + " does not fit block of modulus " +
                                                       to_string(b.modulus));
    pos += b.size();
  }

  // Nonzero coefficients of the unperturbed polynomial keep their sign.
  RootConfiguration unperturbed;
  for (const auto& cl : base)
    for (int i = 0; i < cl.multiplicity; ++i) unperturbed.roots.push_back(cl.value);
  const auto poly = expand_from_roots(unperturbed);
  const auto want = to_sign_pattern(target.pattern);
  for (int i = 0; i <= d; ++i) {
    const int s = sgn(poly[d - i]);
    if (s != 0 && s != want.sign(i))
      throw RealizationError(Kind::not_achievable, "unperturbed coefficient of x^" + std::to_string(d - i) +
                                                       " already has the wrong sign");
  }

  std::mt19937_64 rng(cfg.seed);
  const Rational floor_eps(1, Integer(1) << cfg.min_exponent);
  for (int which = 0; which < cfg.layouts; ++which) {
    std::vector<std::vector<Rational>> offsets;
    for (const auto& b : blocks) offsets.push_back(layout(b.size(), which, rng));
    for (Rational eps = cfg.radius; eps >= floor_eps; eps /= 2) {
      RootConfiguration rc;
      int k = 0;
      for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        for (const auto& t : offsets[bi]) {
          const Rational m = blocks[bi].modulus * (1 + eps * t);
          rc.roots.push_back(target.order.test(k) ? m : Rational(-m));
          ++k;
        }
      }
      if (validates(target, rc)) return rc;
    }
  }
  throw RealizationError(Kind::budget_exhausted, "no perturbation of the base roots realizes " + target.str());
}

std::vector<std::vector<RootCluster>> cluster_families(const Couple& couple) {
  const int d = couple.degree();
  const int c = couple.order.count();
  const int p = d - c;
  auto cluster = [](int pos, int neg) {
    std::vector<RootCluster> out;
    if (neg > 0) out.push_back({Rational(-1), neg});
    if (pos > 0) out.push_back({Rational(1), pos});
    return out;
  };
  std::vector<std::vector<RootCluster>> out{cluster(c, p)};
  if (d >= 3) {
    const Rational b(1, 10);
    if (c >= 1) {
      auto f = cluster(c - 1, p);
      f.insert(f.begin(), {b, 1});
      out.push_back(f);
    }
    if (p >= 1) {
      auto f = cluster(c, p - 1);
      f.insert(f.begin(), {Rational(-b), 1});
      out.push_back(f);
    }
  }
  return out;
}

namespace {

// Rounds the moduli to few decimal digits first so witnesses stay readable.
std::optional<RootConfiguration> to_rational_witness(const Couple& couple, const std::vector<double>& moduli) {
  const int d = couple.degree();
  auto build = [&](const std::vector<Rational>& m) -> std::optional<RootConfiguration> {
    for (int k = 1; k < d; ++k)
      if (!(m[k - 1] < m[k])) return std::nullopt;
    RootConfiguration rc;
    for (int k = 0; k < d; ++k) rc.roots.push_back(couple.order.test(k) ? m[k] : Rational(-m[k]));
    if (validates(couple, rc)) return rc;
    return std::nullopt;
  };
  Integer scale = 1;
  for (int digits = 1; digits <= 16; ++digits) {
    scale *= 10;
    std::vector<Rational> m;
    bool ok = true;
    for (double x : moduli) {
      const double scaled = std::round(x * scale.get_d());
      if (!std::isfinite(scaled) || scaled <= 0) {
        ok = false;
        break;
      }
      Rational q(Integer(scaled), scale);
      q.canonicalize();
      m.push_back(q);
    }
    if (!ok) continue;
    if (auto rc = build(m)) return rc;
  }
  std::vector<Rational> exact;
  for (double x : moduli) exact.emplace_back(x);
  return build(exact);
}

}  // namespace

std::optional<RootConfiguration> random_search(const Couple& couple, const SearchConfig& cfg, std::uint64_t seed) {
  const int d = couple.degree();
  if (cfg.budget <= 0) return std::nullopt;
  if (d == 1) {
    RootConfiguration rc{{couple.order.test(0) ? Rational(1) : Rational(-1)}};
    if (validates(couple, rc)) return rc;
    return std::nullopt;
  }
  const auto sp = to_sign_pattern(couple.pattern);
  std::vector<int> root_sign(d), coeff_sign(d);
  for (int k = 0; k < d; ++k) root_sign[k] = couple.order.test(k) ? 1 : -1;
  for (int j = 0; j < d; ++j) coeff_sign[j] = sp.sign(d - j);

  const double log_base = std::log(cfg.base.get_d());
  constexpr double tau = 1e-12;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);

  std::vector<double> moduli(d), a(d + 1), e(d + 1);
  auto objective = [&](const std::vector<double>& gaps) {
    moduli[0] = 1.0;
    for (int k = 1; k < d; ++k) moduli[k] = moduli[k - 1] * std::exp(gaps[k - 1]);
    std::fill(a.begin(), a.end(), 0.0);
    std::fill(e.begin(), e.end(), 0.0);
    a[0] = e[0] = 1.0;
    // Ascending coefficients of prod (x - r) and of prod (x + |r|).
    for (int k = 0; k < d; ++k) {
      const double r = root_sign[k] * moduli[k];
      for (int j = k + 1; j > 0; --j) {
        a[j] = a[j - 1] - r * a[j];
        e[j] = e[j - 1] + moduli[k] * e[j];
      }
      a[0] = -r * a[0];
      e[0] = moduli[k] * e[0];
    }
    double obj = 0;
    for (int j = 0; j < d; ++j) obj += std::max(0.0, tau - coeff_sign[j] * a[j] / e[j]);
    return obj;
  };
  auto fresh = [&] {
    std::vector<double> g(d - 1);
    for (auto& x : g) x = log_base * std::exp2(2.0 - (cfg.spread + 2) * unit(rng));
    return g;
  };

  long evals = 0;
  while (evals < cfg.budget) {
    auto gaps = fresh();
    double obj = objective(gaps);
    ++evals;
    long stall = 0;
    while (evals < cfg.budget && stall < 200) {
      if (obj == 0) {
        objective(gaps);  // moduli may belong to a rejected proposal
        if (auto rc = to_rational_witness(couple, moduli)) return rc;
        break;
      }
      auto next = gaps;
      const double sigma = std::array<double, 3>{0.1, 0.5, 2.0}[rng() % 3];
      if (rng() % 2 == 0) {
        next[rng() % next.size()] *= std::exp(sigma * normal(rng));
      } else {
        for (auto& x : next) x *= std::exp(sigma * normal(rng) / std::sqrt(static_cast<double>(d)));
      }
      for (auto& x : next) x = std::clamp(x, 1e-9, 8.0 * log_base);
      const double o = objective(next);
      ++evals;
      if (o < obj) {
        stall = 0;
      } else {
        ++stall;
      }
      if (o <= obj) {
        gaps = std::move(next);
        obj = o;
      }
    }
  }
  return std::nullopt;
}

namespace {

// Involutions taking `from` to `to`; both must lie in one orbit.
std::vector<Involution> path_between(const Couple& from, const Couple& to) {
  if (from == to) return {};
  if (apply(from, Involution::mirror) == to) return {Involution::mirror};
  if (apply(from, Involution::reverse) == to) return {Involution::reverse};
  if (apply(apply(from, Involution::mirror), Involution::reverse) == to) return {Involution::mirror, Involution::reverse};
  throw std::logic_error("couples " + from.str() + " and " + to.str() + " are not in one orbit");
}

RootConfiguration carry(const Couple& from, const Couple& to, RootConfiguration rc) {
  for (auto k : path_between(from, to)) rc = apply(rc, k);
  return rc;
}

std::uint64_t couple_key(const Couple& c) {
  return (static_cast<std::uint64_t>(c.degree()) << 60) ^ (static_cast<std::uint64_t>(c.pattern.bits()) << 30) ^
         c.order.bits();
}

RealizationStatus realized(const Couple& couple, RootConfiguration rc, std::string strategy) {
  if (!validates(couple, rc))
    throw std::logic_error("witness for " + couple.str() + " failed re-validation after transport");
  RealizationStatus s;
  s.status = Status::realized;
  s.witness = std::move(rc);
  s.strategy = std::move(strategy);
  return s;
}

}  // namespace

RealizationStatus search_witness(const Couple& couple, const SearchConfig& cfg) {
  if (!couple.compatible()) throw std::invalid_argument(couple.str() + " is not compatible with Descartes' rule");
  if (cfg.budget < 0) throw std::invalid_argument("search budget must be >= 0");
  if (cfg.base <= 1) throw std::invalid_argument("search base must be > 1");

  const auto members = orbit(couple);
  const Couple& rep = members.front();

  for (const auto& m : members)
    if (canonical_order(m.pattern) == m.order)
      return realized(couple, carry(m, couple, construct_canonical_witness(m.pattern, cfg.base)), "canonical");

  for (const auto& m : members) {
    for (const auto& family : cluster_families(m)) {
      try {
        PerturbConfig pc;
        pc.seed = mix_seed(cfg.seed, couple_key(m));
        return realized(couple, carry(m, couple, perturb_multiple_roots(family, m, pc)), "cluster");
      } catch (const RealizationError&) {
      }
    }
  }

  if (auto rc = random_search(rep, cfg, mix_seed(cfg.seed, couple_key(rep))))
    return realized(couple, carry(rep, couple, *rc), "random");

  RealizationStatus s;
  if (auto verdict = apply_filters(couple)) {
    s.status = Status::impossible;
    s.filter = std::move(verdict);
  }
  return s;
}

RealizationStatus transport_status(const RealizationStatus& s, const Couple& from, const Couple& to) {
  if (from == to) return s;
  RealizationStatus out;
  out.status = s.status;
  out.strategy = s.strategy;
  if (s.witness) out.witness = carry(from, to, *s.witness);
  if (s.status == Status::realized && !validates(to, *out.witness))
    throw std::logic_error("transported witness for " + to.str() + " does not validate");
  if (s.status == Status::impossible) {
    out.filter = apply_filters(to);
    if (!out.filter) throw std::logic_error("orbit member " + to.str() + " escaped the filters");
  }
  return out;
}

StarCount star_counts(const SignPattern& target, const SearchConfig& cfg) {
  const auto cpp = to_change_preservation(target);
  StarCount out;
  for (const auto& order : orders_with_positives(cpp.size(), cpp.count())) {
    const auto s = search_witness({cpp, order}, cfg);
    if (s.status == Status::realized) ++out.lower;
    if (s.status != Status::impossible) ++out.upper;
  }
  return out;
}

StarCount star_counts(const ModuliOrder& target, const SearchConfig& cfg) {
  StarCount out;
  for (const auto& cpp : patterns_with_changes(target.size(), target.count())) {
    const auto s = search_witness({cpp, target}, cfg);
    if (s.status == Status::realized) ++out.lower;
    if (s.status != Status::impossible) ++out.upper;
  }
  return out;
}

namespace {

// Three shapes: small distinct integers, a tight cluster around 1 with
// outliers, and chains of relative gaps n / 2^s.
RootConfiguration random_configuration(int d, std::mt19937_64& rng, int shape) {
  std::vector<Rational> moduli;
  auto distinct = [&](const Rational& m) {
    return std::find(moduli.begin(), moduli.end(), m) == moduli.end();
  };
  while (static_cast<int>(moduli.size()) < d) {
    Rational m;
    if (shape == 0) {
      m = Rational(static_cast<long>(1 + rng() % static_cast<unsigned>(4 * d)));
    } else if (shape == 1) {
      m = Rational(static_cast<long>(1000 + rng() % 300), 1000);
      const auto r = rng() % 4;
      if (r == 0) m /= 10;
      if (r == 1) m *= 10;
    } else {
      m = moduli.empty() ? Rational(1) : moduli.back();
      m *= Rational(static_cast<long>((1UL << 10) + (1 + rng() % 8) * (1UL << (rng() % 11))), 1L << 10);
    }
    m.canonicalize();
    if (distinct(m)) moduli.push_back(m);
  }
  RootConfiguration rc;
  for (const auto& m : moduli) rc.roots.push_back(rng() % 2 ? m : Rational(-m));
  return rc;
}

}  // namespace

FuzzReport fuzz_filter_soundness(long samples, std::uint64_t seed, int max_degree, int jobs) {
  if (samples < 0) throw std::invalid_argument("samples must be >= 0");
  if (max_degree < 1 || max_degree > kMaxPatternDegree) throw std::invalid_argument("fuzz: bad max degree");
  struct Outcome {
    int degree = 0;
    bool skipped = false;
    bool descartes_ok = true;
    bool impossible = false;
    std::string what;
  };
  std::vector<Outcome> out(static_cast<std::size_t>(samples));
  parallel_for(out.size(), jobs, [&](std::size_t i) {
    std::mt19937_64 rng(mix_seed(seed, i));
    const int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_degree));
    auto& o = out[i];
    o.degree = d;
    const auto rc = random_configuration(d, rng, static_cast<int>(i % 3));
    Couple couple;
    try {
      couple = couple_of(rc);
    } catch (const RealizationError&) {
      o.skipped = true;
      return;
    }
    int positives = 0;
    for (const auto& r : rc.roots) positives += r > 0 ? 1 : 0;
    o.descartes_ok = couple.pattern.count() == positives;
    if (auto v = apply_filters(couple)) {
      o.impossible = true;
      o.what = couple.str() + " rejected by " + std::string(filter_name(v->id)) + ": " + v->detail;
    } else if (!o.descartes_ok) {
      o.what = couple.str() + " breaks Descartes' rule";
    }
  });
  FuzzReport rep;
  rep.samples = samples;
  rep.per_degree.assign(static_cast<std::size_t>(max_degree + 1), 0);
  for (const auto& o : out) {
    if (o.skipped) {
      ++rep.skipped;
      continue;
    }
    ++rep.per_degree[static_cast<std::size_t>(o.degree)];
    if (!o.descartes_ok) ++rep.descartes_failures;
    if (o.impossible) ++rep.impossible_verdicts;
    if (!o.what.empty() && rep.failures.size() < 10) rep.failures.push_back(o.what);
  }
  return rep;
}

Integer square_family_coefficient(int d, int k) {
  if (d < 2) throw std::invalid_argument("(x+1)^{d-2}(x-1)^2 needs d >= 2");
  return binomial(d - 2, k) - 2 * binomial(d - 2, k - 1) + binomial(d - 2, k - 2);
}

}  // namespace descartes
