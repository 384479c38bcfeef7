#include "mixedvol/groebner.hpp"

#include <algorithm>
#include <queue>

#include "mixedvol/errors.hpp"
#include "mixedvol/rng.hpp"

namespace mixedvol {

MPoly normal_form(const PolyRing& ring, MPoly f, const std::vector<MPoly>& g) {
  MPoly rem;
  while (!f.zero()) {
    bool reduced = false;
    for (const auto& gi : g) {
      if (gi.zero()) continue;
      if (divides(gi.lead().m, f.lead().m)) {
        std::uint32_t c = ring.field.mul(f.lead().c, ring.field.inv(gi.lead().c));
        f = subtract_multiple(ring, f, c, mono_div(f.lead().m, gi.lead().m), gi);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.terms.push_back(f.lead());
      f.terms.erase(f.terms.begin());
    }
  }
  return rem;
}

namespace {

MPoly s_poly(const PolyRing& ring, const MPoly& f, const MPoly& g) {
  // both monic
  Mono l = mono_lcm(f.lead().m, g.lead().m);
  MPoly a = subtract_multiple(ring, MPoly{}, ring.field.neg(1), mono_div(l, f.lead().m), f);
  return subtract_multiple(ring, a, 1, mono_div(l, g.lead().m), g);
}

struct PairEntry {
  long deg;
  int i, j;
  bool operator>(const PairEntry& o) const {
    if (deg != o.deg) return deg > o.deg;
    if (i != o.i) return i > o.i;
    return j > o.j;
  }
};

std::vector<MPoly> interreduce(const PolyRing& ring, std::vector<MPoly> g) {
  // drop redundant lead terms, then tail-reduce everything
  std::vector<MPoly> minimal;
  std::sort(g.begin(), g.end(), [&](const MPoly& a, const MPoly& b) {
    return ring.order.cmp(a.lead().m, b.lead().m) < 0;
  });
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t k = 0; k < minimal.size(); ++k) {
      if (divides(minimal[k].lead().m, g[i].lead().m)) { redundant = true; break; }
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<MPoly> out;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MPoly> others;
    for (size_t k = 0; k < minimal.size(); ++k) {
      if (k != i) others.push_back(minimal[k]);
    }
    MPoly r = normal_form(ring, minimal[i], others);
    internal_check(!r.zero(), "interreduction killed a minimal basis element");
    out.push_back(make_monic(ring, r));
  }
  std::sort(out.begin(), out.end(), [&](const MPoly& a, const MPoly& b) {
    return ring.order.cmp(a.lead().m, b.lead().m) > 0;
  });
  return out;
}

}  // namespace

std::vector<MPoly> buchberger(const PolyRing& ring, const std::vector<MPoly>& gens) {
  std::vector<MPoly> g;
  for (const auto& f : gens) {
    // re-sort under this ring's order; callers may hand over polynomials
    // built for a different one
    MPoly s = make_poly(ring, f.terms);
    if (!s.zero()) g.push_back(make_monic(ring, s));
  }
  if (g.empty()) return g;

  std::priority_queue<PairEntry, std::vector<PairEntry>, std::greater<PairEntry>> pairs;
  auto push_pairs = [&](int upto) {
    for (int i = 0; i < upto; ++i) {
      Mono l = mono_lcm(g[i].lead().m, g[upto].lead().m);
      pairs.push({total_degree(l), i, upto});
    }
  };
  for (int k = 1; k < static_cast<int>(g.size()); ++k) push_pairs(k);

  while (!pairs.empty()) {
    auto [deg, i, j] = pairs.top();
    pairs.pop();
    const Mono& mi = g[i].lead().m;
    const Mono& mj = g[j].lead().m;
    Mono l = mono_lcm(mi, mj);
    // first Buchberger criterion: coprime lead terms
    if (total_degree(l) == total_degree(mi) + total_degree(mj)) continue;
    // chain criterion: some other lead term divides the lcm strictly
    bool chained = false;
    for (int k = 0; k < static_cast<int>(g.size()); ++k) {
      if (k == i || k == j) continue;
      if (divides(g[k].lead().m, l) && g[k].lead().m != mi && g[k].lead().m != mj) {
        Mono lik = mono_lcm(mi, g[k].lead().m);
        Mono ljk = mono_lcm(mj, g[k].lead().m);
        if (lik != l && ljk != l) { chained = true; break; }
      }
    }
    if (chained) continue;
    MPoly h = normal_form(ring, s_poly(ring, g[i], g[j]), g);
    if (h.zero()) continue;
    g.push_back(make_monic(ring, h));
    push_pairs(static_cast<int>(g.size()) - 1);
  }
  return interreduce(ring, g);
}

std::vector<MPoly> saturate(const PolyRing& ring, const std::vector<MPoly>& gens,
                            const MPoly& f) {
  require(!f.zero(), "saturation by zero");
  std::vector<MPoly> live;
  for (const auto& h : gens) {
    if (!h.zero()) live.push_back(h);
  }
  if (live.empty()) return {};  // (0) : f^inf = (0) in a domain

  PolyRing ext(ring.nvars + 1, ring.field.p, MonomialOrder::elim(ring.nvars + 1));
  std::vector<MPoly> lifted;
  for (const auto& h : live) {
    std::vector<Term> terms;
    for (const auto& t : h.terms) {
      Mono m = t.m;
      m.push_back(0);
      terms.push_back({std::move(m), t.c});
    }
    lifted.push_back(make_poly(ext, std::move(terms)));
  }
  {
    // w * f - 1
    std::vector<Term> terms;
    for (const auto& t : f.terms) {
      Mono m = t.m;
      m.push_back(1);
      terms.push_back({std::move(m), t.c});
    }
    terms.push_back({Mono(ext.nvars, 0), ext.field.neg(1)});
    lifted.push_back(make_poly(ext, std::move(terms)));
  }
  std::vector<MPoly> gb = buchberger(ext, lifted);

  std::vector<MPoly> kept;
  for (const auto& h : gb) {
    if (h.lead().m[ring.nvars] != 0) continue;  // contains w
    std::vector<Term> terms;
    for (const auto& t : h.terms) {
      internal_check(t.m[ring.nvars] == 0, "elimination order leaked the auxiliary variable");
      Mono m(t.m.begin(), t.m.end() - 1);
      terms.push_back({std::move(m), t.c});
    }
    kept.push_back(make_poly(ring, std::move(terms)));
  }
  return buchberger(ring, kept);
}

std::vector<MPoly> saturate_coordinates(const PolyRing& ring, std::vector<MPoly> gens) {
  std::vector<MPoly> live;
  for (auto& h : gens) {
    if (!h.zero()) {
      internal_check(is_homogeneous(h), "coordinate saturation requires homogeneous input");
      live.push_back(std::move(h));
    }
  }
  if (live.empty()) return {};
  for (int var = 0; var < ring.nvars; ++var) {
    PolyRing cheap(ring.nvars, ring.field.p, MonomialOrder::grevlex_cheapest(ring.nvars, var));
    for (;;) {
      live = buchberger(cheap, live);
      bool divided = false;
      for (auto& h : live) {
        int a = h.terms[0].m[var];
        for (const auto& t : h.terms) a = std::min(a, t.m[var]);
        if (a > 0) {
          for (auto& t : h.terms) t.m[var] -= a;
          divided = true;
        }
      }
      if (!divided) break;
    }
  }
  return buchberger(ring, live);
}

int krull_dim(const PolyRing& ring, const std::vector<MPoly>& basis) {
  if (basis.empty()) return ring.nvars;
  std::vector<Mono> leads;
  for (const auto& h : basis) {
    if (total_degree(h.lead().m) == 0) return -1;  // unit ideal
    leads.push_back(h.lead().m);
  }
  // dimension = largest variable subset meeting the support of no lead term
  int best = 0;
  const int n = ring.nvars;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : leads) {
      bool inside = true;
      for (int j = 0; j < n; ++j) {
        if (m[j] > 0 && !(mask & (1u << j))) { inside = false; break; }
      }
      if (inside) { independent = false; break; }
    }
    if (independent) best = size;
  }
  return best;
}

namespace {

std::vector<Mono> minimalize(std::vector<Mono> gens) {
  std::sort(gens.begin(), gens.end(), [](const Mono& a, const Mono& b) {
    long da = total_degree(a), db = total_degree(b);
    return da != db ? da < db : a < b;
  });
  std::vector<Mono> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& k : out) {
      if (divides(k, m)) { redundant = true; break; }
    }
    if (!redundant) out.push_back(m);
  }
  return out;
}

using ZPoly = std::vector<long long>;  // dense univariate over Z

void zp_sub_shifted(ZPoly& a, const ZPoly& b, long shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (size_t k = 0; k < b.size(); ++k) a[k + shift] -= b[k];
}

// numerator K(t) of the Hilbert series K(t)/(1-t)^n of A/(monomial ideal)
ZPoly k_polynomial(std::vector<Mono> gens) {
  gens = minimalize(gens);
  if (gens.empty()) return {1};
  if (gens.size() == 1) {
    ZPoly k{1};
    zp_sub_shifted(k, {1}, total_degree(gens[0]));
    return k;
  }
  Mono pivot = gens.back();
  std::vector<Mono> rest(gens.begin(), gens.end() - 1);
  std::vector<Mono> colon;
  for (const auto& m : rest) {
    Mono q(m.size());
    for (size_t j = 0; j < m.size(); ++j) q[j] = std::max(0, m[j] - pivot[j]);
    colon.push_back(std::move(q));
  }
  ZPoly a = k_polynomial(rest);
  ZPoly b = k_polynomial(std::move(colon));
  zp_sub_shifted(a, b, total_degree(pivot));
  return a;
}

long long zp_value_at_one(const ZPoly& k) {
  long long s = 0;
  for (long long c : k) s += c;
  return s;
}

// divides by (1-t) as long as the value at 1 vanishes; returns the count
int strip_unit_roots(ZPoly& k) {
  int count = 0;
  while (!k.empty() && zp_value_at_one(k) == 0) {
    // K = (1-t) * Q with Q[i] = K[0] + ... + K[i]
    ZPoly q(k.size() - 1);
    long long acc = 0;
    for (size_t i = 0; i + 1 < k.size(); ++i) {
      acc += k[i];
      q[i] = acc;
    }
    k = std::move(q);
    ++count;
    if (k.empty()) break;
  }
  return count;
}

}  // namespace

long long graded_multiplicity(const PolyRing& ring, const std::vector<MPoly>& basis) {
  std::vector<Mono> leads;
  for (const auto& h : basis) {
    require(total_degree(h.lead().m) > 0, "graded multiplicity of the unit ideal");
    leads.push_back(h.lead().m);
  }
  ZPoly k = k_polynomial(leads);
  int stripped = strip_unit_roots(k);
  int dim = ring.nvars - stripped;
  internal_check(dim == krull_dim(ring, basis), "Hilbert series dimension disagrees");
  long long e = zp_value_at_one(k);
  internal_check(e > 0, "multiplicity must be positive");
  return e;
}

long long quotient_colength(const PolyRing& ring, const std::vector<MPoly>& basis) {
  std::vector<Mono> leads;
  for (const auto& h : basis) leads.push_back(h.lead().m);
  leads = minimalize(leads);
  if (!leads.empty() && total_degree(leads[0]) == 0) return 0;  // unit ideal
  // finiteness: every variable needs a pure power among the lead terms
  for (int j = 0; j < ring.nvars; ++j) {
    bool found = false;
    for (const auto& m : leads) {
      bool pure = m[j] > 0;
      for (int k = 0; k < ring.nvars && pure; ++k) {
        if (k != j && m[k] > 0) pure = false;
      }
      if (pure) { found = true; break; }
    }
    if (!found) {
      throw PositiveDimensionalError("quotient is not finite dimensional");
    }
  }
  // count standard monomials by depth-first scan under the staircase
  long long count = 0;
  Mono e(ring.nvars, 0);
  auto divisible = [&](const Mono& m) {
    for (const auto& l : leads) {
      if (divides(l, m)) return true;
    }
    return false;
  };
  auto rec = [&](auto&& self, int var) -> void {
    if (var == ring.nvars) {
      ++count;
      return;
    }
    for (e[var] = 0;; ++e[var]) {
      if (divisible(e)) break;
      self(self, var + 1);
    }
    e[var] = 0;
  };
  rec(rec, 0);
  return count;
}

MPoly general_element(const PolyRing& ring, const MonomialSet& j, std::uint64_t seed) {
  require(ring.nvars == j.num_vars, "variable count mismatch");
  SplitMix64 rng(seed);
  std::vector<Term> terms;
  for (const auto& e : j.exponents) {
    Mono m(e.begin(), e.end());
    std::uint32_t c = 1 + static_cast<std::uint32_t>(rng.below(ring.field.p - 1));
    terms.push_back({std::move(m), c});
  }
  return make_poly(ring, std::move(terms));
}

namespace {

SamuelResult samuel_once(const MonomialConfiguration& c, const MultiIndex& alpha,
                         std::uint64_t seed, std::uint32_t p) {
  PolyRing ring = PolyRing::grevlex(c.num_vars, p);
  SplitMix64 seeder(seed);
  std::vector<MPoly> q;
  for (size_t i = 1; i < c.sets.size(); ++i) {
    for (long k = 0; k < alpha[i]; ++k) {
      q.push_back(general_element(ring, c.sets[i], seeder.next()));
    }
  }
  std::vector<MPoly> sat = saturate_coordinates(ring, std::move(q));
  SamuelResult res;
  res.seed_used = seed;
  res.dim = krull_dim(ring, sat);
  res.positive = (res.dim == static_cast<int>(alpha[0]) + 1);
  res.e = res.positive ? graded_multiplicity(ring, sat) : 0;
  return res;
}

}  // namespace

SamuelResult samuel_mixed_multiplicity(const MonomialConfiguration& c, const MultiIndex& alpha,
                                       std::uint64_t seed, std::uint32_t p, bool allow_reseed) {
  require(alpha.size() == c.sets.size(), "alpha length must match the configuration");
  long total = 0;
  for (long a : alpha) {
    require(a >= 0, "alpha entries must be non-negative");
    total += a;
  }
  require(total == c.num_vars - 1, "|alpha| must equal the Hilbert polynomial degree");

  SamuelResult res = samuel_once(c, alpha, seed, p);
  if (!res.positive && allow_reseed) {
    SamuelResult retry = samuel_once(c, alpha, reseed(seed), p);
    retry.reseeds = 1;
    if (retry.positive) return retry;
  }
  return res;
}

TeissierResult teissier_check(const MonomialConfiguration& c, const MultiIndex& alpha,
                              std::uint64_t seed, std::uint32_t p) {
  require(alpha.size() == c.sets.size(), "alpha length must match the configuration");
  long total = 0;
  for (long a : alpha) {
    require(a >= 0, "alpha entries must be non-negative");
    total += a;
  }
  require(total == c.num_vars - 1, "|alpha| must equal dim A - 1");
  // every J_i must contain a power of every variable
  for (size_t i = 1; i < c.sets.size(); ++i) {
    const auto& m = c.sets[i];
    for (int j = 0; j < c.num_vars; ++j) {
      bool found = false;
      for (const auto& e : m.exponents) {
        if (e[j] == m.degree) { found = true; break; }
      }
      require(found, "teissier check requires m-primary ideals "
                     "(a pure power of every variable in each set)");
    }
  }

  PolyRing ring = PolyRing::grevlex(c.num_vars, p);
  SplitMix64 seeder(seed);
  std::vector<MPoly> pgens;
  for (long k = 0; k < alpha[0] + 1; ++k) {
    pgens.push_back(general_element(ring, c.sets[0], seeder.next()));
  }
  for (size_t i = 1; i < c.sets.size(); ++i) {
    for (long k = 0; k < alpha[i]; ++k) {
      pgens.push_back(general_element(ring, c.sets[i], seeder.next()));
    }
  }
  std::vector<MPoly> gb = buchberger(ring, pgens);
  TeissierResult out;
  out.rhs = quotient_colength(ring, gb);
  out.lhs = mixed_multiplicity_fd(c, alpha);
  return out;
}

}  // namespace mixedvol
