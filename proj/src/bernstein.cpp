#include "mixedvol/bernstein.hpp"

#include <algorithm>

#include "mixedvol/errors.hpp"
#include "mixedvol/groebner.hpp"
#include "mixedvol/rng.hpp"

namespace mixedvol {

LaurentPoly::LaurentPoly(int nv, std::map<std::vector<long>, Int> t) {
  require(nv >= 1, "laurent polynomial needs at least one variable");
  num_vars = nv;
  for (auto it = t.begin(); it != t.end();) {
    require(static_cast<int>(it->first.size()) == nv, "exponent length mismatch");
    if (it->second == 0) it = t.erase(it);
    else ++it;
  }
  require(!t.empty(), "laurent polynomial must have at least one term");
  terms = std::move(t);
}

LaurentSystem::LaurentSystem(int nv, std::vector<LaurentPoly> ps) {
  require(nv >= 1, "system needs at least one variable");
  require(static_cast<int>(ps.size()) == nv, "system must be square");
  for (const auto& f : ps) {
    require(f.num_vars == nv, "system variable count mismatch");
  }
  num_vars = nv;
  polys = std::move(ps);
}

LatticePolytope newton_polytope(const LaurentPoly& f) {
  std::vector<Point> pts;
  for (const auto& [e, c] : f.terms) {
    Point p(f.num_vars);
    for (int j = 0; j < f.num_vars; ++j) p[j] = e[j];
    pts.push_back(std::move(p));
  }
  return LatticePolytope::from_points(f.num_vars, std::move(pts));
}

LaurentPoly clear_denominators(const LaurentPoly& f) {
  std::vector<long> shift(f.num_vars, 0);
  for (const auto& [e, c] : f.terms) {
    for (int j = 0; j < f.num_vars; ++j) shift[j] = std::max(shift[j], -e[j]);
  }
  std::map<std::vector<long>, Int> out;
  for (const auto& [e, c] : f.terms) {
    std::vector<long> m(f.num_vars);
    for (int j = 0; j < f.num_vars; ++j) m[j] = e[j] + shift[j];
    out[std::move(m)] = c;
  }
  return LaurentPoly(f.num_vars, std::move(out));
}

LaurentPoly multiply(const LaurentPoly& f, const LaurentPoly& g) {
  require(f.num_vars == g.num_vars, "variable count mismatch");
  std::map<std::vector<long>, Int> out;
  for (const auto& [ea, ca] : f.terms) {
    for (const auto& [eb, cb] : g.terms) {
      std::vector<long> e(f.num_vars);
      for (int j = 0; j < f.num_vars; ++j) e[j] = ea[j] + eb[j];
      out[std::move(e)] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0) it = out.erase(it);
    else ++it;
  }
  return LaurentPoly(f.num_vars, std::move(out));
}

Int bernstein_bound(const LaurentSystem& s) {
  PolytopeTuple t;
  t.dim = s.num_vars;
  for (const auto& f : s.polys) t.polytopes.push_back(newton_polytope(f));
  return mixed_volume(t);
}

long long count_torus_points_exhaustive(const LaurentSystem& s, std::uint32_t q,
                                        std::uint64_t budget) {
  require(is_prime(q), "exhaustive counting needs a prime field size");
  const int n = s.num_vars;
  {
    std::uint64_t cost = 1;
    for (int j = 0; j < n; ++j) {
      require(cost <= budget / q, "evaluation budget exceeded");
      cost *= q;
    }
  }
  PrimeField fq(q);

  // reduce coefficients mod q; terms may vanish, a whole polynomial may too
  struct RTerm { std::vector<long> e; std::uint32_t c; };
  std::vector<std::vector<RTerm>> reduced(n);
  for (int i = 0; i < n; ++i) {
    for (const auto& [e, c] : s.polys[i].terms) {
      Int r = c % q;
      if (r < 0) r += q;
      if (r == 0) continue;
      std::vector<long> em(e.size());
      for (size_t j = 0; j < e.size(); ++j) {
        long m = e[j] % static_cast<long>(q - 1);
        if (m < 0) m += q - 1;
        em[j] = m;  // x in F_q^* has order dividing q-1
      }
      reduced[i].push_back({std::move(em), static_cast<std::uint32_t>(r.get_ui())});
    }
  }

  std::vector<std::uint32_t> x(n, 1);
  long long count = 0;
  for (;;) {
    bool all_zero = true;
    for (int i = 0; i < n && all_zero; ++i) {
      std::uint32_t acc = 0;
      for (const auto& t : reduced[i]) {
        std::uint32_t v = t.c;
        for (int j = 0; j < n; ++j) {
          if (t.e[j]) v = fq.mul(v, fq.pow(x[j], t.e[j]));
        }
        acc = fq.add(acc, v);
      }
      if (acc != 0) all_zero = false;
    }
    if (all_zero) ++count;
    int j = 0;
    while (j < n && x[j] == q - 1) x[j++] = 1;
    if (j == n) break;
    ++x[j];
  }
  return count;
}

namespace {

// the system as polynomials over F_p with cleared denominators
std::vector<MPoly> system_ideal(const LaurentSystem& s, const PolyRing& ring,
                                std::optional<std::uint64_t> randomize_seed) {
  SplitMix64 rng(randomize_seed.value_or(0));
  std::vector<MPoly> gens;
  for (const auto& f0 : s.polys) {
    LaurentPoly f = clear_denominators(f0);
    std::vector<Term> terms;
    for (const auto& [e, c] : f.terms) {
      std::uint32_t cv;
      if (randomize_seed) {
        cv = 1 + static_cast<std::uint32_t>(rng.below(ring.field.p - 1));
      } else {
        Int r = c % ring.field.p;
        if (r < 0) r += ring.field.p;
        cv = static_cast<std::uint32_t>(r.get_ui());
      }
      if (cv == 0) continue;
      Mono m(e.begin(), e.end());
      terms.push_back({std::move(m), cv});
    }
    MPoly g = make_poly(ring, std::move(terms));
    if (!g.zero()) gens.push_back(std::move(g));
  }
  return gens;
}

}  // namespace

long long count_with_multiplicity(const LaurentSystem& s, std::uint32_t p,
                                  std::optional<std::uint64_t> randomize_seed) {
  const int n = s.num_vars;
  PolyRing ring = PolyRing::grevlex(n, p);
  std::vector<MPoly> gens = system_ideal(s, ring, randomize_seed);
  if (gens.empty()) {
    throw PositiveDimensionalError("system vanished modulo p");
  }
  MPoly torus = mono_poly(ring, Mono(n, 1));  // x_1 * ... * x_n
  std::vector<MPoly> sat = saturate(ring, gens, torus);
  if (sat.empty()) {
    // saturating the zero ideal; only possible when all generators vanished
    throw PositiveDimensionalError("saturated ideal is zero");
  }
  int dim = krull_dim(ring, sat);
  if (dim > 0) {
    throw PositiveDimensionalError("the system has infinitely many torus zeros");
  }
  return quotient_colength(ring, sat);
}

BernsteinReport verify_bernstein(const LaurentSystem& s, std::uint32_t p,
                                 const std::vector<std::uint32_t>& qs, int trials,
                                 std::uint64_t seed) {
  BernsteinReport rep;
  rep.seed = seed;
  rep.prime = p;
  Int bound = bernstein_bound(s);
  internal_check(bound.fits_slong_p(), "bound out of range");
  rep.bound = bound.get_si();

  for (std::uint32_t q : qs) {
    BernsteinFieldCheck chk;
    chk.q = q;
    chk.distinct = count_torus_points_exhaustive(s, q);
    // the bound applies when the zero set over the closure of F_q is finite
    try {
      count_with_multiplicity(s, q);
      chk.finite = true;
    } catch (const PositiveDimensionalError&) {
      chk.finite = false;
    }
    chk.within_bound = chk.distinct <= rep.bound;
    if (chk.finite && !chk.within_bound) {
      throw BoundViolationError("distinct torus zeros over F_" + std::to_string(q) +
                                " exceed the polytope bound");
    }
    rep.field_checks.push_back(chk);
  }

  try {
    rep.multiplicity_count = count_with_multiplicity(s, p);
    rep.given_finite = true;
    rep.attained_given = (rep.multiplicity_count == rep.bound);
  } catch (const PositiveDimensionalError&) {
    rep.given_finite = false;
  }

  rep.trials = trials;
  SplitMix64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::uint64_t ts = rng.next();
    try {
      if (count_with_multiplicity(s, p, ts) == rep.bound) ++rep.attained_trials;
    } catch (const PositiveDimensionalError&) {
      // a degenerate draw counts as a miss
    }
  }
  return rep;
}

}  // namespace mixedvol
