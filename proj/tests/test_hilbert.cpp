#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mixedvol/hilbert.hpp"
#include "mixedvol/instances.hpp"
#include "mixedvol/rng.hpp"
#include "oracles.hpp"

using namespace mixedvol;

namespace {

MonomialSet mset(int nv, std::vector<Expo> exps) { return MonomialSet(nv, std::move(exps)); }

// all exponent vectors of a given degree
MonomialSet dense_set(int nv, long degree) {
  std::vector<Expo> exps;
  Expo cur(nv, 0);
  auto rec = [&](auto&& self, int var, long left) -> void {
    if (var == nv - 1) {
      cur[var] = left;
      exps.push_back(cur);
      return;
    }
    for (long v = 0; v <= left; ++v) {
      cur[var] = v;
      self(self, var + 1, left - v);
    }
  };
  rec(rec, 0, degree);
  return MonomialSet(nv, std::move(exps));
}

LatticePolytope simplex(int n, long d) {
  std::vector<Point> pts{Point(n, Int(0))};
  for (int j = 0; j < n; ++j) {
    Point p(n, Int(0));
    p[j] = d;
    pts.push_back(std::move(p));
  }
  return LatticePolytope::from_points(n, pts);
}

}  // namespace

TEST_CASE("monomial set validation") {
  CHECK_THROWS_AS(mset(2, {{1, 0}, {2, 0}}), std::invalid_argument);  // mixed degrees
  CHECK_THROWS_AS(mset(2, {{1, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(mset(2, {}), std::invalid_argument);
  CHECK(mset(2, {{1, 1}, {1, 1}}).exponents.size() == 1);  // duplicates collapse
}

TEST_CASE("configuration validation") {
  auto m0 = MonomialSet::units(2);
  CHECK_NOTHROW(MonomialConfiguration(2, {m0}));
  CHECK_THROWS_AS(MonomialConfiguration(2, {mset(2, {{2, 0}})}), std::invalid_argument);
}

TEST_CASE("sumset powers") {
  auto m = mset(2, {{1, 0}, {0, 1}});
  CHECK(sumset_power(m, 2) == std::vector<Expo>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(sumset_power(m, 0) == std::vector<Expo>{{0, 0}});
  // sums over raw point sets need no equal-degree structure
  std::vector<Expo> skew{{1, 0}, {0, 2}};
  CHECK(sumset_power(skew, 2) == oracles::sumset_naive(skew, 2));
  CHECK(sumset_power(skew, 2) == std::vector<Expo>{{0, 4}, {1, 2}, {2, 0}});
}

TEST_CASE("sumset powers match naive enumeration on random sets") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 15; ++trial) {
    auto c = random_configuration(rng, 3, 1, 3, 4);
    const auto& m = c.sets[1];
    long h = 1 + static_cast<long>(rng.below(4));
    CHECK(sumset_power(m, h) == oracles::sumset_naive(m.exponents, h));
  }
}

TEST_CASE("hilbert values of the twisted segment algebra") {
  // two variables, J generated by both of them: H(u0, u1) = u0 + u1 + 1
  auto c = MonomialConfiguration::with_default_m0(2, {MonomialSet::units(2)});
  for (long u0 : {0L, 1L, 4L}) {
    for (long u1 : {0L, 2L, 5L}) {
      CHECK(hilbert_value(c, {u0, u1}) == u0 + u1 + 1);
    }
  }
  CHECK(hilbert_value(c, {0, 0}) == 1);
}

TEST_CASE("hilbert value counts monomials of the doubled degree") {
  auto c = MonomialConfiguration::with_default_m0(3, {dense_set(3, 2)});
  CHECK(hilbert_value(c, {0, 2}) == 15);  // all degree-4 monomials in 3 variables
  CHECK(hilbert_value(c, {0, 0}) == 1);
}

TEST_CASE("hilbert value validates the index length") {
  auto c = MonomialConfiguration::with_default_m0(2, {MonomialSet::units(2)});
  HilbertEvaluator ev(c);
  CHECK_THROWS_AS(ev.value({1, 2, 3}), std::invalid_argument);
}

TEST_CASE("bitmap and hash sumset engines agree") {
  SplitMix64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    auto c = random_configuration(rng, 3, 2, 3, 4);
    HilbertEvaluator ev(c);
    // the hash path reproduces the bitmap path through the naive sumsets
    MultiIndex u{static_cast<long>(rng.below(5)), static_cast<long>(rng.below(4)),
                 static_cast<long>(rng.below(4))};
    std::vector<std::vector<long>> acc{{0, 0}};
    for (size_t i = 0; i < c.sets.size(); ++i) {
      std::vector<std::vector<long>> proj;
      for (const auto& e : c.sets[i].exponents) proj.push_back({e[1], e[2]});
      auto powered = oracles::sumset_naive(proj, u[i]);
      std::vector<std::vector<long>> next;
      for (const auto& a : acc) {
        for (const auto& b : powered) next.push_back({a[0] + b[0], a[1] + b[1]});
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      acc = std::move(next);
    }
    CHECK(ev.value(u) == static_cast<long long>(acc.size()));
  }
}

TEST_CASE("five-variable configurations run on the hash engine") {
  // with J generated by all the variables, H(u0, u1) counts the monomials
  // of degree u0 + u1 in five variables: C(u0 + u1 + 4, 4)
  auto c = MonomialConfiguration::with_default_m0(5, {MonomialSet::units(5)});
  auto choose4 = [](long n) { return n * (n - 1) * (n - 2) * (n - 3) / 24; };
  HilbertEvaluator ev(c);
  for (long u0 : {0L, 3L, 7L}) {
    for (long u1 : {0L, 2L, 5L}) {
      CHECK(ev.value({u0, u1}) == choose4(u0 + u1 + 4));
    }
  }
  // every mixed multiplicity of this configuration is one
  CHECK(mixed_multiplicity_fd(c, {4, 0}) == 1);
  CHECK(mixed_multiplicity_fd(c, {2, 2}) == 1);
  CHECK(mixed_multiplicity_fd(c, {0, 4}) == 1);
  // H(t, t) = C(2t + 4, 4) has leading coefficient 16/24, so e = 16
  CHECK(diagonal_multiplicity(c, {1, 1}) == 16);
}

TEST_CASE("first-slot mixed multiplicity is always one") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 8; ++trial) {
    int s = 1 + static_cast<int>(rng.below(2));
    auto c = random_configuration(rng, 3, s, 3, 4);
    MultiIndex alpha(c.sets.size(), 0);
    alpha[0] = c.num_vars - 1;
    CHECK(mixed_multiplicity_fd(c, alpha) == 1);
  }
}

TEST_CASE("dense configurations give product multiplicities") {
  auto c = MonomialConfiguration::with_default_m0(3, {dense_set(3, 2), dense_set(3, 3)});
  CHECK(mixed_multiplicity_fd(c, {0, 1, 1}) == 6);
  CHECK(mixed_multiplicity_fd(c, {1, 1, 0}) == 2);
  CHECK(mixed_multiplicity_fd(c, {1, 0, 1}) == 3);
  CHECK(mixed_multiplicity_fd(c, {2, 0, 0}) == 1);
}

TEST_CASE("cubic powers on a segment") {
  auto c = MonomialConfiguration::with_default_m0(2, {mset(2, {{3, 0}, {0, 3}})});
  CHECK(mixed_multiplicity_fd(c, {0, 1}) == 3);
  CHECK(mixed_multiplicity_fd(c, {1, 0}) == 1);
}

TEST_CASE("fd validates alpha") {
  auto c = MonomialConfiguration::with_default_m0(2, {MonomialSet::units(2)});
  CHECK_THROWS_AS(mixed_multiplicity_fd(c, {1, 1}), std::invalid_argument);   // |alpha| != 1
  CHECK_THROWS_AS(mixed_multiplicity_fd(c, {1}), std::invalid_argument);      // wrong length
}

TEST_CASE("diagonal multiplicities") {
  auto c = MonomialConfiguration::with_default_m0(2, {MonomialSet::units(2)});
  CHECK(diagonal_multiplicity(c, {1, 1}) == 2);  // H(t,t) = 2t + 1

  auto c3 = MonomialConfiguration::with_default_m0(2, {mset(2, {{3, 0}, {0, 3}})});
  CHECK(diagonal_multiplicity(c3, {1, 1}) == 4);  // 1 + 3

  CHECK_THROWS_AS(diagonal_multiplicity(c, {1, 0}), std::invalid_argument);
}

TEST_CASE("diagonal route recovers the segment multiplicities") {
  auto c = MonomialConfiguration::with_default_m0(2, {MonomialSet::units(2)});
  auto mm = mixed_mults_via_diagonals(c);
  CHECK(mm.total_degree == 1);
  CHECK(mm.values.at({1, 0}) == 1);
  CHECK(mm.values.at({0, 1}) == 1);
}

TEST_CASE("diagonal route agrees with finite differences") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 8; ++trial) {
    auto c = random_configuration(rng, 3, 2, 3, 4);
    auto mm = mixed_mults_via_diagonals(c);
    for (const auto& [alpha, v] : mm.values) {
      CHECK(mixed_multiplicity_fd(c, alpha) == v);
    }
  }
}

TEST_CASE("diagonal consistency on fresh lambdas") {
  SplitMix64 rng(19);
  for (int trial = 0; trial < 6; ++trial) {
    auto c = random_configuration(rng, 3, 2, 3, 3);
    auto mm = mixed_mults_via_diagonals(c);
    const long r = c.num_vars - 1;
    for (int rep = 0; rep < 3; ++rep) {
      MultiIndex lambda(c.sets.size());
      for (auto& l : lambda) l = rng.range(1, 3);
      // r! * sum e_alpha lambda^alpha / alpha! must equal the diagonal value
      long long acc = 0;
      for (const auto& [alpha, v] : mm.values) {
        long long coef = 1;
        // r! / alpha! is a multinomial coefficient
        long long numer = 1;
        for (long k = 2; k <= r; ++k) numer *= k;
        long long denom = 1;
        for (long a : alpha) {
          for (long k = 2; k <= a; ++k) denom *= k;
        }
        coef = numer / denom;
        for (size_t i = 0; i < alpha.size(); ++i) {
          for (long e = 0; e < alpha[i]; ++e) coef *= lambda[i];
        }
        acc += coef * v;
      }
      CHECK(acc == diagonal_multiplicity(c, lambda));
    }
  }
}

TEST_CASE("rigidity: positivity propagates down the slot order") {
  SplitMix64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    auto c = random_configuration(rng, 3, 2, 3, 4);
    auto mm = mixed_mults_via_diagonals(c);
    for (const auto& [alpha, v] : mm.values) {
      if (v == 0) continue;
      for (const auto& [beta, w] : mm.values) {
        bool below = true;
        for (size_t i = 1; i < alpha.size(); ++i) {
          if (beta[i] > alpha[i]) { below = false; break; }
        }
        if (below) CHECK(w > 0);
      }
    }
  }
}

TEST_CASE("mixed volume through the algebra route") {
  PolytopeTuple seg{1, {LatticePolytope::from_points(1, {{Int(0)}, {Int(3)}})}};
  CHECK(mv_via_algebra(seg) == 3);

  PolytopeTuple t{2, {simplex(2, 1), simplex(2, 2)}};
  CHECK(mv_via_algebra(t) == 2);

  PolytopeTuple bez{3, {simplex(3, 1), simplex(3, 2), simplex(3, 3)}};
  CHECK(mv_via_algebra(bez) == 6);
}

TEST_CASE("algebra route handles negative coordinates by translating") {
  std::vector<Point> pts{{Int(-2), Int(-1)}, {Int(-1), Int(-1)}, {Int(-2), Int(0)}};
  PolytopeTuple t{2, {LatticePolytope::from_points(2, pts), simplex(2, 1)}};
  CHECK(mv_via_algebra(t) == static_cast<long long>(mixed_volume(t).get_si()));
}

TEST_CASE("algebra route equals the geometric routes on random tuples") {
  SplitMix64 rng(43);
  for (int trial = 0; trial < 12; ++trial) {
    auto t = random_tuple(rng, 2, 5, 5);
    Rat geo = mixed_volume_ie(t);
    CHECK(Rat(static_cast<long>(mv_via_algebra(t))) == geo);
  }
}

TEST_CASE("degree law holds empirically") {
  SplitMix64 rng(53);
  for (int trial = 0; trial < 5; ++trial) {
    auto c = random_configuration(rng, 3, 2, 3, 3);
    auto rep = verify_degree_law(c);
    CHECK(rep.expected == 2);
    CHECK(rep.top_nonzero);
    CHECK(rep.higher_vanish);
    CHECK(rep.observed == 2);
  }
}

TEST_CASE("probe reports equal sides for equal ideals") {
  auto j = dense_set(3, 2);
  auto c = MonomialConfiguration::with_default_m0(3, {j, j});
  auto rep = probe_af(c);
  CHECK(rep.e11 == rep.e22);
  CHECK(rep.lhs == rep.rhs);
  CHECK(rep.comparison == 0);
  CHECK(rep.hypothesis_ok);
}

TEST_CASE("probe on dense ideals gives Bezout numbers on both sides") {
  auto c = MonomialConfiguration::with_default_m0(3, {dense_set(3, 2), dense_set(3, 3)});
  auto rep = probe_af(c);
  CHECK(rep.e == 6);
  CHECK(rep.e11 == 4);
  CHECK(rep.e22 == 9);
  CHECK(rep.lhs == 36);
  CHECK(rep.rhs == 36);
  CHECK(rep.comparison == 0);
}

TEST_CASE("probe runs on sparse instances without asserting a relation") {
  SplitMix64 rng(59);
  auto c = random_configuration(rng, 3, 2, 3, 3);
  auto rep = probe_af(c);
  CHECK(rep.lhs == rep.e * rep.e);
  CHECK(rep.rhs == rep.e11 * rep.e22);
}

TEST_CASE("explicit larger bases give the same multiplicities") {
  auto c = MonomialConfiguration::with_default_m0(3, {dense_set(3, 2), dense_set(3, 3)});
  FdOptions big;
  big.base_override = default_fd_base(c) + 7;
  CHECK(mixed_multiplicity_fd(c, {0, 1, 1}, big) == 6);
}
