#include "mixedvol/instances.hpp"

#include "mixedvol/errors.hpp"
#include "mixedvol/groebner.hpp"

namespace mixedvol {

LatticePolytope random_polytope(SplitMix64& rng, int dim, int max_points, long coord_max) {
  int k = 1 + static_cast<int>(rng.below(max_points));
  std::vector<Point> pts;
  for (int i = 0; i < k; ++i) {
    Point p(dim);
    for (int j = 0; j < dim; ++j) p[j] = Int(rng.range(0, coord_max));
    pts.push_back(std::move(p));
  }
  return LatticePolytope::from_points(dim, std::move(pts));
}

PolytopeTuple random_tuple(SplitMix64& rng, int dim, int max_points, long coord_max) {
  PolytopeTuple t;
  t.dim = dim;
  for (int i = 0; i < dim; ++i) {
    t.polytopes.push_back(random_polytope(rng, dim, max_points, coord_max));
  }
  return t;
}

MonomialConfiguration random_configuration(SplitMix64& rng, int num_vars, int s, long max_degree,
                                           int max_terms) {
  std::vector<MonomialSet> js;
  for (int i = 0; i < s; ++i) {
    long d = rng.range(1, max_degree);
    int terms = 1 + static_cast<int>(rng.below(max_terms));
    std::vector<Expo> exps;
    for (int t = 0; t < terms; ++t) {
      // random composition of d over num_vars slots
      Expo e(num_vars, 0);
      for (long unit = 0; unit < d; ++unit) e[rng.below(num_vars)]++;
      exps.push_back(std::move(e));
    }
    js.push_back(MonomialSet(num_vars, std::move(exps)));
  }
  return MonomialConfiguration::with_default_m0(num_vars, std::move(js));
}

LaurentSystem random_sparse_system(SplitMix64& rng, int num_vars, int max_terms, long exp_min,
                                   long exp_max) {
  // coefficient pool avoids 0 mod 5 and mod 7 so reductions keep supports
  static const long kCoeffs[] = {1, 2, 3, 4, -1, -2, -3, -4};
  std::vector<LaurentPoly> polys;
  for (int i = 0; i < num_vars; ++i) {
    int terms = 1 + static_cast<int>(rng.below(max_terms));
    std::map<std::vector<long>, Int> t;
    for (int k = 0; k < terms; ++k) {
      std::vector<long> e(num_vars);
      for (int j = 0; j < num_vars; ++j) e[j] = rng.range(exp_min, exp_max);
      t[std::move(e)] = Int(kCoeffs[rng.below(8)]);
    }
    polys.push_back(LaurentPoly(num_vars, std::move(t)));
  }
  return LaurentSystem(num_vars, std::move(polys));
}

CrossCheckResult run_crosscheck(int trials, std::uint64_t seed, std::uint32_t prime) {
  CrossCheckResult res;
  res.trials = trials;
  res.seed = seed;
  SplitMix64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    // alternate between dimension 2 and 3 tuples
    int dim = (t % 3 == 2) ? 3 : 2;
    long coord_max = dim == 2 ? 5 : 3;
    PolytopeTuple tuple = random_tuple(rng, dim, 5, coord_max);
    Rat geo = mixed_volume_ie(tuple);
    Rat interp = mixed_volume_interp(tuple);
    long long alg = mv_via_algebra(tuple);
    bool ok = (geo == interp) && (geo == Rat(static_cast<long>(alg)));

    // Samuel route on the homogenized configuration
    MonomialConfiguration conf = configuration_of_tuple(tuple);
    MultiIndex alpha(dim + 1, 1);
    alpha[0] = 0;
    SamuelResult sam = samuel_mixed_multiplicity(conf, alpha, rng.next(), prime);
    ok = ok && (sam.positive ? sam.e == alg : alg == 0);

    // finite differences against the diagonal route on a random configuration
    MonomialConfiguration c2 = random_configuration(rng, 3, 2, 3, 4);
    MixedMultiplicityVector mm = mixed_mults_via_diagonals(c2);
    for (const auto& [a, v] : mm.values) {
      if (mixed_multiplicity_fd(c2, a) != v) ok = false;
    }
    if (!ok) ++res.failures;
  }
  return res;
}

}  // namespace mixedvol
