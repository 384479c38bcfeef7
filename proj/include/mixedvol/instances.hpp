#pragma once

#include <cstdint>

#include "mixedvol/bernstein.hpp"
#include "mixedvol/hilbert.hpp"
#include "mixedvol/lattice.hpp"
#include "mixedvol/rng.hpp"

namespace mixedvol {

// Deterministic random instances shared by the self-test command and the
// acceptance suite.

LatticePolytope random_polytope(SplitMix64& rng, int dim, int max_points, long coord_max);

PolytopeTuple random_tuple(SplitMix64& rng, int dim, int max_points, long coord_max);

// Random equal-degree monomial sets on top of the unit-vector set.
MonomialConfiguration random_configuration(SplitMix64& rng, int num_vars, int s, long max_degree,
                                           int max_terms);

// Sparse square system; coefficients are drawn from a small set of units
// modulo the q's used for exhaustive counting.
LaurentSystem random_sparse_system(SplitMix64& rng, int num_vars, int max_terms, long exp_min,
                                   long exp_max);

struct CrossCheckResult {
  int trials = 0;
  int failures = 0;
  std::uint64_t seed = 0;
};

// Runs all mixed-volume routes against each other on random tuples and the
// finite-difference route against the diagonal route on random
// configurations.  Returns the number of disagreements.
CrossCheckResult run_crosscheck(int trials, std::uint64_t seed, std::uint32_t prime);

}  // namespace mixedvol
