#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mixedvol/lattice.hpp"

namespace mixedvol {

// Sparse-system front end: Newton polytopes, the polytope bound on torus
// root counts, exhaustive counts over small prime fields, and multiplicity
// counts through saturation.

struct LaurentPoly {
  int num_vars = 0;
  std::map<std::vector<long>, Int> terms;  // exponent -> nonzero coefficient

  LaurentPoly(int nv, std::map<std::vector<long>, Int> t);
};

struct LaurentSystem {
  int num_vars = 0;
  std::vector<LaurentPoly> polys;  // exactly num_vars of them

  LaurentSystem(int nv, std::vector<LaurentPoly> ps);
};

LatticePolytope newton_polytope(const LaurentPoly& f);

// Multiplies by the monomial that lifts all exponents into N^n; the torus
// zero set and the mixed volume of the Newton polytopes are unchanged.
LaurentPoly clear_denominators(const LaurentPoly& f);

LaurentPoly multiply(const LaurentPoly& f, const LaurentPoly& g);

// Mixed volume of the Newton polytopes.
Int bernstein_bound(const LaurentSystem& s);

// Number of common zeros in (F_q^*)^n by direct evaluation; q prime,
// q^n within budget.
long long count_torus_points_exhaustive(const LaurentSystem& s, std::uint32_t q,
                                        std::uint64_t budget = 10'000'000);

// Length of F_p[x]/((f_1,...,f_n) : (x_1...x_n)^infinity): the torus zero
// count with multiplicities over the algebraic closure.  Throws
// PositiveDimensionalError when the saturated ideal is not zero dimensional.
// With a randomize seed, the coefficients are redrawn uniformly from
// F_p \ {0} on the same supports.
long long count_with_multiplicity(const LaurentSystem& s, std::uint32_t p,
                                  std::optional<std::uint64_t> randomize_seed = std::nullopt);

struct BernsteinFieldCheck {
  std::uint32_t q = 0;
  long long distinct = -1;
  bool finite = true;  // the saturated ideal mod q is zero dimensional
  bool within_bound = true;
};

struct BernsteinReport {
  long long bound = 0;
  std::vector<BernsteinFieldCheck> field_checks;
  bool given_finite = true;
  long long multiplicity_count = -1;  // of the system as given, over p
  bool attained_given = false;
  int trials = 0;
  int attained_trials = 0;
  std::uint64_t seed = 0;
  std::uint32_t prime = 0;
};

// Checks distinct counts against the bound over each sampled field (a hard
// invariant whenever the zero set is finite), and samples random-coefficient
// redraws to report how often the multiplicity count attains the bound.
// Throws BoundViolationError if a finite distinct count exceeds the bound.
BernsteinReport verify_bernstein(const LaurentSystem& s, std::uint32_t p,
                                 const std::vector<std::uint32_t>& qs, int trials,
                                 std::uint64_t seed);

}  // namespace mixedvol
