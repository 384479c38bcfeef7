#pragma once

#include <map>
#include <memory>
#include <vector>

#include "mixedvol/lattice.hpp"

namespace mixedvol {

// Multigraded Hilbert functions of configurations (M_0 | M_1, ..., M_s) of
// equal-degree monomial sets, evaluated by exact sumset enumeration, and the
// mixed multiplicities extracted from them by finite differences and by
// diagonal-subalgebra interpolation.

using Expo = std::vector<long>;        // exponent vector in N^num_vars
using MultiIndex = std::vector<long>;  // (u_0, ..., u_s) or (a_0, ..., a_s)

struct MonomialSet {
  int num_vars = 0;
  long degree = 0;
  std::vector<Expo> exponents;  // distinct, sorted, coordinate sums all equal degree

  MonomialSet(int nv, std::vector<Expo> exps);

  // {x_0, ..., x_{nv-1}}
  static MonomialSet units(int nv);
};

struct MonomialConfiguration {
  int num_vars = 0;
  std::vector<MonomialSet> sets;  // sets[0] is always the unit-vector set

  MonomialConfiguration(int nv, std::vector<MonomialSet> all_sets);

  // Prepends the unit-vector set M_0.
  static MonomialConfiguration with_default_m0(int nv, std::vector<MonomialSet> js);

  int s() const { return static_cast<int>(sets.size()) - 1; }
};

// All sums of h elements of M with repetition; h = 0 gives {0}.  Defined on
// raw point sets (no equal-degree requirement).
std::vector<Expo> sumset_power(const std::vector<Expo>& m, long h);
std::vector<Expo> sumset_power(const MonomialSet& m, long h);

// Hilbert function H(u) = #(M_0^{+u_0} + M_1^{+u_1} + ... + M_s^{+u_s}).
// The evaluator memoizes per configuration; counts of neighbouring grid
// points share almost all of their work.  The memo is not synchronized:
// use one evaluator per thread (configurations themselves are immutable).
class HilbertEvaluator {
 public:
  explicit HilbertEvaluator(const MonomialConfiguration& c);
  ~HilbertEvaluator();
  HilbertEvaluator(HilbertEvaluator&&) noexcept;

  long long value(const MultiIndex& u);

  // Counts at base + delta for every 0 <= delta <= extra (componentwise).
  std::map<MultiIndex, long long> box(const MultiIndex& base, const MultiIndex& extra);

  // Counts at t * lambda for t = t0, ..., t1.
  std::vector<long long> ray(const MultiIndex& lambda, long t0, long t1);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

long long hilbert_value(const MonomialConfiguration& c, const MultiIndex& u);

struct FdOptions {
  long base_override = 0;  // 0: use the default window start
  int max_doublings = 4;
};

long default_fd_base(const MonomialConfiguration& c);

// e_alpha via the iterated finite difference of H at a stabilized window;
// |alpha| must equal num_vars - 1 (the Hilbert polynomial degree).
long long mixed_multiplicity_fd(const MonomialConfiguration& c, const MultiIndex& alpha,
                                const FdOptions& opts = {});

struct FdComputation {
  long long value = 0;
  long base_used = 0;  // window start the difference stabilized at
  int doublings = 0;
};

FdComputation mixed_multiplicity_fd_info(const MonomialConfiguration& c,
                                         const MultiIndex& alpha, const FdOptions& opts = {});

// Multiplicity of the diagonal subalgebra along a positive lambda:
// r! * leading coefficient of t -> H(t * lambda).
long long diagonal_multiplicity(const MonomialConfiguration& c, const MultiIndex& lambda,
                                const FdOptions& opts = {});

struct MixedMultiplicityVector {
  long total_degree = 0;
  std::map<MultiIndex, long long> values;  // every |alpha| = total_degree
};

// Recovers every e_alpha at once by solving the linear system the diagonal
// multiplicities satisfy over a unisolvent family of lambdas; a held-out
// lambda validates the solution.
MixedMultiplicityVector mixed_mults_via_diagonals(const MonomialConfiguration& c,
                                                  const FdOptions& opts = {});

// Mixed volume through the algebraic route: homogenize the generator sets
// (after translating into the non-negative orthant) and extract
// e_(0,1,...,1) of the resulting configuration.
long long mv_via_algebra(const PolytopeTuple& t, const FdOptions& opts = {});

// Builds the homogenized configuration mv_via_algebra works with.
MonomialConfiguration configuration_of_tuple(const PolytopeTuple& t);

struct DegreeLawReport {
  long expected = 0;       // num_vars - 1
  bool top_nonzero = false;
  bool higher_vanish = false;
  long observed = -1;      // equals expected when both checks pass
};

DegreeLawReport verify_degree_law(const MonomialConfiguration& c, const FdOptions& opts = {});

struct ProbeAfReport {
  long long e = 0;    // e_alpha(m | J_1, J_2, J_3, ...)
  long long e11 = 0;  // e_alpha(m | J_1, J_1, J_3, ...)
  long long e22 = 0;  // e_alpha(m | J_2, J_2, J_3, ...)
  long long lhs = 0;  // e^2
  long long rhs = 0;  // e11 * e22
  int comparison = 0;  // sign of lhs - rhs
  bool hypothesis_ok = false;
};

// Reports both sides of the open inequality for alpha = (0,1,...,1);
// no relation is asserted.
ProbeAfReport probe_af(const MonomialConfiguration& c, const FdOptions& opts = {});

}  // namespace mixedvol
